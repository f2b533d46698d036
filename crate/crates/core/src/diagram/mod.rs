//! Exact evaluation of planar ribbon diagrams in left-nested fusion-tree
//! bases.
//!
//! Diagrams are read top to bottom. Each slice is a row of generators placed
//! side by side; the boundary word below one slice must equal the word above
//! the next. Strand colors are simple labels or Ω variables (`%w`), the
//! latter summed by [`omega_expand`] with weight `dim(label)` per variable.

mod basis;
mod engine;
mod text;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactnum::Cyclotomic;
use crate::fusion::{twists, CategorySpec, FusionError, Label, Mor, Obj};

pub use basis::{dual_basis, fusion_trees, hom_basis, hom_pairing, omega_resolution, FusionTree, HomBasis, HomElement};
pub use engine::WordOps;
pub use text::{diagram_text, parse_diagram};

/// Elements of Hom spaces are block matrices over the canonical trees.
pub type MorphismMatrix = Mor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("ill-formed diagram at slice {slice}: {detail}")]
    IllFormed { slice: usize, detail: String },
    #[error("parse error on line {line}: {detail}")]
    Parse { line: usize, detail: String },
    #[error("Ω variable {0} was not expanded")]
    Unexpanded(String),
    #[error("degenerate pairing on a Hom space; the category data is inconsistent")]
    DegeneratePairing,
    #[error(transparent)]
    Fusion(#[from] FusionError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orient {
    Plus,
    Minus,
}

/// A boundary of a diagram: labels with orientations. A `Minus` point
/// carries the dual label internally.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BoundaryWord(pub Vec<(Label, Orient)>);

impl BoundaryWord {
    pub fn plus(labels: &[Label]) -> Self {
        BoundaryWord(labels.iter().map(|&l| (l, Orient::Plus)).collect())
    }

    /// Letters of the underlying left-nested object.
    pub fn letters(&self, spec: &CategorySpec) -> Vec<Label> {
        self.0
            .iter()
            .map(|&(l, o)| match o {
                Orient::Plus => l,
                Orient::Minus => spec.dual(l),
            })
            .collect()
    }
}

/// A strand color: a fixed simple label or an Ω variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Label(Label),
    Omega(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Id(Color, Orient),
    /// `over`: the braiding `c`; otherwise the inverse braiding.
    Cross { over: bool },
    /// `coev: 1 -> a a*`.
    Cup(Color),
    /// `coev': 1 -> a* a`.
    CupRight(Color),
    /// `ev: a* a -> 1`.
    Cap(Color),
    /// `ev': a a* -> 1`.
    CapRight(Color),
    Merge { a: Color, b: Color, c: Color, mu: usize },
    Split { c: Color, a: Color, b: Color, mu: usize },
    Twist { color: Color, inverse: bool },
    Coupon(String),
}

/// A named morphism box between two words.
#[derive(Clone, Debug)]
pub struct Coupon {
    pub src: Vec<Label>,
    pub tgt: Vec<Label>,
    pub mor: Mor,
}

#[derive(Clone, Debug, Default)]
pub struct Diagram {
    /// Declared top boundary; needed when the first slice starts with a crossing.
    pub source: Option<Vec<(Color, Orient)>>,
    pub slices: Vec<Vec<Generator>>,
    pub coupons: BTreeMap<String, Coupon>,
}

impl Diagram {
    /// `self` followed by `below`.
    pub fn stack(&self, below: &Diagram) -> Diagram {
        let mut d = self.clone();
        d.slices.extend(below.slices.iter().cloned());
        d.coupons.extend(below.coupons.clone());
        d
    }

    pub fn add_coupon(&mut self, spec: &CategorySpec, name: &str, src: &[Label], tgt: &[Label], mor: Mor) -> Result<(), DiagramError> {
        if *mor.src() != Obj::word(spec, src) || *mor.tgt() != Obj::word(spec, tgt) {
            return Err(DiagramError::Fusion(FusionError::Shape(format!("coupon {name} does not match its words"))));
        }
        self.coupons.insert(name.to_string(), Coupon { src: src.to_vec(), tgt: tgt.to_vec(), mor });
        Ok(())
    }

    /// All Ω variable names, sorted.
    pub fn omega_vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut note = |c: &Color| {
            if let Color::Omega(v) = c {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
        };
        for (c, _) in self.source.iter().flatten() {
            note(c);
        }
        for g in self.slices.iter().flatten() {
            match g {
                Generator::Id(c, _) | Generator::Cup(c) | Generator::CupRight(c) | Generator::Cap(c) | Generator::CapRight(c) => note(c),
                Generator::Twist { color, .. } => note(color),
                Generator::Merge { a, b, c, .. } | Generator::Split { a, b, c, .. } => {
                    note(a);
                    note(b);
                    note(c);
                }
                Generator::Cross { .. } | Generator::Coupon(_) => {}
            }
        }
        out.sort();
        out
    }
}

fn arity(d: &Diagram, g: &Generator, slice: usize) -> Result<usize, DiagramError> {
    Ok(match g {
        Generator::Id(..) | Generator::Split { .. } | Generator::Twist { .. } => 1,
        Generator::Cross { .. } | Generator::Cap(_) | Generator::CapRight(_) | Generator::Merge { .. } => 2,
        Generator::Cup(_) | Generator::CupRight(_) => 0,
        Generator::Coupon(n) => d
            .coupons
            .get(n)
            .ok_or_else(|| DiagramError::IllFormed { slice, detail: format!("unknown coupon {n}") })?
            .src
            .len(),
    })
}

struct Evaluator<'a, 'b> {
    ops: WordOps<'a>,
    assign: &'b BTreeMap<String, Label>,
    theta: Option<Vec<Cyclotomic>>,
}

impl Evaluator<'_, '_> {
    fn color(&self, c: &Color) -> Result<Label, DiagramError> {
        match c {
            Color::Label(l) => Ok(*l),
            Color::Omega(v) => self.assign.get(v).copied().ok_or_else(|| DiagramError::Unexpanded(v.clone())),
        }
    }

    fn spec(&self) -> &CategorySpec {
        self.ops.spec()
    }

    /// Expected input letters (None where any letter is accepted) and the
    /// local morphism with its output letters.
    fn generator(&mut self, d: &Diagram, g: &Generator, input: &[Label], slice: usize) -> Result<(Mor, Vec<Label>), DiagramError> {
        let spec = self.spec();
        let calc = &self.ops.calc;
        let bad = |detail: String| DiagramError::IllFormed { slice, detail };
        let expect = |want: &[Label]| -> Result<(), DiagramError> {
            if want != input {
                let names = |w: &[Label]| w.iter().map(|&l| spec.label_name(l)).collect::<Vec<_>>().join(" ");
                return Err(bad(format!("generator {g:?} expects [{}] but the strands are [{}]", names(want), names(input))));
            }
            Ok(())
        };
        Ok(match g {
            Generator::Id(c, o) => {
                let l = self.color(c)?;
                let l = if *o == Orient::Minus { spec.dual(l) } else { l };
                expect(&[l])?;
                (Mor::identity(&calc.simple(l)), vec![l])
            }
            Generator::Cross { over } => {
                let (x, y) = (calc.simple(input[0]), calc.simple(input[1]));
                let m = if *over { calc.braid(&x, &y) } else { calc.braid_inv(&x, &y) };
                (m, vec![input[1], input[0]])
            }
            Generator::Cup(c) => {
                let a = self.color(c)?;
                (calc.coev(a), vec![a, spec.dual(a)])
            }
            Generator::CupRight(c) => {
                let a = self.color(c)?;
                (calc.coev_right(a), vec![spec.dual(a), a])
            }
            Generator::Cap(c) => {
                let a = self.color(c)?;
                expect(&[spec.dual(a), a])?;
                (calc.ev(a), vec![])
            }
            Generator::CapRight(c) => {
                let a = self.color(c)?;
                expect(&[a, spec.dual(a)])?;
                (calc.ev_right(a), vec![])
            }
            Generator::Merge { a, b, c, mu } => {
                let (a, b, c) = (self.color(a)?, self.color(b)?, self.color(c)?);
                expect(&[a, b])?;
                if *mu >= spec.n(a, b, c) {
                    return Err(bad(format!("no fusion channel #{mu} for merge")));
                }
                (calc.merge(a, b, c, *mu), vec![c])
            }
            Generator::Split { c, a, b, mu } => {
                let (a, b, c) = (self.color(a)?, self.color(b)?, self.color(c)?);
                expect(&[c])?;
                if *mu >= spec.n(a, b, c) {
                    return Err(bad(format!("no fusion channel #{mu} for split")));
                }
                (calc.split(a, b, c, *mu), vec![a, b])
            }
            Generator::Twist { color, inverse } => {
                let a = self.color(color)?;
                expect(&[a])?;
                if self.theta.is_none() {
                    self.theta = Some(twists(spec)?);
                }
                let t = &self.theta.as_ref().expect("computed")[a];
                let t = if *inverse { t.inv().map_err(|_| FusionError::Singular)? } else { t.clone() };
                (Mor::identity(&calc.simple(a)).scale(&t), vec![a])
            }
            Generator::Coupon(n) => {
                let cp = &d.coupons[n];
                expect(&cp.src)?;
                (cp.mor.clone(), cp.tgt.clone())
            }
        })
    }

    fn top(&self, d: &Diagram) -> Result<Vec<Label>, DiagramError> {
        let spec = self.spec();
        if let Some(src) = &d.source {
            return src
                .iter()
                .map(|(c, o)| {
                    let l = self.color(c)?;
                    Ok(if *o == Orient::Minus { spec.dual(l) } else { l })
                })
                .collect();
        }
        let mut w = Vec::new();
        for g in d.slices.first().into_iter().flatten() {
            match g {
                Generator::Id(c, o) => {
                    let l = self.color(c)?;
                    w.push(if *o == Orient::Minus { spec.dual(l) } else { l });
                }
                Generator::Cup(_) | Generator::CupRight(_) => {}
                Generator::Cap(c) => {
                    let a = self.color(c)?;
                    w.extend([spec.dual(a), a]);
                }
                Generator::CapRight(c) => {
                    let a = self.color(c)?;
                    w.extend([a, spec.dual(a)]);
                }
                Generator::Merge { a, b, .. } => w.extend([self.color(a)?, self.color(b)?]),
                Generator::Split { c, .. } => w.push(self.color(c)?),
                Generator::Twist { color, .. } => w.push(self.color(color)?),
                Generator::Coupon(n) => w.extend(
                    d.coupons
                        .get(n)
                        .ok_or_else(|| DiagramError::IllFormed { slice: 0, detail: format!("unknown coupon {n}") })?
                        .src
                        .iter()
                        .copied(),
                ),
                Generator::Cross { .. } => {
                    return Err(DiagramError::IllFormed {
                        slice: 0,
                        detail: "a crossing in the first slice needs a declared source".into(),
                    })
                }
            }
        }
        Ok(w)
    }

    fn eval(&mut self, d: &Diagram) -> Result<(Mor, Vec<Label>, Vec<Label>), DiagramError> {
        let top = self.top(d)?;
        let mut word = top.clone();
        let mut acc = Mor::identity(&self.ops.obj(&word));
        for (si, slice) in d.slices.iter().enumerate() {
            let total: usize = slice.iter().map(|g| arity(d, g, si)).sum::<Result<usize, _>>()?;
            if total != word.len() {
                return Err(DiagramError::IllFormed {
                    slice: si,
                    detail: format!("slice consumes {total} strands but {} arrive", word.len()),
                });
            }
            let mut pos = 0;
            for g in slice {
                let m = arity(d, g, si)?;
                let input = word[pos..pos + m].to_vec();
                let (local, out) = self.generator(d, g, &input, si)?;
                let step = self.ops.local(&word, pos, m, &local, &out)?;
                acc = step.after(&acc)?;
                word = WordOps::replaced(&word, pos, m, &out);
                pos += out.len();
            }
        }
        Ok((acc, top, word))
    }
}

/// Evaluates a diagram without Ω variables. The result maps the left-nested
/// top word to the left-nested bottom word.
pub fn eval_diagram(spec: &CategorySpec, d: &Diagram) -> Result<Mor, DiagramError> {
    let empty = BTreeMap::new();
    let mut ev = Evaluator { ops: WordOps::new(spec), assign: &empty, theta: None };
    Ok(ev.eval(d)?.0)
}

/// Sums over all labelings of the Ω variables, each weighted by the product
/// of the quantum dimensions. When open Ω strands make the boundary depend on
/// the labeling, the result is block-diagonal between the direct sums of the
/// boundary words, one summand per labeling in lexicographic order.
pub fn omega_expand(spec: &CategorySpec, d: &Diagram) -> Result<Mor, DiagramError> {
    let vars = d.omega_vars();
    let dims = crate::fusion::quantum_dims(spec).weights;
    let k = spec.rank();
    let count = k.pow(vars.len() as u32);
    let mut parts = Vec::with_capacity(count);
    for idx in 0..count {
        let mut assign = BTreeMap::new();
        let mut rest = idx;
        let mut weight = Cyclotomic::one();
        for v in vars.iter().rev() {
            let l = rest % k;
            rest /= k;
            weight *= &dims[l];
            assign.insert(v.clone(), l);
        }
        let mut ev = Evaluator { ops: WordOps::new(spec), assign: &assign, theta: None };
        let (m, top, bottom) = ev.eval(d)?;
        parts.push((m.scale(&weight), top, bottom));
    }
    let same = parts.windows(2).all(|w| w[0].1 == w[1].1 && w[0].2 == w[1].2);
    if same {
        let mut it = parts.into_iter();
        let (mut acc, _, _) = it.next().expect("at least one labeling");
        for (m, _, _) in it {
            acc = acc.add(&m)?;
        }
        return Ok(acc);
    }
    let src = Obj::sum(spec, parts.iter().map(|p| p.0.src().clone()).collect());
    let tgt = Obj::sum(spec, parts.iter().map(|p| p.0.tgt().clone()).collect());
    let mut out = Mor::zero(&src, &tgt);
    for (s, (m, _, _)) in parts.iter().enumerate() {
        for c in 0..k {
            let (r0, c0) = (tgt.summand_offset(spec, s, c), src.summand_offset(spec, s, c));
            out.block_mut(c).place(r0, c0, m.block(c));
        }
    }
    Ok(out)
}
