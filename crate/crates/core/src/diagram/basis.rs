//! Fusion-tree bases of Hom spaces, the trace pairing and dual bases.

use crate::exactnum::{Cyclotomic, ExactMatrix};
use crate::fusion::{quantum_dims, CategorySpec, Label, Mor, Obj};

use super::{BoundaryWord, DiagramError};

/// A left-nested fusion tree `((x1 x2)_{e2} x3)_{e3} ...`: the intermediate
/// charges `e2, ..., en` (the last is the total charge) and the channel index
/// at each vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FusionTree {
    pub charges: Vec<Label>,
    pub channels: Vec<usize>,
}

/// Trees of `letters` with total charge `charge`, in the order used by the
/// left-nested tensor basis.
pub fn fusion_trees(spec: &CategorySpec, letters: &[Label], charge: Label) -> Vec<FusionTree> {
    match letters.len() {
        0 => {
            if charge == spec.unit() {
                vec![FusionTree { charges: vec![], channels: vec![] }]
            } else {
                vec![]
            }
        }
        1 => {
            if letters[0] == charge {
                vec![FusionTree { charges: vec![], channels: vec![] }]
            } else {
                vec![]
            }
        }
        n => {
            let last = letters[n - 1];
            let mut out = Vec::new();
            for x in 0..spec.rank() {
                let nxy = spec.n(x, last, charge);
                if nxy == 0 {
                    continue;
                }
                for t in fusion_trees(spec, &letters[..n - 1], x) {
                    for mu in 0..nxy {
                        let mut t2 = t.clone();
                        t2.charges.push(charge);
                        t2.channels.push(mu);
                        out.push(t2);
                    }
                }
            }
            out
        }
    }
}

/// One basis element: the elementary map sending `src_tree` to `tgt_tree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomElement {
    pub charge: Label,
    pub src_tree: FusionTree,
    pub tgt_tree: FusionTree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBasis {
    pub source: BoundaryWord,
    pub target: BoundaryWord,
    pub elements: Vec<HomElement>,
}

/// The canonical basis of `Hom(LN(source), LN(target))`, ordered by charge,
/// then target tree, then source tree.
pub fn hom_basis(spec: &CategorySpec, source: &BoundaryWord, target: &BoundaryWord) -> HomBasis {
    let (s, t) = (source.letters(spec), target.letters(spec));
    let mut elements = Vec::new();
    for c in 0..spec.rank() {
        let st = fusion_trees(spec, &s, c);
        for tt in fusion_trees(spec, &t, c) {
            for s_tree in &st {
                elements.push(HomElement { charge: c, src_tree: s_tree.clone(), tgt_tree: tt.clone() });
            }
        }
    }
    HomBasis { source: source.clone(), target: target.clone(), elements }
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Coordinates of `f` in this basis.
    pub fn coordinates(f: &Mor) -> Vec<Cyclotomic> {
        f.blocks().iter().flat_map(|b| (0..b.rows()).flat_map(move |i| (0..b.cols()).map(move |j| b.get(i, j).clone()))).collect()
    }

    /// The morphism with the given coordinates.
    pub fn from_coordinates(src: &Obj, tgt: &Obj, v: &[Cyclotomic]) -> Mor {
        let mut m = Mor::zero(src, tgt);
        let mut it = v.iter();
        for c in 0..src.mults().len() {
            let b = m.block_mut(c);
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    b.set(i, j, it.next().expect("coordinate count").clone());
                }
            }
        }
        m
    }

    /// All elementary morphisms of `Hom(src, tgt)` in coordinate order.
    pub fn elementary(src: &Obj, tgt: &Obj) -> Vec<Mor> {
        let n: usize = (0..src.mults().len()).map(|c| src.mult(c) * tgt.mult(c)).sum();
        (0..n)
            .map(|k| {
                let mut v = vec![Cyclotomic::zero(); n];
                v[k] = Cyclotomic::one();
                Self::from_coordinates(src, tgt, &v)
            })
            .collect()
    }
}

/// The trace pairing `(f, g) = Tr(g ∘ f)` of `f: X -> Y` and `g: Y -> X`.
pub fn hom_pairing(spec: &CategorySpec, f: &Mor, g: &Mor) -> Result<Cyclotomic, DiagramError> {
    let dims = quantum_dims(spec).weights;
    Ok(g.after(f)?.trace(&dims))
}

/// A basis of `Hom(X, Y)` and the dual basis of `Hom(Y, X)` under the trace
/// pairing.
pub fn dual_basis(spec: &CategorySpec, x: &Obj, y: &Obj) -> Result<(Vec<Mor>, Vec<Mor>), DiagramError> {
    let phi = HomBasis::elementary(x, y);
    let e = HomBasis::elementary(y, x);
    let n = phi.len();
    if n == 0 {
        return Ok((phi, vec![]));
    }
    let mut gram = ExactMatrix::zeros(n, n);
    for (i, p) in phi.iter().enumerate() {
        for (j, q) in e.iter().enumerate() {
            gram.set(i, j, hom_pairing(spec, p, q)?);
        }
    }
    let m = gram.transpose().inverse().map_err(|_| DiagramError::DegeneratePairing)?;
    let dual = (0..n)
        .map(|i| {
            let mut acc = Mor::zero(y, x);
            for (j, q) in e.iter().enumerate() {
                let c = m.get(i, j);
                if !c.is_zero() {
                    acc = acc.add(&q.scale(c)).expect("parallel");
                }
            }
            acc
        })
        .collect();
    Ok((phi, dual))
}

/// `Σ_i dim(i) Σ_l φ^l ∘ φ_l` over a basis `φ_l` of `Hom(W, i)` and its dual
/// basis; equal to the identity of `W`.
pub fn omega_resolution(spec: &CategorySpec, w: &Obj) -> Result<Mor, DiagramError> {
    let dims = quantum_dims(spec).weights;
    let mut acc = Mor::zero(w, w);
    for i in 0..spec.rank() {
        let oi = Obj::simple(spec, i);
        let (phi, dual) = dual_basis(spec, w, &oi)?;
        for (p, q) in phi.iter().zip(&dual) {
            acc = acc.add(&q.after(p)?.scale(&dims[i]))?;
        }
    }
    Ok(acc)
}
