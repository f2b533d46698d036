//! The induced object `X_σ = ⊕_a X_1 ⊗ … ⊗ X_n ⊗ X ⊗ X_{n+1} ⊗ … ⊗ X_{2n}`
//! and its induced half-braidings, one per orbit.
//!
//! Orbit `[k]` carries a free label `a` at its low leg and `a*` at its high
//! leg. The half-braiding `γ_{[k],z}` drags `z` in from the left, fuses it
//! into `a` at the low leg, splits the dual vertex off at the high leg and
//! drags the freed `z` out to the right. The `a ⊗ a*` pair is the resolved
//! Ω loop, so the sum over fusion channels is the Ω crossing.

use std::collections::HashMap;

use crate::diagram::WordOps;
use crate::exactnum::ExactMatrix;
use crate::fusion::{Calculus, CategorySpec, Label, Mor, Obj};
use crate::gluing::{Gluing, OrbitInfo};

use super::{premodular, CenterError, FormalObject};

/// One tensor word of `X_σ`: orbit labels, the simple of `X` and its copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSummand {
    pub labels: Vec<Label>,
    pub x: Label,
    pub copy: usize,
    pub word: Vec<Label>,
}

/// `X_σ` presented as a direct sum of left-nested words.
#[derive(Clone, Debug)]
pub struct InducedObject {
    pub sigma: Gluing,
    pub base: FormalObject,
    pub orbits: Vec<OrbitInfo>,
    pub summands: Vec<InducedSummand>,
    pub carrier: Obj,
    index: HashMap<(Vec<Label>, Label, usize), usize>,
}

impl InducedObject {
    pub fn new(spec: &CategorySpec, sigma: &Gluing, base: &FormalObject) -> Self {
        let n = sigma.n();
        let orbits = sigma.orbits();
        let k = spec.rank();
        let mut summands = Vec::new();
        let mut index = HashMap::new();
        let assignments = (0..k.pow(orbits.len() as u32)).map(|mut code| {
            let mut labels = vec![0; orbits.len()];
            for slot in labels.iter_mut().rev() {
                *slot = code % k;
                code /= k;
            }
            labels
        });
        for labels in assignments {
            for (x, copy) in base.parts() {
                let mut word = vec![0; 2 * n + 1];
                for (o, orb) in orbits.iter().enumerate() {
                    word[Self::leg_index(n, orb.low)] = labels[o];
                    word[Self::leg_index(n, orb.high)] = spec.dual(labels[o]);
                }
                word[n] = x;
                index.insert((labels.clone(), x, copy), summands.len());
                summands.push(InducedSummand { labels: labels.clone(), x, copy, word });
            }
        }
        let carrier = Obj::sum(spec, summands.iter().map(|s| Obj::word(spec, &s.word)).collect());
        InducedObject { sigma: sigma.clone(), base: base.clone(), orbits, summands, carrier, index }
    }

    /// Word position of the 1-based leg `leg`; `X` sits after leg `n`.
    pub fn leg_index(n: usize, leg: usize) -> usize {
        if leg <= n {
            leg - 1
        } else {
            leg
        }
    }

    pub fn summand_index(&self, labels: &[Label], x: Label, copy: usize) -> Option<usize> {
        self.index.get(&(labels.to_vec(), x, copy)).copied()
    }

    /// `ι: X -> X_σ`, the inclusion into the summands with every orbit label trivial.
    pub fn unit_inclusion(&self, spec: &CategorySpec) -> Mor {
        let x = self.base.presented(spec);
        let ones = vec![spec.unit(); self.orbits.len()];
        let mut m = Mor::zero(&x, &self.carrier);
        for (r, (a, copy)) in self.base.parts().into_iter().enumerate() {
            let s = self.summand_index(&ones, a, copy).expect("unit summand");
            let row = self.carrier.summand_offset(spec, s, a);
            let col = if x.summands().is_some() { x.summand_offset(spec, r, a) } else { 0 };
            m.block_mut(a).set(row, col, crate::exactnum::Cyclotomic::one());
        }
        m
    }

    /// `p_1: X_σ -> X`, the projection onto the same summands.
    pub fn unit_projection(&self, spec: &CategorySpec) -> Mor {
        let i = self.unit_inclusion(spec);
        let blocks = i.blocks().iter().map(ExactMatrix::transpose).collect();
        Mor::from_blocks(i.tgt(), i.src(), blocks).expect("transposed shape")
    }
}

/// Inclusion of summand `s` into a direct sum.
pub(crate) fn inclusion(spec: &CategorySpec, sum: &Obj, s: usize) -> Mor {
    let part = &sum.summands().expect("direct sum")[s];
    let mut m = Mor::zero(part, sum);
    for d in 0..spec.rank() {
        let off = sum.summand_offset(spec, s, d);
        for i in 0..part.mult(d) {
            m.block_mut(d).set(off + i, i, crate::exactnum::Cyclotomic::one());
        }
    }
    m
}

/// Projection of a direct sum onto summand `s`.
pub(crate) fn projection(spec: &CategorySpec, sum: &Obj, s: usize) -> Mor {
    let i = inclusion(spec, sum, s);
    let blocks = i.blocks().iter().map(ExactMatrix::transpose).collect();
    Mor::from_blocks(i.tgt(), i.src(), blocks).expect("transposed shape")
}

/// Decomposition of `X_σ` by fusion counting alone.
pub fn induce_object(spec: &CategorySpec, sigma: &Gluing, x: &FormalObject) -> FormalObject {
    let k = spec.rank();
    let orbits = sigma.orbits();
    let n = sigma.n();
    let mut out = vec![0usize; k];
    for code in 0..k.pow(orbits.len() as u32) {
        let mut c = code;
        let mut word = vec![None; 2 * n];
        for orb in orbits.iter().rev() {
            let a = c % k;
            c /= k;
            word[orb.low - 1] = Some(a);
            word[orb.high - 1] = Some(spec.dual(a));
        }
        let mut acc = vec![0usize; k];
        acc[spec.unit()] = 1;
        let fuse = |acc: &Vec<usize>, m: &[usize]| {
            let mut next = vec![0usize; k];
            for (e, &ae) in acc.iter().enumerate().filter(|(_, &v)| v > 0) {
                for (f, &mf) in m.iter().enumerate().filter(|(_, &v)| v > 0) {
                    for (d, slot) in next.iter_mut().enumerate() {
                        *slot += ae * mf * spec.n(e, f, d);
                    }
                }
            }
            next
        };
        let simple = |a: Label| {
            let mut v = vec![0usize; k];
            v[a] = 1;
            v
        };
        for (pos, l) in word.iter().enumerate() {
            if pos == n {
                acc = fuse(&acc, &x.multiplicities);
            }
            acc = fuse(&acc, &simple(l.expect("every leg is labelled")));
        }
        if n == 0 {
            acc = fuse(&acc, &x.multiplicities);
        }
        for d in 0..k {
            out[d] += acc[d];
        }
    }
    FormalObject { multiplicities: out }
}

/// A half-braiding `γ_z: z ⊗ X -> X ⊗ z` given on every simple `z`.
#[derive(Clone, Debug)]
pub struct HalfBraiding {
    pub carrier: Obj,
    pub blocks: Vec<Mor>,
}

/// A carrier with one half-braiding per orbit, orbits ordered by low leg.
#[derive(Clone, Debug)]
pub struct SigmaPair {
    pub sigma: Gluing,
    pub carrier: Obj,
    pub braidings: Vec<HalfBraiding>,
}

impl SigmaPair {
    pub fn formal(&self) -> FormalObject {
        FormalObject::of_obj(&self.carrier)
    }
}

/// Crossing choices for the two transports in `γ`: `pre` for the strand
/// entering from the left, `post` for the strand leaving to the right.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Crossings {
    pub pre_over: bool,
    pub post_over: bool,
}

/// The argument strand passes behind the word on both sides.
pub(crate) const CROSSINGS: Crossings = Crossings { pre_over: false, post_over: false };

/// `ψ: a* -> c* ⊗ z`, the dual partner of the fusion vertex `z ⊗ a -> c`.
fn dual_vertex(calc: &Calculus, z: Label, a: Label, c: Label, mu: usize) -> Result<Mor, CenterError> {
    let spec = calc.spec;
    let (oz, oa) = (calc.simple(z), calc.simple(a));
    let (oad, ocd) = (calc.simple(spec.dual(a)), calc.simple(spec.dual(c)));
    let za = calc.tensor(&oz, &oa);
    Ok(Mor::chain(&[
        calc.lunit(&oad).inverse()?,
        calc.right_id(&calc.coev_right(c), &oad),
        calc.right_id(&calc.left_id(&ocd, &calc.split(z, a, c, mu)), &oad),
        calc.assoc(&ocd, &za, &oad),
        calc.left_id(&ocd, &calc.assoc(&oz, &oa, &oad)),
        calc.left_id(&ocd, &calc.left_id(&oz, &calc.ev_right(a))),
        calc.left_id(&ocd, &calc.runit(&oz)),
    ])?)
}

/// Block contributions of `γ_{[k],z}` on one summand: target summand and
/// the map `LN([z] ++ w_s) -> LN(w_t ++ [z])`.
fn gamma_on_summand(
    ops: &WordOps,
    ind: &InducedObject,
    s: usize,
    k: usize,
    z: Label,
    cr: Crossings,
) -> Result<Vec<(usize, Mor)>, CenterError> {
    let spec = ops.spec();
    let n = ind.sigma.n();
    let sm = &ind.summands[s];
    let p = InducedObject::leg_index(n, ind.orbits[k].low);
    let q = InducedObject::leg_index(n, ind.orbits[k].high);
    let a = sm.labels[k];
    let mut ext = vec![z];
    ext.extend_from_slice(&sm.word);
    let (t1, e1) = ops.transport(&ext, 0, p, cr.pre_over)?;
    let mut out: Vec<(usize, Mor)> = Vec::new();
    for c in spec.fusion_channels(z, a) {
        let mut labels = sm.labels.clone();
        labels[k] = c;
        let t = ind.summand_index(&labels, sm.x, sm.copy).expect("target summand");
        for mu in 0..spec.n(z, a, c) {
            let merge = ops.calc.merge(z, a, c, mu);
            let m = ops.local(&e1, p, 2, &merge, &[c])?;
            let e2 = WordOps::replaced(&e1, p, 2, &[c]);
            let cd = spec.dual(c);
            let psi = dual_vertex(&ops.calc, z, a, c, mu)?;
            let m2 = ops.local(&e2, q, 1, &psi, &[cd, z])?;
            let e3 = WordOps::replaced(&e2, q, 1, &[cd, z]);
            let (t2, e4) = ops.transport(&e3, q + 1, e3.len() - 1, cr.post_over)?;
            debug_assert_eq!(&e4[..e4.len() - 1], ind.summands[t].word.as_slice());
            let total = Mor::chain(&[t1.clone(), m, m2, t2])?;
            match out.iter_mut().find(|(tt, _)| *tt == t) {
                Some((_, acc)) => *acc = acc.add(&total)?,
                None => out.push((t, total)),
            }
        }
    }
    Ok(out)
}

pub(crate) fn induced_gamma(
    ops: &WordOps,
    ind: &InducedObject,
    k: usize,
    z: Label,
    cr: Crossings,
) -> Result<Mor, CenterError> {
    let spec = ops.spec();
    let calc = &ops.calc;
    let oz = calc.simple(z);
    let src = calc.tensor(&oz, &ind.carrier);
    let tgt = calc.tensor(&ind.carrier, &oz);
    let mut acc = Mor::zero(&src, &tgt);
    for s in 0..ind.summands.len() {
        let ws = &ind.summands[s].word;
        let into = Mor::chain(&[
            calc.left_id(&oz, &projection(spec, &ind.carrier, s)),
            ops.join_word(&[z], ws)?,
        ])?;
        for (t, body) in gamma_on_summand(ops, ind, s, k, z, cr)? {
            let wt = calc.word(&ind.summands[t].word);
            let body = body.retyped(body.src(), &calc.tensor(&wt, &oz));
            let out = calc.right_id(&inclusion(spec, &ind.carrier, t), &oz);
            acc = acc.add(&Mor::chain(&[into.clone(), body, out])?)?;
        }
    }
    Ok(acc)
}

pub(crate) fn induced_with(
    spec: &CategorySpec,
    sigma: &Gluing,
    x: &FormalObject,
    cr: Crossings,
) -> Result<(InducedObject, SigmaPair), CenterError> {
    premodular(spec)?;
    let ind = InducedObject::new(spec, sigma, x);
    let ops = WordOps::new(spec);
    let mut braidings = Vec::with_capacity(ind.orbits.len());
    for k in 0..ind.orbits.len() {
        let blocks = (0..spec.rank())
            .map(|z| induced_gamma(&ops, &ind, k, z, cr))
            .collect::<Result<Vec<_>, _>>()?;
        braidings.push(HalfBraiding { carrier: ind.carrier.clone(), blocks });
    }
    let pair = SigmaPair { sigma: sigma.clone(), carrier: ind.carrier.clone(), braidings };
    Ok((ind, pair))
}

/// The induced σ-pair `I_σ(X)` on the carrier `X_σ`.
pub fn induced_half_braidings(
    spec: &CategorySpec,
    sigma: &Gluing,
    x: &FormalObject,
) -> Result<(InducedObject, SigmaPair), CenterError> {
    induced_with(spec, sigma, x, CROSSINGS)
}

/// The induced pair with explicit crossing choices; only the default
/// (`false`, `false`) satisfies the σ-pair axioms in general.
pub fn induced_with_crossings(
    spec: &CategorySpec,
    sigma: &Gluing,
    x: &FormalObject,
    pre_over: bool,
    post_over: bool,
) -> Result<(InducedObject, SigmaPair), CenterError> {
    induced_with(spec, sigma, x, Crossings { pre_over, post_over })
}
