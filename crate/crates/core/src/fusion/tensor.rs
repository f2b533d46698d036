//! Skeletal tensor calculus.
//!
//! An [`Obj`] is a semisimple object presented by an ordered basis of each
//! of its multiplicity spaces; a [`Mor`] is one matrix per simple charge.
//! Tensor products, direct sums, associators, braidings, unitors and the
//! duality maps of simple objects are all expressed in these bases, so
//! every morphism the crate manipulates is an explicit list of block
//! matrices.

use std::fmt;
use std::sync::Arc;

use crate::exactnum::{Cyclotomic, ExactMatrix};

use super::{CategorySpec, FusionError, Label};

#[derive(Debug, PartialEq, Eq, Hash)]
enum Shape {
    Unit,
    Simple(Label),
    Tensor(Obj, Obj),
    Sum(Vec<Obj>),
    /// An opaque object with the given multiplicities, e.g. a subobject.
    Free(String),
}

#[derive(Debug)]
struct ObjInner {
    shape: Shape,
    mult: Vec<usize>,
    /// Tensor: start offset of the `(a, b)` sector in charge `d`, stored at
    /// `(d * k + a) * k + b`. Sum: start offset of summand `s` in charge `d`,
    /// stored at `s * k + d`.
    offsets: Vec<usize>,
}

/// An object together with ordered bases of its multiplicity spaces.
#[derive(Clone)]
pub struct Obj(Arc<ObjInner>);

impl PartialEq for Obj {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.mult == other.0.mult && self.0.shape == other.0.shape)
    }
}

impl Eq for Obj {}

impl std::hash::Hash for Obj {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.mult.hash(state);
    }
}

impl fmt::Debug for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.shape {
            Shape::Unit => write!(f, "1"),
            Shape::Simple(l) => write!(f, "#{l}"),
            Shape::Tensor(a, b) => write!(f, "({a:?} x {b:?})"),
            Shape::Sum(s) => {
                write!(f, "[")?;
                for (i, o) in s.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{o:?}")?;
                }
                write!(f, "]")
            }
            Shape::Free(name) => write!(f, "{name}{:?}", self.0.mult),
        }
    }
}

impl Obj {
    pub fn unit(spec: &CategorySpec) -> Obj {
        let mut mult = vec![0; spec.rank()];
        mult[spec.unit()] = 1;
        Obj(Arc::new(ObjInner { shape: Shape::Unit, mult, offsets: Vec::new() }))
    }

    pub fn simple(spec: &CategorySpec, a: Label) -> Obj {
        if a == spec.unit() {
            return Self::unit(spec);
        }
        let mut mult = vec![0; spec.rank()];
        mult[a] = 1;
        Obj(Arc::new(ObjInner { shape: Shape::Simple(a), mult, offsets: Vec::new() }))
    }

    /// An object with prescribed multiplicities and no internal structure.
    pub fn free(name: &str, mult: Vec<usize>) -> Obj {
        Obj(Arc::new(ObjInner { shape: Shape::Free(name.to_string()), mult, offsets: Vec::new() }))
    }

    pub fn tensor(spec: &CategorySpec, a: &Obj, b: &Obj) -> Obj {
        let k = spec.rank();
        let mut mult = vec![0; k];
        let mut offsets = vec![0; k * k * k];
        for d in 0..k {
            let mut off = 0;
            for x in 0..k {
                for y in 0..k {
                    offsets[(d * k + x) * k + y] = off;
                    off += a.mult(x) * b.mult(y) * spec.n(x, y, d);
                }
            }
            mult[d] = off;
        }
        Obj(Arc::new(ObjInner { shape: Shape::Tensor(a.clone(), b.clone()), mult, offsets }))
    }

    /// Left-nested tensor product `((x1 x2) x3) ...`; the empty word is the unit.
    pub fn word(spec: &CategorySpec, letters: &[Label]) -> Obj {
        let mut it = letters.iter();
        let Some(&first) = it.next() else { return Self::unit(spec) };
        let mut acc = Self::simple(spec, first);
        for &l in it {
            acc = Self::tensor(spec, &acc, &Self::simple(spec, l));
        }
        acc
    }

    pub fn sum(spec: &CategorySpec, parts: Vec<Obj>) -> Obj {
        let k = spec.rank();
        let mut mult = vec![0; k];
        let mut offsets = vec![0; parts.len() * k];
        for (s, p) in parts.iter().enumerate() {
            for d in 0..k {
                offsets[s * k + d] = mult[d];
                mult[d] += p.mult(d);
            }
        }
        Obj(Arc::new(ObjInner { shape: Shape::Sum(parts), mult, offsets }))
    }

    pub fn mult(&self, c: Label) -> usize {
        self.0.mult[c]
    }

    pub fn mults(&self) -> &[usize] {
        &self.0.mult
    }

    pub fn total_dim(&self) -> usize {
        self.0.mult.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.mult.iter().all(|&m| m == 0)
    }

    /// Factors of a tensor product.
    pub fn factors(&self) -> Option<(&Obj, &Obj)> {
        match &self.0.shape {
            Shape::Tensor(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn summands(&self) -> Option<&[Obj]> {
        match &self.0.shape {
            Shape::Sum(s) => Some(s),
            _ => None,
        }
    }

    /// Start of summand `s` inside charge `d` of a direct sum.
    pub fn summand_offset(&self, spec: &CategorySpec, s: usize, d: Label) -> usize {
        self.0.offsets[s * spec.rank() + d]
    }

    /// Index in charge `d` of the tensor basis vector `(x,i) (y,j) mu`.
    pub fn tensor_index(
        &self,
        spec: &CategorySpec,
        d: Label,
        (x, i): (Label, usize),
        (y, j): (Label, usize),
        mu: usize,
    ) -> usize {
        let (_, b) = self.factors().expect("tensor object");
        let k = spec.rank();
        let nxy = spec.n(x, y, d);
        self.0.offsets[(d * k + x) * k + y] + (i * b.mult(y) + j) * nxy + mu
    }

    /// The simple label of a simple or unit object.
    pub fn as_simple(&self, spec: &CategorySpec) -> Option<Label> {
        match self.0.shape {
            Shape::Simple(l) => Some(l),
            Shape::Unit => Some(spec.unit()),
            _ => None,
        }
    }
}

/// A morphism between presented objects, one block per simple charge.
#[derive(Clone, PartialEq, Eq)]
pub struct Mor {
    src: Obj,
    tgt: Obj,
    blocks: Vec<ExactMatrix>,
}

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mor {:?} -> {:?}", self.src, self.tgt)?;
        for (c, b) in self.blocks.iter().enumerate() {
            if b.rows() > 0 && b.cols() > 0 {
                write!(f, " charge {c}: {b:?}")?;
            }
        }
        Ok(())
    }
}

impl Mor {
    pub fn zero(src: &Obj, tgt: &Obj) -> Mor {
        let blocks = (0..src.mults().len())
            .map(|c| ExactMatrix::zeros(tgt.mult(c), src.mult(c)))
            .collect();
        Mor { src: src.clone(), tgt: tgt.clone(), blocks }
    }

    pub fn identity(x: &Obj) -> Mor {
        Self::relabel(x, x)
    }

    /// The identity matrix between two presentations with equal multiplicities.
    pub fn relabel(src: &Obj, tgt: &Obj) -> Mor {
        assert_eq!(src.mults(), tgt.mults(), "relabel between different objects");
        let blocks = src.mults().iter().map(|&m| ExactMatrix::identity(m)).collect();
        Mor { src: src.clone(), tgt: tgt.clone(), blocks }
    }

    pub fn from_blocks(src: &Obj, tgt: &Obj, blocks: Vec<ExactMatrix>) -> Result<Mor, FusionError> {
        if blocks.len() != src.mults().len() {
            return Err(FusionError::Shape("wrong number of charge blocks".into()));
        }
        for (c, b) in blocks.iter().enumerate() {
            if b.rows() != tgt.mult(c) || b.cols() != src.mult(c) {
                return Err(FusionError::Shape(format!(
                    "block {c} is {}x{}, expected {}x{}",
                    b.rows(),
                    b.cols(),
                    tgt.mult(c),
                    src.mult(c)
                )));
            }
        }
        Ok(Mor { src: src.clone(), tgt: tgt.clone(), blocks })
    }

    pub fn src(&self) -> &Obj {
        &self.src
    }

    pub fn tgt(&self) -> &Obj {
        &self.tgt
    }

    pub fn block(&self, c: Label) -> &ExactMatrix {
        &self.blocks[c]
    }

    pub fn blocks(&self) -> &[ExactMatrix] {
        &self.blocks
    }

    pub fn block_mut(&mut self, c: Label) -> &mut ExactMatrix {
        &mut self.blocks[c]
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(ExactMatrix::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && self.blocks.iter().all(ExactMatrix::is_identity)
    }

    /// Same source/target shape with equal blocks.
    pub fn same_as(&self, other: &Mor) -> bool {
        self.blocks == other.blocks
    }

    /// `self` after `first`, i.e. `self ∘ first`.
    pub fn after(&self, first: &Mor) -> Result<Mor, FusionError> {
        if first.tgt != self.src {
            return Err(FusionError::Shape(format!(
                "composition mismatch: {:?} vs {:?}",
                first.tgt, self.src
            )));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&first.blocks)
            .map(|(a, b)| a.checked_mul(b).expect("matching block shapes"))
            .collect();
        Ok(Mor { src: first.src.clone(), tgt: self.tgt.clone(), blocks })
    }

    /// Composes a chain given in application order.
    pub fn chain(steps: &[Mor]) -> Result<Mor, FusionError> {
        let mut it = steps.iter();
        let mut acc = it.next().ok_or_else(|| FusionError::Shape("empty chain".into()))?.clone();
        for s in it {
            acc = s.after(&acc)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Mor) -> Result<Mor, FusionError> {
        self.check_parallel(other)?;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.checked_add(b).expect("same shape"))
            .collect();
        Ok(Mor { src: self.src.clone(), tgt: self.tgt.clone(), blocks })
    }

    pub fn sub(&self, other: &Mor) -> Result<Mor, FusionError> {
        self.check_parallel(other)?;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.checked_sub(b).expect("same shape"))
            .collect();
        Ok(Mor { src: self.src.clone(), tgt: self.tgt.clone(), blocks })
    }

    fn check_parallel(&self, other: &Mor) -> Result<(), FusionError> {
        if self.src != other.src || self.tgt != other.tgt {
            return Err(FusionError::Shape("morphisms are not parallel".into()));
        }
        Ok(())
    }

    pub fn scale(&self, s: &Cyclotomic) -> Mor {
        Mor {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    /// Reinterprets source and target with equal-multiplicity presentations.
    pub fn retyped(&self, src: &Obj, tgt: &Obj) -> Mor {
        assert_eq!(src.mults(), self.src.mults());
        assert_eq!(tgt.mults(), self.tgt.mults());
        Mor { src: src.clone(), tgt: tgt.clone(), blocks: self.blocks.clone() }
    }

    pub fn inverse(&self) -> Result<Mor, FusionError> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.inverse().map_err(|_| FusionError::Singular))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Mor { src: self.tgt.clone(), tgt: self.src.clone(), blocks })
    }

    /// Spherical trace: `sum_c dim(c) * tr(block_c)`.
    pub fn trace(&self, dims: &[Cyclotomic]) -> Cyclotomic {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.rows() > 0)
            .map(|(c, b)| &dims[c] * &b.trace())
            .sum()
    }

    /// The scalar of an endomorphism of the unit object.
    pub fn scalar(&self, spec: &CategorySpec) -> Cyclotomic {
        let b = &self.blocks[spec.unit()];
        if b.rows() == 1 && b.cols() == 1 {
            b.get(0, 0).clone()
        } else {
            Cyclotomic::zero()
        }
    }

    /// The scalar by which an endomorphism of a simple object acts.
    pub fn simple_scalar(&self, a: Label) -> Option<Cyclotomic> {
        let b = &self.blocks[a];
        if b.rows() == 1 && b.cols() == 1 {
            Some(b.get(0, 0).clone())
        } else {
            None
        }
    }
}

/// Builders for the structural morphisms of a spec.
pub struct Calculus<'a> {
    pub spec: &'a CategorySpec,
}

impl<'a> Calculus<'a> {
    pub fn new(spec: &'a CategorySpec) -> Self {
        Calculus { spec }
    }

    fn k(&self) -> usize {
        self.spec.rank()
    }

    pub fn unit(&self) -> Obj {
        Obj::unit(self.spec)
    }

    pub fn simple(&self, a: Label) -> Obj {
        Obj::simple(self.spec, a)
    }

    pub fn tensor(&self, a: &Obj, b: &Obj) -> Obj {
        Obj::tensor(self.spec, a, b)
    }

    pub fn word(&self, letters: &[Label]) -> Obj {
        Obj::word(self.spec, letters)
    }

    /// `f ⊗ g`.
    pub fn tensor_mor(&self, f: &Mor, g: &Mor) -> Mor {
        let spec = self.spec;
        let k = self.k();
        let src = self.tensor(&f.src, &g.src);
        let tgt = self.tensor(&f.tgt, &g.tgt);
        let mut out = Mor::zero(&src, &tgt);
        for d in 0..k {
            for x in 0..k {
                let fx = &f.blocks[x];
                if fx.rows() == 0 || fx.cols() == 0 {
                    continue;
                }
                for y in 0..k {
                    let nxy = spec.n(x, y, d);
                    if nxy == 0 {
                        continue;
                    }
                    let gy = &g.blocks[y];
                    if gy.rows() == 0 || gy.cols() == 0 {
                        continue;
                    }
                    for i in 0..fx.cols() {
                        for i2 in 0..fx.rows() {
                            let a = fx.get(i2, i);
                            if a.is_zero() {
                                continue;
                            }
                            for j in 0..gy.cols() {
                                for j2 in 0..gy.rows() {
                                    let b = gy.get(j2, j);
                                    if b.is_zero() {
                                        continue;
                                    }
                                    let v = a * b;
                                    for mu in 0..nxy {
                                        let s = src.tensor_index(spec, d, (x, i), (y, j), mu);
                                        let t = tgt.tensor_index(spec, d, (x, i2), (y, j2), mu);
                                        out.blocks[d].set(t, s, v.clone());
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `f ⊗ id_x`.
    pub fn right_id(&self, f: &Mor, x: &Obj) -> Mor {
        self.tensor_mor(f, &Mor::identity(x))
    }

    /// `id_x ⊗ f`.
    pub fn left_id(&self, x: &Obj, f: &Mor) -> Mor {
        self.tensor_mor(&Mor::identity(x), f)
    }

    /// Associator `(A ⊗ B) ⊗ C -> A ⊗ (B ⊗ C)`.
    pub fn assoc(&self, a: &Obj, b: &Obj, c: &Obj) -> Mor {
        self.assoc_impl(a, b, c, false)
    }

    /// Inverse associator `A ⊗ (B ⊗ C) -> (A ⊗ B) ⊗ C`.
    pub fn assoc_inv(&self, a: &Obj, b: &Obj, c: &Obj) -> Mor {
        self.assoc_impl(a, b, c, true)
    }

    fn assoc_impl(&self, a: &Obj, b: &Obj, c: &Obj, inverse: bool) -> Mor {
        let spec = self.spec;
        let k = self.k();
        let ab = self.tensor(a, b);
        let left = self.tensor(&ab, c);
        let bc = self.tensor(b, c);
        let right = self.tensor(a, &bc);
        let mut fwd = Mor::zero(&left, &right);
        for d in 0..k {
            if left.mult(d) == 0 {
                continue;
            }
            for x in (0..k).filter(|&x| a.mult(x) > 0) {
                for y in (0..k).filter(|&y| b.mult(y) > 0) {
                    for z in (0..k).filter(|&z| c.mult(z) > 0) {
                        let Some(fb) = spec.f_block(x, y, z, d) else { continue };
                        for (ri, &(e, al, be)) in fb.rows.iter().enumerate() {
                            for (ci, &(f, mu, nu)) in fb.cols.iter().enumerate() {
                                let v = fb.matrix.get(ri, ci);
                                if v.is_zero() {
                                    continue;
                                }
                                for i in 0..a.mult(x) {
                                    for j in 0..b.mult(y) {
                                        for l in 0..c.mult(z) {
                                            let inner_s = ab.tensor_index(spec, e, (x, i), (y, j), al);
                                            let s = left.tensor_index(spec, d, (e, inner_s), (z, l), be);
                                            let inner_t = bc.tensor_index(spec, f, (y, j), (z, l), mu);
                                            let t = right.tensor_index(spec, d, (x, i), (f, inner_t), nu);
                                            fwd.blocks[d].set(t, s, v.clone());
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        if inverse {
            fwd.inverse().expect("associator blocks are invertible")
        } else {
            fwd
        }
    }

    /// Braiding `c_{A,B}: A ⊗ B -> B ⊗ A`.
    pub fn braid(&self, a: &Obj, b: &Obj) -> Mor {
        self.braid_impl(a, b, false)
    }

    /// Inverse braiding `c_{B,A}^{-1}: A ⊗ B -> B ⊗ A`.
    pub fn braid_inv(&self, a: &Obj, b: &Obj) -> Mor {
        self.braid_impl(a, b, true)
    }

    fn braid_impl(&self, a: &Obj, b: &Obj, inverse: bool) -> Mor {
        let spec = self.spec;
        let k = self.k();
        let src = self.tensor(a, b);
        let tgt = self.tensor(b, a);
        let mut out = Mor::zero(&src, &tgt);
        for d in 0..k {
            for x in (0..k).filter(|&x| a.mult(x) > 0) {
                for y in (0..k).filter(|&y| b.mult(y) > 0) {
                    let n = spec.n(x, y, d);
                    if n == 0 {
                        continue;
                    }
                    let r = if inverse {
                        spec.r_inv_block(y, x, d)
                    } else {
                        spec.r_block(x, y, d)
                    }
                    .expect("braided spec");
                    for i in 0..a.mult(x) {
                        for j in 0..b.mult(y) {
                            for mu in 0..n {
                                for nu in 0..n {
                                    let v = r.get(mu, nu);
                                    if v.is_zero() {
                                        continue;
                                    }
                                    let s = src.tensor_index(spec, d, (x, i), (y, j), mu);
                                    let t = tgt.tensor_index(spec, d, (y, j), (x, i), nu);
                                    out.blocks[d].set(t, s, v.clone());
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `1 ⊗ A -> A`.
    pub fn lunit(&self, a: &Obj) -> Mor {
        let src = self.tensor(&self.unit(), a);
        Mor::relabel(&src, a)
    }

    /// `A ⊗ 1 -> A`.
    pub fn runit(&self, a: &Obj) -> Mor {
        let src = self.tensor(a, &self.unit());
        Mor::relabel(&src, a)
    }

    /// Splitting vertex `c -> a ⊗ b` with multiplicity index `mu`.
    pub fn split(&self, a: Label, b: Label, c: Label, mu: usize) -> Mor {
        let spec = self.spec;
        let src = self.simple(c);
        let tgt = self.tensor(&self.simple(a), &self.simple(b));
        let mut m = Mor::zero(&src, &tgt);
        let t = tgt.tensor_index(spec, c, (a, 0), (b, 0), mu);
        m.blocks[c].set(t, 0, Cyclotomic::one());
        m
    }

    /// Fusion vertex `a ⊗ b -> c`, dual to [`Calculus::split`].
    pub fn merge(&self, a: Label, b: Label, c: Label, mu: usize) -> Mor {
        let spec = self.spec;
        let src = self.tensor(&self.simple(a), &self.simple(b));
        let tgt = self.simple(c);
        let mut m = Mor::zero(&src, &tgt);
        let s = src.tensor_index(spec, c, (a, 0), (b, 0), mu);
        m.blocks[c].set(0, s, Cyclotomic::one());
        m
    }

    fn pair_scalar(&self, a: Label, b: Label, src_unit: bool, value: Cyclotomic) -> Mor {
        let spec = self.spec;
        let pair = self.tensor(&self.simple(a), &self.simple(b));
        let u = self.unit();
        let idx = pair.tensor_index(spec, spec.unit(), (a, 0), (b, 0), 0);
        if src_unit {
            let mut m = Mor::zero(&u, &pair);
            m.blocks[spec.unit()].set(idx, 0, value);
            m
        } else {
            let mut m = Mor::zero(&pair, &u);
            m.blocks[spec.unit()].set(0, idx, value);
            m
        }
    }

    /// `coev_a: 1 -> a ⊗ a*`.
    pub fn coev(&self, a: Label) -> Mor {
        self.pair_scalar(a, self.spec.dual(a), true, Cyclotomic::one())
    }

    /// `ev_a: a* ⊗ a -> 1`.
    pub fn ev(&self, a: Label) -> Mor {
        let v = self.spec.f_unit_loop(a).inv().expect("invertible F^{a a* a}_a[1,1]");
        self.pair_scalar(self.spec.dual(a), a, false, v)
    }

    /// `ev'_a: a ⊗ a* -> 1`, the pivotal-twisted evaluation.
    pub fn ev_right(&self, a: Label) -> Mor {
        let ad = self.spec.dual(a);
        let v = self.spec.pivotal(a) / &self.spec.f_unit_loop(ad);
        self.pair_scalar(a, ad, false, v)
    }

    /// `coev'_a: 1 -> a* ⊗ a`.
    pub fn coev_right(&self, a: Label) -> Mor {
        let v = self.spec.pivotal(a).inv().expect("nonzero pivotal coefficient");
        self.pair_scalar(self.spec.dual(a), a, true, v)
    }

    /// Right partial trace of `f: X ⊗ a -> Y ⊗ a` over a simple `a`.
    pub fn ptrace_right(&self, f: &Mor, x: &Obj, y: &Obj, a: Label) -> Result<Mor, FusionError> {
        let ao = self.simple(a);
        let ad = self.simple(self.spec.dual(a));
        // X -> X 1 -> X (a a*) -> (X a) a* -> (Y a) a* -> Y (a a*) -> Y 1 -> Y
        let steps = [
            self.runit(x).inverse()?,
            self.left_id(x, &self.coev(a)),
            self.assoc_inv(x, &ao, &ad),
            self.right_id(f, &ad),
            self.assoc(y, &ao, &ad),
            self.left_id(y, &self.ev_right(a)),
            self.runit(y),
        ];
        Mor::chain(&steps)
    }

    /// Right quantum dimension `ev'_a ∘ coev_a`.
    pub fn dim_right(&self, a: Label) -> Cyclotomic {
        let ad = self.spec.dual(a);
        self.spec.pivotal(a) / &self.spec.f_unit_loop(ad)
    }

    /// Left quantum dimension `ev_a ∘ coev'_a`.
    pub fn dim_left(&self, a: Label) -> Cyclotomic {
        let p = self.spec.pivotal(a);
        (p * &self.spec.f_unit_loop(a)).inv().expect("nonzero")
    }
}
