//! The projection of `Hom_C(X, Y)` onto σ-morphisms and the induction
//! adjunction built from it.
//!
//! For one orbit, `π_k(f) = dim(Ω)^{-1} Σ_a dim(a) ptr_a(β_a (1 ⊗ f) γ_a^{-1})`
//! averages `f` over an Ω loop threaded through both half-braidings. The
//! full projection applies `π_k` for each orbit, low to high.

use serde::Serialize;

use crate::exactnum::{Cyclotomic, ExactMatrix};
use crate::fusion::{quantum_dims, Calculus, CategorySpec, Mor, Obj};
use crate::gluing::Gluing;

use super::{induced_half_braidings, premodular, CenterError, FormalObject, InducedObject, SigmaPair};

/// Precomputed data for projecting `Hom_C(X, Y)` between two σ-pairs.
pub struct Projector<'a> {
    calc: Calculus<'a>,
    src: SigmaPair,
    tgt: SigmaPair,
    /// Per orbit and label: `X -> (a ⊗ X) ⊗ a*` (coevaluation then `γ_a^{-1}`)
    /// and `(a ⊗ Y) ⊗ a* -> Y` (`β_a` then evaluation), weights folded in.
    loops: Vec<Vec<(Mor, Mor)>>,
}

impl<'a> Projector<'a> {
    pub fn new(spec: &'a CategorySpec, src: &SigmaPair, tgt: &SigmaPair) -> Result<Self, CenterError> {
        premodular(spec)?;
        if src.braidings.len() != tgt.braidings.len() {
            return Err(CenterError::Shape("σ-pairs with different orbit counts".into()));
        }
        let omega = quantum_dims(spec);
        let inv_total = omega.total.inv().map_err(|_| CenterError::DegenerateOmega)?;
        let calc = Calculus::new(spec);
        let (x, y) = (&src.carrier, &tgt.carrier);
        let mut loops = Vec::with_capacity(src.braidings.len());
        for (g, b) in src.braidings.iter().zip(&tgt.braidings) {
            let mut per_label = Vec::with_capacity(spec.rank());
            for a in 0..spec.rank() {
                let (oa, oad) = (calc.simple(a), calc.simple(spec.dual(a)));
                let weight = &omega.weights[a] * &inv_total;
                let cup = Mor::chain(&[
                    calc.runit(x).inverse()?,
                    calc.left_id(x, &calc.coev(a)),
                    calc.assoc_inv(x, &oa, &oad),
                    calc.right_id(&g.blocks[a].inverse()?, &oad),
                ])?;
                let cap = Mor::chain(&[
                    calc.right_id(&b.blocks[a], &oad),
                    calc.assoc(y, &oa, &oad),
                    calc.left_id(y, &calc.ev_right(a)),
                    calc.runit(y),
                ])?
                .scale(&weight);
                per_label.push((cup, cap));
            }
            loops.push(per_label);
        }
        Ok(Projector { calc, src: src.clone(), tgt: tgt.clone(), loops })
    }

    fn check(&self, f: &Mor) -> Result<(), CenterError> {
        if f.src().mults() != self.src.carrier.mults() || f.tgt().mults() != self.tgt.carrier.mults() {
            return Err(CenterError::Shape("morphism does not map between the carriers".into()));
        }
        Ok(())
    }

    /// `π_k` for the orbit with index `k`.
    pub fn apply_orbit(&self, k: usize, f: &Mor) -> Result<Mor, CenterError> {
        self.check(f)?;
        let c = &self.calc;
        let (x, y) = (&self.src.carrier, &self.tgt.carrier);
        let f = f.retyped(x, y);
        let mut acc = Mor::zero(x, y);
        for (a, (cup, cap)) in self.loops[k].iter().enumerate() {
            let (oa, oad) = (c.simple(a), c.simple(c.spec.dual(a)));
            let mid = c.right_id(&c.left_id(&oa, &f), &oad);
            acc = acc.add(&Mor::chain(&[cup.clone(), mid, cap.clone()])?)?;
        }
        Ok(acc)
    }

    /// `π = π_n ∘ … ∘ π_1`.
    pub fn apply(&self, f: &Mor) -> Result<Mor, CenterError> {
        self.apply_in_order(f, &(0..self.src.braidings.len()).collect::<Vec<_>>())
    }

    /// Applies the orbit projections in the given order.
    pub fn apply_in_order(&self, f: &Mor, order: &[usize]) -> Result<Mor, CenterError> {
        self.check(f)?;
        let mut g = f.retyped(&self.src.carrier, &self.tgt.carrier);
        for &k in order {
            g = self.apply_orbit(k, &g)?;
        }
        Ok(g)
    }

    /// Whether `f` intertwines every half-braiding: `β_z (1 ⊗ f) = (f ⊗ 1) γ_z`.
    pub fn is_sigma_morphism(&self, f: &Mor) -> Result<bool, CenterError> {
        self.check(f)?;
        let c = &self.calc;
        let f = f.retyped(&self.src.carrier, &self.tgt.carrier);
        for (g, b) in self.src.braidings.iter().zip(&self.tgt.braidings) {
            for z in 0..c.spec.rank() {
                let oz = c.simple(z);
                let lhs = b.blocks[z].after(&c.left_id(&oz, &f))?;
                let rhs = c.right_id(&f, &oz).after(&g.blocks[z])?;
                if !lhs.same_as(&rhs) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The standard basis of `Hom_C(X, Y)`: one matrix unit per charge entry.
    pub fn hom_basis(&self) -> Vec<Mor> {
        let (x, y) = (&self.src.carrier, &self.tgt.carrier);
        let mut out = Vec::new();
        for d in 0..self.calc.spec.rank() {
            for j in 0..x.mult(d) {
                for i in 0..y.mult(d) {
                    let mut m = Mor::zero(x, y);
                    m.block_mut(d).set(i, j, Cyclotomic::one());
                    out.push(m);
                }
            }
        }
        out
    }

    /// The matrix of `π` on [`Projector::hom_basis`].
    pub fn matrix(&self) -> Result<ExactMatrix, CenterError> {
        let basis = self.hom_basis();
        let cols = basis.iter().map(|e| Ok(flatten(&self.apply(e)?))).collect::<Result<Vec<_>, CenterError>>()?;
        Ok(ExactMatrix::from_columns(basis.len(), &cols))
    }
}

/// Coordinates of a morphism in the standard basis, charge by charge, column-major.
pub fn flatten(f: &Mor) -> Vec<Cyclotomic> {
    let mut v = Vec::new();
    for b in f.blocks() {
        for j in 0..b.cols() {
            for i in 0..b.rows() {
                v.push(b.get(i, j).clone());
            }
        }
    }
    v
}

/// `π(f)` for `f: X -> Y` between the carriers of two σ-pairs.
pub fn project_morphism(spec: &CategorySpec, px: &SigmaPair, py: &SigmaPair, f: &Mor) -> Result<Mor, CenterError> {
    Projector::new(spec, px, py)?.apply(f)
}

/// `dim Hom_Z(pX, pY)`, the rank of `π` on `Hom_C(X, Y)`.
pub fn hom_z_dim(spec: &CategorySpec, px: &SigmaPair, py: &SigmaPair) -> Result<usize, CenterError> {
    Ok(Projector::new(spec, px, py)?.matrix()?.rank())
}

/// The induction adjunction between `Hom_C(X, Y)` and `Hom_Z(I_σ(X), pY)`.
pub struct Adjunction<'a> {
    pub induced: InducedObject,
    pub pair: SigmaPair,
    projector: Projector<'a>,
    iota: Mor,
    p1: Mor,
    scale: Cyclotomic,
}

impl<'a> Adjunction<'a> {
    /// `F(φ) = dim(Ω)^n π(φ ∘ p_1)`, the σ-morphism extending `φ: X -> Y`.
    pub fn forward(&self, phi: &Mor) -> Result<Mor, CenterError> {
        let y = &self.projector.tgt.carrier;
        if phi.src().mults() != self.iota.src().mults() || phi.tgt().mults() != y.mults() {
            return Err(CenterError::Shape("φ does not map X to the carrier of Y".into()));
        }
        let g = phi.retyped(self.iota.src(), y).after(&self.p1)?;
        Ok(self.projector.apply(&g)?.scale(&self.scale))
    }

    /// `G(ψ) = ψ ∘ ι`, restriction along the unit summand.
    pub fn backward(&self, psi: &Mor) -> Result<Mor, CenterError> {
        let y = &self.projector.tgt.carrier;
        if psi.src().mults() != self.pair.carrier.mults() || psi.tgt().mults() != y.mults() {
            return Err(CenterError::Shape("ψ does not map X_σ to the carrier of Y".into()));
        }
        Ok(psi.retyped(&self.pair.carrier, y).after(&self.iota)?)
    }

    pub fn projector(&self) -> &Projector<'a> {
        &self.projector
    }

    /// `ι: X -> X_σ`.
    pub fn unit_inclusion(&self) -> &Mor {
        &self.iota
    }
}

pub fn adjunction_maps<'a>(
    spec: &'a CategorySpec,
    x: &FormalObject,
    py: &SigmaPair,
) -> Result<Adjunction<'a>, CenterError> {
    let (induced, pair) = induced_half_braidings(spec, &py.sigma, x)?;
    let projector = Projector::new(spec, &pair, py)?;
    let iota = induced.unit_inclusion(spec);
    let p1 = induced.unit_projection(spec);
    let total = quantum_dims(spec).total;
    let scale = total.pow(py.sigma.n() as u32);
    Ok(Adjunction { induced, pair, projector, iota, p1, scale })
}

/// Verdicts of [`check_adjunction`] for one pair of simples `x`, `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjunctionRow {
    pub x: String,
    pub y: String,
    /// `dim Hom_C(x, Y)` with `Y` the carrier of the induced pair of `y`.
    pub hom_c: usize,
    /// `G∘F = id` on every basis morphism of `Hom_C(x, Y)`.
    pub gf: bool,
    /// `F∘G = id` on the projections of the sampled morphisms `X_σ -> Y`.
    pub fg: bool,
    pub fg_samples: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjunctionReport {
    pub rows: Vec<AdjunctionRow>,
}

impl AdjunctionReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.gf && r.fg)
    }
}

/// Deterministic morphism with small integer entries drawn from `state`.
fn sample_mor(src: &Obj, tgt: &Obj, state: &mut u64) -> Mor {
    let mut m = Mor::zero(src, tgt);
    for c in 0..src.mults().len() {
        let b = m.block_mut(c);
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let v = ((*state >> 33) % 9) as i64 - 4;
                b.set(i, j, Cyclotomic::from_int(v));
            }
        }
    }
    m
}

/// Checks `G∘F` and `F∘G` for every pair of simples, with `Y` the pair
/// induced from `y`. `F∘G` is tested on `samples` projected morphisms.
pub fn check_adjunction(spec: &CategorySpec, sigma: &Gluing, samples: usize) -> Result<AdjunctionReport, CenterError> {
    premodular(spec)?;
    let mut state = 0x5eed_u64;
    let mut rows = Vec::new();
    for y in 0..spec.rank() {
        let (_, py) = induced_half_braidings(spec, sigma, &FormalObject::simple(spec, y))?;
        for x in 0..spec.rank() {
            let fx = FormalObject::simple(spec, x);
            let adj = adjunction_maps(spec, &fx, &py)?;
            let xo = fx.presented(spec);
            let mut gf = true;
            let mut hom_c = 0;
            for i in 0..py.carrier.mult(x) {
                let mut e = Mor::zero(&xo, &py.carrier);
                e.block_mut(x).set(i, 0, Cyclotomic::one());
                hom_c += 1;
                gf &= adj.backward(&adj.forward(&e)?)?.same_as(&e);
            }
            let mut fg = true;
            for _ in 0..samples {
                let s = adj.projector().apply(&sample_mor(&adj.pair.carrier, &py.carrier, &mut state))?;
                fg &= adj.forward(&adj.backward(&s)?)?.same_as(&s);
            }
            rows.push(AdjunctionRow {
                x: spec.label_name(x).to_string(),
                y: spec.label_name(y).to_string(),
                hom_c,
                gf,
                fg,
                fg_samples: samples,
            });
        }
    }
    Ok(AdjunctionReport { rows })
}
