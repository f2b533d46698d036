//! Checks that a family of half-braidings is a σ-pair.
//!
//! Naturality in the argument is automatic on simples in skeletal form, so
//! only invertibility, the unit, the hexagon and the pairwise commutation
//! relations are evaluated.

use crate::fusion::{Calculus, CategorySpec, Label, Mor, Obj};
use crate::gluing::CommCase;

use super::{CenterError, HalfBraiding, SigmaPair};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SigmaReport {
    pub instances: usize,
    pub violations: Vec<String>,
}

impl SigmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_shape(calc: &Calculus, x: &Obj, h: &HalfBraiding) -> Result<(), CenterError> {
    let spec = calc.spec;
    if h.blocks.len() != spec.rank() {
        return Err(CenterError::Shape(format!("{} blocks for {} simples", h.blocks.len(), spec.rank())));
    }
    for (z, g) in h.blocks.iter().enumerate() {
        let oz = calc.simple(z);
        if g.src().mults() != calc.tensor(&oz, x).mults() || g.tgt().mults() != calc.tensor(x, &oz).mults() {
            return Err(CenterError::Shape(format!("block for label {z} does not fit the carrier")));
        }
    }
    Ok(())
}

/// `γ_z` retyped onto the canonical `z ⊗ X -> X ⊗ z`.
fn gamma(calc: &Calculus, x: &Obj, h: &HalfBraiding, z: Label) -> Mor {
    let oz = calc.simple(z);
    h.blocks[z].retyped(&calc.tensor(&oz, x), &calc.tensor(x, &oz))
}

/// `(γ_{z1} ⊗ 1)(1 ⊗ γ_{z2})` against `γ_{z1 z2}` resolved through fusion channels.
fn hexagon(calc: &Calculus, x: &Obj, h: &HalfBraiding, z1: Label, z2: Label) -> Result<bool, CenterError> {
    let spec = calc.spec;
    let (o1, o2) = (calc.simple(z1), calc.simple(z2));
    let o12 = calc.tensor(&o1, &o2);
    let rhs = Mor::chain(&[
        calc.assoc(&o1, &o2, x),
        calc.left_id(&o1, &gamma(calc, x, h, z2)),
        calc.assoc_inv(&o1, x, &o2),
        calc.right_id(&gamma(calc, x, h, z1), &o2),
        calc.assoc(x, &o1, &o2),
    ])?;
    let mut lhs = Mor::zero(&calc.tensor(&o12, x), &calc.tensor(x, &o12));
    for w in spec.fusion_channels(z1, z2) {
        for mu in 0..spec.n(z1, z2, w) {
            let term = Mor::chain(&[
                calc.right_id(&calc.merge(z1, z2, w, mu), x),
                gamma(calc, x, h, w),
                calc.left_id(x, &calc.split(z1, z2, w, mu)),
            ])?;
            lhs = lhs.add(&term)?;
        }
    }
    Ok(lhs.same_as(&rhs))
}

/// The commutation relation between orbits `i` (lower) and `j`, on `z2 ⊗ (z1 ⊗ X)`.
fn comm(
    calc: &Calculus,
    x: &Obj,
    gi: &HalfBraiding,
    gj: &HalfBraiding,
    case: CommCase,
    z1: Label,
    z2: Label,
) -> Result<bool, CenterError> {
    let (o1, o2) = (calc.simple(z1), calc.simple(z2));
    let twisted = |z: Label, o: &Obj| -> Result<Mor, CenterError> {
        let g = gamma(calc, x, gi, z);
        Ok(match case {
            CommCase::Disjoint => Mor::chain(&[g, calc.braid(x, o), calc.braid(o, x)])?,
            _ => g,
        })
    };
    let g1 = twisted(z1, &o1)?;
    let g2 = gamma(calc, x, gj, z2);
    let lhs = Mor::chain(&[
        calc.left_id(&o2, &g1),
        calc.assoc_inv(&o2, x, &o1),
        calc.right_id(&g2, &o1),
    ])?;
    let tail = match case {
        CommCase::Interleaved => calc.braid_inv(&o1, &o2),
        _ => calc.braid(&o1, &o2),
    };
    let rhs = Mor::chain(&[
        calc.assoc_inv(&o2, &o1, x),
        calc.right_id(&calc.braid_inv(&o2, &o1), x),
        calc.assoc(&o1, &o2, x),
        calc.left_id(&o1, &g2),
        calc.assoc_inv(&o1, x, &o2),
        calc.right_id(&g1, &o2),
        calc.assoc(x, &o1, &o2),
        calc.left_id(x, &tail),
        calc.assoc_inv(x, &o2, &o1),
    ])?;
    Ok(lhs.same_as(&rhs))
}

/// Evaluates every σ-pair axiom exactly; failures are listed, not raised.
pub fn verify_sigma_pair(spec: &CategorySpec, pair: &SigmaPair) -> Result<SigmaReport, CenterError> {
    super::premodular(spec)?;
    let calc = Calculus::new(spec);
    let x = &pair.carrier;
    let orbits = pair.sigma.orbits();
    if pair.braidings.len() != orbits.len() {
        return Err(CenterError::Shape(format!(
            "{} half-braidings for {} orbits",
            pair.braidings.len(),
            orbits.len()
        )));
    }
    let mut rep = SigmaReport::default();
    let k = spec.rank();
    for (o, h) in pair.braidings.iter().enumerate() {
        check_shape(&calc, x, h)?;
        for z in 0..k {
            rep.instances += 1;
            if gamma(&calc, x, h, z).inverse().is_err() {
                rep.violations.push(format!("orbit {o}: γ_{} is not invertible", spec.label_name(z)));
            }
        }
        rep.instances += 1;
        let u = calc.unit();
        let id = Mor::chain(&[calc.lunit(x), calc.runit(x).inverse()?])?;
        if !gamma(&calc, x, h, spec.unit()).same_as(&id.retyped(&calc.tensor(&u, x), &calc.tensor(x, &u))) {
            rep.violations.push(format!("orbit {o}: γ on the unit is not the identity"));
        }
        for z1 in 0..k {
            for z2 in 0..k {
                rep.instances += 1;
                if !hexagon(&calc, x, h, z1, z2)? {
                    rep.violations.push(format!(
                        "orbit {o}: hexagon fails at ({}, {})",
                        spec.label_name(z1),
                        spec.label_name(z2)
                    ));
                }
            }
        }
    }
    for i in 0..orbits.len() {
        for j in i + 1..orbits.len() {
            let case = pair.sigma.comm_case(orbits[i], orbits[j])?;
            for z1 in 0..k {
                for z2 in 0..k {
                    rep.instances += 1;
                    if !comm(&calc, x, &pair.braidings[i], &pair.braidings[j], case, z1, z2)? {
                        rep.violations.push(format!(
                            "orbits {i},{j}: commutation case {} fails at ({}, {})",
                            case as u8,
                            spec.label_name(z1),
                            spec.label_name(z2)
                        ));
                    }
                }
            }
        }
    }
    Ok(rep)
}
