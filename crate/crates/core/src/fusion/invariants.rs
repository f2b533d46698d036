//! Derived quantities: dimensions, the Ω color, twists and the S-matrix.

use crate::exactnum::{Cyclotomic, ExactMatrix};

use super::tensor::Calculus;
use super::{CategorySpec, FusionError, Label};

/// The formal color `Ω = ⊕ dim(i) i` and its total dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaColor {
    pub weights: Vec<Cyclotomic>,
    pub total: Cyclotomic,
}

/// Loop values `dim(a)` and the resulting Ω color.
pub fn quantum_dims(spec: &CategorySpec) -> OmegaColor {
    let calc = Calculus::new(spec);
    let weights: Vec<Cyclotomic> = (0..spec.rank()).map(|a| calc.dim_right(a)).collect();
    let total = weights.iter().map(|d| d * d).sum();
    OmegaColor { weights, total }
}

/// Twist scalars, each the right partial trace of the self-braiding.
pub fn twists(spec: &CategorySpec) -> Result<Vec<Cyclotomic>, FusionError> {
    if !spec.has_braiding() {
        return Err(FusionError::IncompleteData("no R data".into()));
    }
    let calc = Calculus::new(spec);
    (0..spec.rank())
        .map(|a| {
            let oa = calc.simple(a);
            let t = calc.ptrace_right(&calc.braid(&oa, &oa), &oa, &oa, a)?;
            t.simple_scalar(a).ok_or(FusionError::Singular)
        })
        .collect()
}

/// Result of the S-matrix computation.
#[derive(Clone, Debug, PartialEq)]
pub struct SData {
    /// `S̃_{ij}`: the closed double-braiding loop on `i` and `j`.
    pub s: ExactMatrix,
    pub transparent: Vec<Label>,
    pub modular: bool,
}

/// The unnormalized S-matrix, the transparent labels and the modular flag.
pub fn s_matrix_and_transparency(spec: &CategorySpec) -> Result<SData, FusionError> {
    if !spec.has_braiding() {
        return Err(FusionError::IncompleteData("no R data".into()));
    }
    let calc = Calculus::new(spec);
    let dims = quantum_dims(spec).weights;
    let k = spec.rank();
    let mut s = ExactMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            let (oi, oj) = (calc.simple(i), calc.simple(j));
            let mono = calc.braid(&oj, &oi).after(&calc.braid(&oi, &oj))?;
            s.set(i, j, mono.trace(&dims));
        }
    }
    let transparent = (0..k).filter(|&j| (0..k).all(|i| *s.get(i, j) == &dims[i] * &dims[j])).collect();
    let modular = s.rank() == k;
    Ok(SData { s, transparent, modular })
}
