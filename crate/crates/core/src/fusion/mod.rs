//! Skeletal premodular category data, axiom validators and derived
//! invariants.

mod invariants;
mod spec;
mod tensor;
mod validate;

use thiserror::Error;

pub use invariants::{quantum_dims, s_matrix_and_transparency, twists, OmegaColor, SData};
pub use spec::{CategorySpec, FBlock, FEntry, Label, REntry, RawSpec};
pub use tensor::{Calculus, Mor, Obj};
pub use validate::{
    check_hexagon, check_pentagon, check_spherical_ribbon, validate_raw, validate_structure, CheckReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("malformed category data: {0}")]
    Malformed(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("incomplete data: {0}")]
    IncompleteData(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("singular matrix where an isomorphism was expected")]
    Singular,
}
