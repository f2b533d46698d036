//! The center of higher genera: induced objects and their half-braidings,
//! σ-pair verification, the averaging projection onto σ-morphisms, the
//! induction adjunction and the σ-tube algebra whose blocks count simples.

mod induced;
mod projection;
mod tube;
mod verify;

use serde::Serialize;
use thiserror::Error;

use crate::exactnum::ExactError;
use crate::fusion::{CategorySpec, FusionError, Label, Obj};
use crate::gluing::GluingError;

pub use induced::{
    induce_object, induced_half_braidings, induced_with_crossings, HalfBraiding, InducedObject, InducedSummand, SigmaPair,
};
pub use projection::{
    adjunction_maps, check_adjunction, flatten, hom_z_dim, project_morphism, Adjunction, AdjunctionReport, AdjunctionRow,
    Projector,
};
pub use tube::{center_rank, rank_of, tube_algebra, CenterRank, LawReport, TubeAlgebra, TubeBlock};
pub use verify::{verify_sigma_pair, SigmaReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error("the category has no braiding; the center needs premodular data")]
    NotPremodular,
    #[error("dim(Ω) vanishes")]
    DegenerateOmega,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("tube algebra does not split over the cyclotomic field: {0}")]
    NonSplit(String),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    Gluing(#[from] GluingError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// An object of C up to isomorphism: a multiplicity per simple label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FormalObject {
    pub multiplicities: Vec<usize>,
}

impl FormalObject {
    pub fn zero(spec: &CategorySpec) -> Self {
        FormalObject { multiplicities: vec![0; spec.rank()] }
    }

    pub fn simple(spec: &CategorySpec, a: Label) -> Self {
        let mut m = Self::zero(spec);
        m.multiplicities[a] = 1;
        m
    }

    pub fn unit(spec: &CategorySpec) -> Self {
        Self::simple(spec, spec.unit())
    }

    pub fn mult(&self, a: Label) -> usize {
        self.multiplicities[a]
    }

    pub fn total(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// Simple summands `(label, copy)` in label order.
    pub fn parts(&self) -> Vec<(Label, usize)> {
        self.multiplicities
            .iter()
            .enumerate()
            .flat_map(|(a, &m)| (0..m).map(move |c| (a, c)))
            .collect()
    }

    /// A presented object: the simple itself for a single simple, otherwise
    /// the direct sum of [`FormalObject::parts`].
    pub fn presented(&self, spec: &CategorySpec) -> Obj {
        let parts = self.parts();
        if parts.len() == 1 {
            return Obj::simple(spec, parts[0].0);
        }
        Obj::sum(spec, parts.iter().map(|&(a, _)| Obj::simple(spec, a)).collect())
    }

    pub fn of_obj(x: &Obj) -> Self {
        FormalObject { multiplicities: x.mults().to_vec() }
    }
}

fn premodular(spec: &CategorySpec) -> Result<(), CenterError> {
    if spec.has_braiding() {
        Ok(())
    } else {
        Err(CenterError::NotPremodular)
    }
}
