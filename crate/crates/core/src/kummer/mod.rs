//! The lattices `Z[T] ⊂ Π₁ ⊂ Π` spanned by exceptional classes of a Kummer
//! variety, their numerology, and the action of the torsor group on them.

mod equivariant;
mod integral;
mod lattice;

use thiserror::Error;

use crate::cohomology::CohomologyError;
use crate::exact::LatticeError;
use crate::groups::GroupError;

pub use equivariant::{
    equivariant_lattice, pic_model_factor, torsor_group, AffineMap, EquivariantLattice, PicModelFactor,
    TorsorFactor, TorsorGroup,
};
pub use integral::integral_h1;
pub use lattice::{
    affine_value, build_nikulin_lattice, build_nikulin_lattice_with_ns, canonical_class, exceptional_intersections,
    nikulin_generator, num_points, numerology, HalfVector, KummerLatticeModel, Numerology, MAX_LATTICE_G,
    MAX_NUMEROLOGY_G,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KummerError {
    #[error("g = {0} is below 2")]
    GTooSmall(usize),
    #[error("g = {g} exceeds the supported bound {limit}")]
    GTooLarge { g: usize, limit: usize },
    #[error("Néron-Severi rank must be positive")]
    NsRankZero,
    #[error("action mismatch: {0}")]
    ActionMismatch(&'static str),
    #[error("no nonzero invariant alternating form")]
    NoInvariantForm,
    #[error("internal invariant violated: {0}")]
    Invariant(&'static str),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}
