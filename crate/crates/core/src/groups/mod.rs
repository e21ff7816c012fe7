//! Concrete finite groups: permutations, matrices over F_ℓ, affine pairs
//! `V ⋊ G` and direct products, with bounded breadth-first enumeration.

mod classical;
mod element;
mod group;
mod semidirect;

pub use classical::{
    alternating_group, general_symplectic_group, group_order_formula, symmetric_group,
    symplectic_form, symplectic_group, symplectic_multiplier, SymplecticFamily,
};
pub use element::{GroupElement, Permutation, SemidirectPair};
pub use group::{
    direct_product, has_index_l_normal_subgroup, FiniteGroup, GroupError, Subgroup, DEFAULT_CAP,
};
pub use semidirect::semidirect;
