//! Modules over finite groups in characteristic ℓ: simplicity, intertwiners,
//! invariant alternating forms, and `H⁰`/`H¹` by cocycle propagation along
//! the Cayley graph.

mod cocycle;
mod module;
mod simple;

pub use cocycle::{cocycle_on_elements, h1, CocycleSpace};
pub use module::{standard_module, zero_sum_module, CohomologyError, GModule, PermutationFamily};
pub use simple::{
    endomorphism_algebra_dim, h0, hom_module_dim, invariant_alternating_forms,
    is_absolutely_simple, is_simple, wedge2_dual_invariants_dim, SIMPLICITY_DIM_LIMIT,
};
