//! Exact linear algebra over F₂, small prime fields and the integers.

mod f2;
mod fp;
mod lattice;
mod zmatrix;

pub use f2::{f2_rank_kernel, F2Matrix};
pub use fp::{is_prime_u64, spin_up, FpMatrix, PrimeField, RowEchelon};
pub use lattice::{lattice_index, saturate, saturate_within, Index, Lattice, LatticeError};
pub use zmatrix::{integer_kernel, smith_invariants, smith_normal_form, SmithForm, ZMatrix};
