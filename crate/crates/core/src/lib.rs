//! Exact computational algebra for Kummer varieties attached to 2-coverings
//! of products of hyperelliptic Jacobians.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function over immutable values; IO, case files and reports live in the
//! `kummer-verify` companion crate.
//!
//! Layout:
//!
//! * [`exact`]: F₂ / F_ℓ / integer linear algebra, Smith normal form, lattices.
//! * [`groups`]: permutation, matrix, semidirect and product groups with
//!   bounded Cayley enumeration.
//! * [`cohomology`]: G-modules over F_ℓ, simplicity, Hom spaces, H⁰ and H¹.
//! * [`galois`]: integer polynomials, discriminants, Dedekind cycle types and
//!   S_d / A_d certificates.
//! * [`disjoint`]: discriminant classes and linear disjointness certificates.
//! * [`kummer`]: the lattices Z[T] ⊂ Π₁ ⊂ Π, numerology and the torsor group
//!   action on them.
//! * [`pipeline`]: end-to-end verdicts and the worked-example audits.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cohomology;
pub mod disjoint;
pub mod exact;
pub mod galois;
pub mod groups;
pub mod kummer;
pub mod pipeline;

pub use num_bigint::BigInt;
