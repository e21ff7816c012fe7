//! Integer polynomials, discriminants, Frobenius cycle types and
//! certificates that a Galois group is `S_d` or `A_d`.

mod cert;
mod modp;
mod poly;

use thiserror::Error;

pub use cert::{
    certify_galois, disc_is_square, jordan_cycle_primes, GaloisCertificate, GaloisVerdict,
    Witness, WitnessRole, DEFAULT_PRIME_BOUND,
};
pub use modp::{cycle_type_mod_p, FrobeniusType, MAX_REDUCTION_PRIME};
pub use poly::{discriminant, resultant, sylvester_matrix, IntPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error("{0} is not a usable reduction prime for this polynomial")]
    BadPrime(u64),
    #[error("the zero polynomial has no Galois group")]
    ZeroPolynomial,
    #[error("degree {0} is even")]
    EvenDegree(usize),
    #[error("polynomial is inseparable (zero discriminant)")]
    Inseparable,
    #[error("zero has no square class")]
    ZeroInput,
}
