//! Linear disjointness of splitting fields: discriminant square classes,
//! their F₂-independence, and a Frobenius-statistics fallback.

mod class;
mod factor;
mod family;
mod stats;

use alloc::string::String;
use thiserror::Error;

pub use class::{disc_class, DiscClass, Sign};
pub use factor::{factor, is_prime_u64_mr, DEFAULT_FACTOR_BUDGET};
pub use family::{certify_family_disjoint, DisjointnessCertificate, DisjointnessVerdict};
pub use stats::{frobenius_joint_statistics, FrobeniusStatistics};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DisjointError {
    #[error("factoring the discriminant exceeded the budget")]
    FactorBudgetExceeded,
    #[error("polynomial is inseparable or constant")]
    Inseparable,
    #[error("inconsistent input: {0}")]
    InputMismatch(String),
}
