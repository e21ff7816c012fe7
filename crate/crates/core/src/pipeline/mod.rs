//! End-to-end verdicts: Galois certificates, disjointness, module checks and
//! the equivariant cohomology chain, plus fixed audits of the worked examples.

mod audits;
mod case;
mod run;

use alloc::string::String;
use thiserror::Error;

use crate::cohomology::CohomologyError;
use crate::disjoint::DisjointError;
use crate::galois::GaloisError;
use crate::groups::GroupError;
use crate::kummer::KummerError;

pub use audits::{
    audit_example_1_odd, audit_example_2_goursat, audit_example_3_desk, example_2_sextic, Example1Audit,
    Example2Audit, Example3Audit, StandardModuleAudit,
};
pub use case::{
    CaseFactor, CaseInput, CheckResult, CheckStatus, Conclusion, ConclusionValue, EquivariantAudit, FactorReport,
    HypothesisCheck, Mode, PairStatistics, Source, VerdictReport,
};
pub use run::run_case;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("invalid case: {0}")]
    InvalidCase(String),
    /// A computed value contradicts a fact the argument depends on.
    #[error("computed value contradicts the expected structure: {0}")]
    Discrepancy(String),
    #[error("prime {0} is outside the audited range")]
    UnsupportedPrime(u32),
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error(transparent)]
    Disjoint(#[from] DisjointError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Kummer(#[from] KummerError),
}
