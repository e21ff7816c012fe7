use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::disjoint::{DisjointnessCertificate, FrobeniusStatistics};
use crate::galois::{GaloisCertificate, IntPolynomial, DEFAULT_PRIME_BOUND};
use crate::kummer::PicModelFactor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Disjointness must be certified.
    #[default]
    Certify,
    /// A `HeuristicOnly` disjointness verdict is accepted.
    Heuristic,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Certify => "certify",
            Mode::Heuristic => "heuristic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseFactor {
    pub polynomial: IntPolynomial,
    pub torsor_nontrivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseInput {
    pub factors: Vec<CaseFactor>,
    pub prime_bound: u64,
    pub mode: Mode,
    /// Forces the named check to fail; used to audit that conclusions are
    /// withheld.
    pub forced_failure: Option<HypothesisCheck>,
}

impl CaseInput {
    pub fn new(factors: Vec<CaseFactor>) -> Self {
        Self { factors, prime_bound: DEFAULT_PRIME_BOUND, mode: Mode::Certify, forced_failure: None }
    }
}

/// The hypotheses checked by the pipeline, in evaluation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HypothesisCheck {
    /// Each Galois group is `S_d` or `A_d` (`S₃` when `d = 3`).
    GaloisGroups,
    /// The splitting fields are linearly disjoint.
    Disjointness,
    /// Each `A_i[2]` is absolutely simple.
    AbsoluteSimplicity,
    /// `H¹(G_i, A_i[2]) = 0` for each factor.
    GroupCohomology,
    /// `H¹(P, Π₁) = 0`.
    KummerLatticeCohomology,
    /// `H¹(P, Pic-model) = 0`.
    PicModelCohomology,
}

impl HypothesisCheck {
    pub const ALL: [HypothesisCheck; 6] = [
        HypothesisCheck::GaloisGroups,
        HypothesisCheck::Disjointness,
        HypothesisCheck::AbsoluteSimplicity,
        HypothesisCheck::GroupCohomology,
        HypothesisCheck::KummerLatticeCohomology,
        HypothesisCheck::PicModelCohomology,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            HypothesisCheck::GaloisGroups => "galois_groups",
            HypothesisCheck::Disjointness => "disjointness",
            HypothesisCheck::AbsoluteSimplicity => "absolute_simplicity",
            HypothesisCheck::GroupCohomology => "h1_galois_module",
            HypothesisCheck::KummerLatticeCohomology => "h1_kummer_lattice",
            HypothesisCheck::PicModelCohomology => "h1_pic_model",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.as_str() == s)
    }
}

impl fmt::Display for HypothesisCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Passed,
    Failed,
    /// Not evaluated because an earlier check failed.
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Passed => "passed",
            CheckStatus::Failed => "failed",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub check: HypothesisCheck,
    pub status: CheckStatus,
    pub detail: String,
}

/// Where a conclusion comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    Computed,
    Cited(&'static str),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Computed => f.write_str("COMPUTED"),
            Source::Cited(t) => write!(f, "CITED({t})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConclusionValue {
    Count(u64),
    Flag(bool),
    Note(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conclusion {
    pub key: &'static str,
    pub value: ConclusionValue,
    pub statement: &'static str,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorReport {
    pub polynomial: String,
    pub degree: usize,
    pub torsor_nontrivial: bool,
    pub galois: Option<GaloisCertificate>,
    pub disc_class: Option<String>,
    pub end_dim: Option<usize>,
    pub absolutely_simple: Option<bool>,
    /// `dim H¹(G_i, A_i[2])`.
    pub h1_group: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantAudit {
    pub group_order: BigInt,
    /// Nontrivial invariants of `H¹(P, Z[T])`; empty means zero.
    pub h1_zt: Vec<BigInt>,
    /// Nontrivial invariants of `H¹(P, Π₁)`.
    pub h1_pi1: Vec<BigInt>,
    /// Remark on `Π₁` having a `P`-stable Z-basis; `None` unless every torsor is trivial.
    pub pi1_permutation_basis: Option<bool>,
    /// Whether `P` is transitive on each factor's 2-torsion points.
    pub transitive: Vec<bool>,
    pub factors: Vec<PicModelFactor>,
    /// `dim H¹(P, ⊕ M_i)`.
    pub h1_pic_model: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairStatistics {
    pub left: usize,
    pub right: usize,
    pub statistics: FrobeniusStatistics,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerdictReport {
    pub g: usize,
    pub n: usize,
    pub mode: Mode,
    pub prime_bound: u64,
    pub factors: Vec<FactorReport>,
    pub checks: Vec<CheckResult>,
    pub disjointness: Option<DisjointnessCertificate>,
    pub frobenius: Vec<PairStatistics>,
    pub equivariant: Option<EquivariantAudit>,
    /// Empty when withheld.
    pub conclusions: Vec<Conclusion>,
    pub withheld_by: Option<HypothesisCheck>,
    pub citations: Vec<Conclusion>,
}

impl VerdictReport {
    pub fn all_asserted(&self) -> bool {
        self.withheld_by.is_none() && !self.conclusions.is_empty()
    }

    pub fn check(&self, c: HypothesisCheck) -> Option<&CheckResult> {
        self.checks.iter().find(|r| r.check == c)
    }

    pub fn conclusion(&self, key: &str) -> Option<&Conclusion> {
        self.conclusions.iter().find(|c| c.key == key)
    }
}
