//! JSON mirrors of the verdict report and the example audits.
//!
//! Field order is fixed and big integers are decimal strings, so identical
//! inputs serialize to identical bytes.

use kummer_core::cohomology::PermutationFamily;
use kummer_core::disjoint::DisjointnessCertificate;
use kummer_core::galois::{GaloisCertificate, GaloisVerdict, WitnessRole};
use kummer_core::kummer::PicModelFactor;
use kummer_core::pipeline::{
    Conclusion, ConclusionValue, EquivariantAudit, Example1Audit, Example2Audit, Example3Audit, VerdictReport,
};
use num_bigint::BigInt;
use serde::Serialize;

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// The S_d / A_d route is a choice of this tool: transitivity from an
/// irreducible reduction, `A_d` from a cycle-type table, parity from the
/// discriminant.
pub const GALOIS_METHOD: &str = "dedekind reduction with a jordan cycle-type table";

#[derive(Serialize)]
pub struct WitnessJson {
    pub prime: u64,
    pub cycle_type: Vec<usize>,
    pub role: String,
}

#[derive(Serialize)]
pub struct GaloisJson {
    pub verdict: String,
    /// How the verdict was certified.
    pub method: &'static str,
    pub witnesses: Vec<WitnessJson>,
    pub discriminant: String,
    pub disc_square: bool,
    pub prime_bound_used: u64,
    pub diagnostic: Option<String>,
}

impl From<&GaloisCertificate> for GaloisJson {
    fn from(c: &GaloisCertificate) -> Self {
        let verdict = match c.verdict {
            GaloisVerdict::SymmetricGroup => format!("S{}", c.degree),
            GaloisVerdict::AlternatingGroup => format!("A{}", c.degree),
            GaloisVerdict::Unknown => "unknown".into(),
        };
        let witnesses = c
            .witnesses
            .iter()
            .map(|w| WitnessJson {
                prime: w.prime,
                cycle_type: w.cycle_type.clone(),
                role: match w.role {
                    WitnessRole::Irreducible => "irreducible".into(),
                    WitnessRole::Jordan { cycle } => format!("jordan_{cycle}_cycle"),
                    WitnessRole::OddPermutation => "odd_permutation".into(),
                },
            })
            .collect();
        Self {
            verdict,
            method: GALOIS_METHOD,
            witnesses,
            discriminant: c.discriminant.to_string(),
            disc_square: c.disc_square,
            prime_bound_used: c.prime_bound_used,
            diagnostic: c.diagnostic.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct FactorJson {
    pub polynomial: String,
    pub degree: usize,
    pub torsor_nontrivial: bool,
    pub galois: Option<GaloisJson>,
    pub disc_class: Option<String>,
    pub end_dim: Option<usize>,
    pub absolutely_simple: Option<bool>,
    pub h1_galois_module: Option<usize>,
}

#[derive(Serialize)]
pub struct CheckJson {
    pub check: &'static str,
    pub status: &'static str,
    pub detail: String,
}

#[derive(Serialize)]
pub struct DisjointnessJson {
    pub verdict: String,
    pub reason: String,
    /// Column labels: the sign, then the primes.
    pub columns: Vec<String>,
    /// One bit string per symmetric factor.
    pub matrix: Vec<String>,
}

impl From<&DisjointnessCertificate> for DisjointnessJson {
    fn from(c: &DisjointnessCertificate) -> Self {
        let m = &c.disc_independence_matrix;
        let matrix = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| if m.get(i, j) { '1' } else { '0' }).collect())
            .collect();
        let mut columns = vec!["-1".to_string()];
        columns.extend(strings(&c.columns));
        Self { verdict: format!("{:?}", c.verdict), reason: c.reason.clone(), columns, matrix }
    }
}

#[derive(Serialize)]
pub struct FrobeniusJson {
    pub left: usize,
    pub right: usize,
    pub primes_used: usize,
    pub total_variation: f64,
    pub score: f64,
}

#[derive(Serialize)]
pub struct PicFactorJson {
    pub nontrivial: bool,
    pub h0_v: usize,
    pub h0_v_dual: usize,
    pub h1_v: usize,
    pub h1_v_dual: usize,
    pub form_rank: usize,
    pub differential_nonzero: bool,
    pub h1_model: usize,
}

impl From<&PicModelFactor> for PicFactorJson {
    fn from(p: &PicModelFactor) -> Self {
        Self {
            nontrivial: p.nontrivial,
            h0_v: p.h0_v,
            h0_v_dual: p.h0_v_dual,
            h1_v: p.h1_v,
            h1_v_dual: p.h1_v_dual,
            form_rank: p.form_rank,
            differential_nonzero: p.differential_nonzero,
            h1_model: p.h1_model,
        }
    }
}

#[derive(Serialize)]
pub struct EquivariantJson {
    pub group_order: String,
    pub h1_zt: Vec<String>,
    pub h1_pi1: Vec<String>,
    pub pi1_permutation_basis: Option<bool>,
    pub transitive: Vec<bool>,
    pub factors: Vec<PicFactorJson>,
    pub h1_pic_model: usize,
}

impl From<&EquivariantAudit> for EquivariantJson {
    fn from(e: &EquivariantAudit) -> Self {
        Self {
            group_order: e.group_order.to_string(),
            h1_zt: strings(&e.h1_zt),
            h1_pi1: strings(&e.h1_pi1),
            pi1_permutation_basis: e.pi1_permutation_basis,
            transitive: e.transitive.clone(),
            factors: e.factors.iter().map(Into::into).collect(),
            h1_pic_model: e.h1_pic_model,
        }
    }
}

#[derive(Serialize)]
pub struct ConclusionJson {
    pub key: &'static str,
    pub value: serde_json::Value,
    pub statement: &'static str,
    pub source: String,
}

impl From<&Conclusion> for ConclusionJson {
    fn from(c: &Conclusion) -> Self {
        let value = match &c.value {
            ConclusionValue::Count(n) => serde_json::Value::from(*n),
            ConclusionValue::Flag(b) => serde_json::Value::from(*b),
            ConclusionValue::Note(s) => serde_json::Value::from(s.clone()),
        };
        Self { key: c.key, value, statement: c.statement, source: c.source.to_string() }
    }
}

#[derive(Serialize)]
pub struct ReportJson {
    pub g: usize,
    pub n: usize,
    pub mode: &'static str,
    pub prime_bound: u64,
    pub factors: Vec<FactorJson>,
    pub checks: Vec<CheckJson>,
    pub disjointness: Option<DisjointnessJson>,
    pub frobenius: Vec<FrobeniusJson>,
    pub equivariant_audit: Option<EquivariantJson>,
    pub conclusions_asserted: bool,
    pub withheld_by: Option<&'static str>,
    pub conclusions: Vec<ConclusionJson>,
    pub citations: Vec<ConclusionJson>,
}

impl From<&VerdictReport> for ReportJson {
    fn from(r: &VerdictReport) -> Self {
        Self {
            g: r.g,
            n: r.n,
            mode: r.mode.as_str(),
            prime_bound: r.prime_bound,
            factors: r
                .factors
                .iter()
                .map(|f| FactorJson {
                    polynomial: f.polynomial.clone(),
                    degree: f.degree,
                    torsor_nontrivial: f.torsor_nontrivial,
                    galois: f.galois.as_ref().map(Into::into),
                    disc_class: f.disc_class.clone(),
                    end_dim: f.end_dim,
                    absolutely_simple: f.absolutely_simple,
                    h1_galois_module: f.h1_group,
                })
                .collect(),
            checks: r
                .checks
                .iter()
                .map(|c| CheckJson { check: c.check.as_str(), status: c.status.as_str(), detail: c.detail.clone() })
                .collect(),
            disjointness: r.disjointness.as_ref().map(Into::into),
            frobenius: r
                .frobenius
                .iter()
                .map(|p| FrobeniusJson {
                    left: p.left,
                    right: p.right,
                    primes_used: p.statistics.primes_used,
                    total_variation: p.statistics.total_variation,
                    score: p.statistics.score,
                })
                .collect(),
            equivariant_audit: r.equivariant.as_ref().map(Into::into),
            conclusions_asserted: r.all_asserted(),
            withheld_by: r.withheld_by.map(|c| c.as_str()),
            conclusions: r.conclusions.iter().map(Into::into).collect(),
            citations: r.citations.iter().map(Into::into).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct Example1Json {
    pub audit: &'static str,
    pub passed: bool,
    pub l: u32,
    pub sp_order: usize,
    pub has_index_l_normal_subgroup: bool,
    pub natural_module_absolutely_simple: bool,
    pub natural_module_end_dim: usize,
    pub psp_order_formula: String,
    pub cited: &'static str,
}

impl From<&Example1Audit> for Example1Json {
    fn from(a: &Example1Audit) -> Self {
        Self {
            audit: "example1",
            passed: a.passed(),
            l: a.l,
            sp_order: a.sp_order,
            has_index_l_normal_subgroup: a.has_index_l_normal_subgroup,
            natural_module_absolutely_simple: a.natural_absolutely_simple,
            natural_module_end_dim: a.natural_end_dim,
            psp_order_formula: a.psp_order_formula.to_string(),
            cited: "CITED(simplicity of PSp(4, F_l) for every prime l >= 3)",
        }
    }
}

#[derive(Serialize)]
pub struct Example2Json {
    pub audit: &'static str,
    pub passed: bool,
    pub s6_index2_quotient: usize,
    pub gsp_order: usize,
    pub gsp_index2_quotient: usize,
    pub gsp_index2_subgroup_is_sp: bool,
    pub sextic: String,
    pub sextic_discriminant: String,
    pub sextic_disc_class: String,
}

impl From<&Example2Audit> for Example2Json {
    fn from(a: &Example2Audit) -> Self {
        Self {
            audit: "example2",
            passed: a.passed(),
            s6_index2_quotient: a.s6_index2_quotient,
            gsp_order: a.gsp_order,
            gsp_index2_quotient: a.gsp_index2_quotient,
            gsp_index2_subgroup_is_sp: a.gsp_kernel_is_sp,
            sextic: kummer_core::pipeline::example_2_sextic().to_string(),
            sextic_discriminant: a.sextic_discriminant.to_string(),
            sextic_disc_class: a.sextic_disc_class.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct StandardModuleJson {
    pub group: String,
    pub absolutely_simple: bool,
    pub end_dim: usize,
    pub h1: usize,
}

#[derive(Serialize)]
pub struct Example3Json {
    pub audit: &'static str,
    pub passed: bool,
    pub modules: Vec<StandardModuleJson>,
    pub affine_group_order: String,
    pub h1_pi1: Vec<String>,
    pub pic_model: PicFactorJson,
    pub picard_prediction: u64,
    pub canonical_class_is_half_sum: bool,
    pub cited: &'static str,
}

impl From<&Example3Audit> for Example3Json {
    fn from(a: &Example3Audit) -> Self {
        Self {
            audit: "example3",
            passed: a.passed(),
            modules: a
                .modules
                .iter()
                .map(|m| StandardModuleJson {
                    group: match m.family {
                        PermutationFamily::Symmetric => format!("S{}", m.degree),
                        PermutationFamily::Alternating => format!("A{}", m.degree),
                    },
                    absolutely_simple: m.absolutely_simple,
                    end_dim: m.end_dim,
                    h1: m.h1,
                })
                .collect(),
            affine_group_order: a.affine_group_order.to_string(),
            h1_pi1: strings(&a.h1_pi1),
            pic_model: (&a.pic).into(),
            picard_prediction: a.picard_prediction,
            canonical_class_is_half_sum: a.canonical_class_half_sum,
            cited: "CITED(open image of the 2-adic representation for the genus-3 example)",
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
