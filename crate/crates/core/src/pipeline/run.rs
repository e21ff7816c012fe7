use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::case::*;
use super::PipelineError;
use crate::cohomology::{
    endomorphism_algebra_dim, h1, is_absolutely_simple, standard_module, GModule, PermutationFamily,
};
use crate::disjoint::{
    certify_family_disjoint, disc_class, frobenius_joint_statistics, DisjointnessCertificate, DisjointnessVerdict,
    DEFAULT_FACTOR_BUDGET,
};
use crate::galois::{certify_galois, GaloisVerdict};
use crate::kummer::{
    build_nikulin_lattice_with_ns, equivariant_lattice, numerology, pic_model_factor, torsor_group, TorsorFactor,
    MAX_LATTICE_G,
};

const BRAUER_THEOREM: &str = "2-primary Brauer classes under a large 2-torsion Galois image";
const FAMILY_THEOREM: &str = "Galois invariants of the geometric 2-primary Brauer group for disjoint factors";
const ODD_PART_THEOREM: &str = "odd-order Brauer classes on Kummer varieties";
const AFFINE_H1_FACT: &str = "cohomology of the affine group of a simple module";
const TORSOR_FIELDS_FACT: &str = "disjointness of torsor fields from disjointness of 2-torsion fields";

struct Run<'a> {
    case: &'a CaseInput,
    report: VerdictReport,
}

impl Run<'_> {
    /// Records `check`; a forced failure overrides a pass. Returns whether it passed.
    fn record(&mut self, check: HypothesisCheck, passed: bool, detail: String) -> bool {
        let forced = self.case.forced_failure == Some(check);
        let (status, detail) = match (passed, forced) {
            (true, false) => (CheckStatus::Passed, detail),
            (true, true) => (CheckStatus::Failed, format!("forced failure ({detail})")),
            (false, _) => (CheckStatus::Failed, detail),
        };
        self.report.checks.push(CheckResult { check, status, detail });
        if status == CheckStatus::Failed {
            self.report.withheld_by = Some(check);
            for &later in HypothesisCheck::ALL.iter().filter(|&&c| c > check) {
                self.report.checks.push(CheckResult {
                    check: later,
                    status: CheckStatus::Skipped,
                    detail: format!("not evaluated: {check} failed"),
                });
            }
            return false;
        }
        true
    }
}

fn validate(case: &CaseInput) -> Result<usize, PipelineError> {
    if case.factors.is_empty() {
        return Err(PipelineError::InvalidCase("no factors".into()));
    }
    let mut g = 0;
    for (i, f) in case.factors.iter().enumerate() {
        let d = f
            .polynomial
            .degree()
            .ok_or_else(|| PipelineError::InvalidCase(format!("factor {i} is the zero polynomial")))?;
        if d < 3 || d % 2 == 0 {
            return Err(PipelineError::InvalidCase(format!("factor {i} has degree {d}; odd degree ≥ 3 required")));
        }
        g += (d - 1) / 2;
    }
    if g < 2 {
        return Err(PipelineError::InvalidCase(format!("total dimension g = {g} is below 2")));
    }
    if case.prime_bound < 3 {
        return Err(PipelineError::InvalidCase("prime bound must be at least 3".into()));
    }
    Ok(g)
}

/// Runs every hypothesis check in order and asserts the conclusions only if
/// all of them pass. Stops at the first failure; later checks are skipped.
///
/// Errors are reserved for invalid input and for computed values that
/// contradict a fact the argument relies on.
pub fn run_case(case: &CaseInput) -> Result<VerdictReport, PipelineError> {
    let g = validate(case)?;
    let n = case.factors.len();
    let report = VerdictReport {
        g,
        n,
        mode: case.mode,
        prime_bound: case.prime_bound,
        factors: case
            .factors
            .iter()
            .map(|f| FactorReport {
                polynomial: f.polynomial.to_string(),
                degree: f.polynomial.degree().expect("validated"),
                torsor_nontrivial: f.torsor_nontrivial,
                galois: None,
                disc_class: None,
                end_dim: None,
                absolutely_simple: None,
                h1_group: None,
            })
            .collect(),
        checks: Vec::new(),
        disjointness: None,
        frobenius: Vec::new(),
        equivariant: None,
        conclusions: Vec::new(),
        withheld_by: None,
        citations: citations(),
    };
    let mut run = Run { case, report };
    if run.evaluate()? {
        run.report.conclusions = conclusions(g, n)?;
    }
    Ok(run.report)
}

impl Run<'_> {
    fn evaluate(&mut self) -> Result<bool, PipelineError> {
        let case = self.case;

        // Galois groups
        let mut certs = Vec::with_capacity(case.factors.len());
        let mut problems = Vec::new();
        for (i, f) in case.factors.iter().enumerate() {
            let cert = certify_galois(&f.polynomial, case.prime_bound)?;
            match (cert.verdict, cert.degree) {
                (GaloisVerdict::Unknown, _) => problems.push(format!(
                    "factor {i}: undetermined ({})",
                    cert.diagnostic.clone().unwrap_or_default()
                )),
                (GaloisVerdict::AlternatingGroup, 3) => problems.push(format!("factor {i}: A₃ is excluded in degree 3")),
                _ => {}
            }
            self.report.factors[i].galois = Some(cert.clone());
            certs.push(cert);
        }
        let summary: Vec<String> = certs
            .iter()
            .map(|c| match c.verdict {
                GaloisVerdict::SymmetricGroup => format!("S{}", c.degree),
                GaloisVerdict::AlternatingGroup => format!("A{}", c.degree),
                GaloisVerdict::Unknown => "?".into(),
            })
            .collect();
        let detail = if problems.is_empty() { summary.join(", ") } else { problems.join("; ") };
        if !self.record(HypothesisCheck::GaloisGroups, problems.is_empty(), detail) {
            return Ok(false);
        }

        // Disjointness
        let mut classes = Vec::with_capacity(certs.len());
        let mut budget_exceeded = false;
        for (i, f) in case.factors.iter().enumerate() {
            match disc_class(&f.polynomial, DEFAULT_FACTOR_BUDGET) {
                Ok(c) => {
                    self.report.factors[i].disc_class = Some(c.to_string());
                    classes.push(c);
                }
                Err(crate::disjoint::DisjointError::FactorBudgetExceeded) => budget_exceeded = true,
                Err(e) => return Err(e.into()),
            }
        }
        let cert = if budget_exceeded {
            DisjointnessCertificate::heuristic("a discriminant could not be factored within the budget")
        } else {
            certify_family_disjoint(&certs, &classes)?
        };
        if cert.verdict == DisjointnessVerdict::HeuristicOnly {
            let count = case.factors.len();
            for i in 0..count {
                for j in i + 1..count {
                    let statistics = frobenius_joint_statistics(
                        &case.factors[i].polynomial,
                        &case.factors[j].polynomial,
                        case.prime_bound,
                    );
                    self.report.frobenius.push(PairStatistics { left: i, right: j, statistics });
                }
            }
        }
        let passed = match cert.verdict {
            DisjointnessVerdict::Certified => true,
            DisjointnessVerdict::HeuristicOnly => case.mode == Mode::Heuristic,
            DisjointnessVerdict::Failed => false,
        };
        let detail = format!("{:?}: {}", cert.verdict, cert.reason);
        self.report.disjointness = Some(cert);
        if !self.record(HypothesisCheck::Disjointness, passed, detail) {
            return Ok(false);
        }

        // Absolute simplicity
        let mut modules: Vec<GModule> = Vec::with_capacity(certs.len());
        let mut bad = Vec::new();
        for (i, c) in certs.iter().enumerate() {
            let family = match c.verdict {
                GaloisVerdict::SymmetricGroup => PermutationFamily::Symmetric,
                _ => PermutationFamily::Alternating,
            };
            let m = standard_module(c.degree, family)?;
            let simple = is_absolutely_simple(&m)?;
            let end = endomorphism_algebra_dim(&m);
            self.report.factors[i].absolutely_simple = Some(simple);
            self.report.factors[i].end_dim = Some(end);
            if !simple {
                bad.push(format!("factor {i}: End dimension {end}"));
            }
            modules.push(m);
        }
        let detail = if bad.is_empty() { "every A_i[2] is absolutely simple".into() } else { bad.join("; ") };
        if !self.record(HypothesisCheck::AbsoluteSimplicity, bad.is_empty(), detail) {
            return Ok(false);
        }

        // H¹(G_i, A_i[2])
        let mut bad = Vec::new();
        for (i, m) in modules.iter().enumerate() {
            let d = h1(m)?.h1_dim();
            self.report.factors[i].h1_group = Some(d);
            if d != 0 {
                bad.push(format!("factor {i}: dim H¹ = {d}"));
            }
        }
        let detail = if bad.is_empty() { "H¹(G_i, A_i[2]) = 0 for every factor".into() } else { bad.join("; ") };
        if !self.record(HypothesisCheck::GroupCohomology, bad.is_empty(), detail) {
            return Ok(false);
        }

        // H¹(P, Π₁)
        if self.report.g > MAX_LATTICE_G {
            let detail = format!("not computable: g = {} exceeds the lattice bound {MAX_LATTICE_G}", self.report.g);
            self.record(HypothesisCheck::KummerLatticeCohomology, false, detail);
            return Ok(false);
        }
        let factors: Vec<TorsorFactor> = modules
            .into_iter()
            .zip(&case.factors)
            .map(|(module, f)| TorsorFactor { module, nontrivial: f.torsor_nontrivial })
            .collect();
        let model = build_nikulin_lattice_with_ns(self.report.g, self.report.n)?;
        let p = torsor_group(&factors)?;
        let e = equivariant_lattice(&model, &p)?;
        let h1_zt = e.h1_zt()?;
        if !h1_zt.is_empty() {
            return Err(PipelineError::Discrepancy(format!("H¹(P, Z[T]) has invariants {h1_zt:?}")));
        }
        let h1_pi1 = e.h1_pi1()?;
        let basis = e.pi1_permutation_basis();
        if basis == Some(false) {
            return Err(PipelineError::Discrepancy("trivial torsors but Π₁ has no P-stable basis".into()));
        }
        let transitive: Vec<bool> = (0..factors.len()).map(|i| p.factor_transitive(i)).collect();
        for (i, f) in factors.iter().enumerate() {
            if f.nontrivial && !transitive[i] {
                return Err(PipelineError::Discrepancy(format!("factor {i}: affine action is not transitive")));
            }
        }
        let mut audit = EquivariantAudit {
            group_order: p.order.clone(),
            h1_zt,
            h1_pi1: h1_pi1.clone(),
            pi1_permutation_basis: basis,
            transitive,
            factors: Vec::new(),
            h1_pic_model: 0,
        };
        let passed = h1_pi1.is_empty();
        let detail = if passed {
            format!("H¹(P, Π₁) = 0 for |P| = {}", p.order)
        } else {
            format!("H¹(P, Π₁) has invariants {h1_pi1:?}")
        };
        self.report.equivariant = Some(audit.clone());
        if !self.record(HypothesisCheck::KummerLatticeCohomology, passed, detail) {
            return Ok(false);
        }

        // H¹(P, Pic-model)
        let mut bad = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            let pic = pic_model_factor(f)?;
            if pic.h0_v != 0 || pic.h0_v_dual != 0 {
                return Err(PipelineError::Discrepancy(format!("factor {i}: A_i[2] has nonzero invariants")));
            }
            let expected = f.nontrivial as usize;
            if pic.h1_v != expected {
                return Err(PipelineError::Discrepancy(format!(
                    "factor {i}: dim H¹(P, A_i[2]) = {} but {} is expected",
                    pic.h1_v, expected
                )));
            }
            if f.nontrivial {
                if pic.form_rank != f.module.dim() {
                    bad.push(format!("factor {i}: invariant form has rank {}", pic.form_rank));
                }
                if !pic.differential_nonzero {
                    bad.push(format!("factor {i}: the differential misses the torsor class"));
                }
            }
            if pic.h1_model != 0 {
                bad.push(format!("factor {i}: dim H¹ = {}", pic.h1_model));
            }
            audit.h1_pic_model += pic.h1_model;
            audit.factors.push(pic);
        }
        let passed = bad.is_empty();
        let detail = if passed { "H¹(P, Pic-model) = 0".into() } else { bad.join("; ") };
        self.report.equivariant = Some(audit);
        Ok(self.record(HypothesisCheck::PicModelCohomology, passed, detail))
    }
}

fn conclusions(g: usize, n: usize) -> Result<Vec<Conclusion>, PipelineError> {
    let num = numerology(g, n)?;
    Ok(vec![
        Conclusion {
            key: "picard_rank",
            value: ConclusionValue::Count(num.picard_rank),
            statement: "rank of Pic(X̄) = 2^{2g} + n",
            source: Source::Computed,
        },
        Conclusion {
            key: "br2_algebraic",
            value: ConclusionValue::Flag(true),
            statement: "Br(X){2} ⊂ Br₁(X)",
            source: Source::Cited(BRAUER_THEOREM),
        },
        Conclusion {
            key: "br1_equals_br0",
            value: ConclusionValue::Flag(true),
            statement: "Br₁(X) = Br₀(X)",
            source: Source::Cited(BRAUER_THEOREM),
        },
        Conclusion {
            key: "br_bar_2_invariants_zero",
            value: ConclusionValue::Flag(true),
            statement: "Br(X̄)[2]^Γ = 0",
            source: Source::Cited(FAMILY_THEOREM),
        },
        Conclusion {
            key: "odd_part_unobstructed_note",
            value: ConclusionValue::Note(
                "if X has adelic points then the odd part of Br(X) imposes no Brauer-Manin obstruction".into(),
            ),
            statement: "X(A_k)^{Br(X)_odd} ≠ ∅ whenever X(A_k) ≠ ∅",
            source: Source::Cited(ODD_PART_THEOREM),
        },
    ])
}

fn citations() -> Vec<Conclusion> {
    vec![
        Conclusion {
            key: "affine_group_h1",
            value: ConclusionValue::Note("recomputed in the equivariant audit, not assumed".into()),
            statement: "H¹(V ⋊ G, V) = F₂ for an absolutely simple V with H¹(G, V) = 0",
            source: Source::Cited(AFFINE_H1_FACT),
        },
        Conclusion {
            key: "torsor_fields_disjoint",
            value: ConclusionValue::Note("follows from the disjointness check, not computed".into()),
            statement: "the fields k(T_i) are linearly disjoint when the k(A_i[2]) are",
            source: Source::Cited(TORSOR_FIELDS_FACT),
        },
        Conclusion {
            key: "odd_part",
            value: ConclusionValue::Note("cited, not computed".into()),
            statement: "odd-order Brauer classes do not obstruct",
            source: Source::Cited(ODD_PART_THEOREM),
        },
    ]
}
