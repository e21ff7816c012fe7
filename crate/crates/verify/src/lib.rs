//! IO around `kummer-core`: JSON case files, JSON reports and the `verify`
//! command line tool.

pub mod case_file;
pub mod report;

use kummer_core::pipeline::{
    audit_example_1_odd, audit_example_2_goursat, audit_example_3_desk, run_case, CaseInput, PipelineError,
};

pub use case_file::{CaseFile, CaseFileError};

/// Every conclusion asserted, or the audit passed.
pub const EXIT_ASSERTED: u8 = 0;
/// Invalid input or a failed computation.
pub const EXIT_ERROR: u8 = 1;
/// Some hypothesis failed; conclusions withheld.
pub const EXIT_WITHHELD: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Audit {
    Example1,
    Example2,
    Example3,
}

/// A serialized report and whether everything it checks was asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub json: String,
    pub asserted: bool,
    pub summary: String,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.asserted {
            EXIT_ASSERTED
        } else {
            EXIT_WITHHELD
        }
    }
}

pub fn verify_case(case: &CaseInput) -> Result<Outcome, PipelineError> {
    let r = run_case(case)?;
    let summary = match r.withheld_by {
        None => format!("conclusions asserted: g = {}, n = {}", r.g, r.n),
        Some(c) => format!("conclusions withheld: {c} failed"),
    };
    Ok(Outcome { json: report::to_json(&report::ReportJson::from(&r)), asserted: r.all_asserted(), summary })
}

pub fn verify_audit(audit: Audit) -> Result<Outcome, PipelineError> {
    let (json, passed) = match audit {
        Audit::Example1 => {
            let a = audit_example_1_odd(3)?;
            (report::to_json(&report::Example1Json::from(&a)), a.passed())
        }
        Audit::Example2 => {
            let a = audit_example_2_goursat()?;
            (report::to_json(&report::Example2Json::from(&a)), a.passed())
        }
        Audit::Example3 => {
            let a = audit_example_3_desk()?;
            (report::to_json(&report::Example3Json::from(&a)), a.passed())
        }
    };
    let summary = format!("{audit:?} audit {}", if passed { "passed" } else { "failed" });
    Ok(Outcome { json, asserted: passed, summary })
}
