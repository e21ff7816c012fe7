use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, ValueEnum};
use kummer_core::pipeline::HypothesisCheck;
use kummer_verify::case_file::parse_mode;
use kummer_verify::{verify_audit, verify_case, Audit, CaseFile, Outcome, EXIT_ERROR};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AuditArg {
    Example1,
    Example2,
    Example3,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Certify,
    Heuristic,
}

/// Checks the hypotheses on Kummer varieties of 2-coverings of products of
/// hyperelliptic Jacobians and writes a JSON verdict report.
///
/// Exit codes: 0 all conclusions asserted, 2 conclusions withheld, 1 error.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Args {
    /// Case file (JSON).
    #[arg(long, required_unless_present = "audit")]
    input: Option<PathBuf>,
    /// Report destination; standard output when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Overrides the case file's prime bound.
    #[arg(long)]
    prime_bound: Option<u64>,
    /// Overrides the case file's mode.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Runs a fixed audit instead of a case file.
    #[arg(long, value_enum, conflicts_with = "input")]
    audit: Option<AuditArg>,
    /// Forces the named hypothesis check to fail.
    #[arg(long, hide = true)]
    inject_fault: Option<String>,
}

fn run(args: Args) -> anyhow::Result<Outcome> {
    if let Some(a) = args.audit {
        let audit = match a {
            AuditArg::Example1 => Audit::Example1,
            AuditArg::Example2 => Audit::Example2,
            AuditArg::Example3 => Audit::Example3,
        };
        return Ok(verify_audit(audit)?);
    }
    let path = args.input.as_ref().expect("clap enforces --input without --audit");
    let mut case = CaseFile::read(path)?.to_case()?;
    if let Some(p) = args.prime_bound {
        case.prime_bound = p;
    }
    if let Some(m) = args.mode {
        case.mode = parse_mode(match m {
            ModeArg::Certify => "certify",
            ModeArg::Heuristic => "heuristic",
        })?;
    }
    if let Some(name) = &args.inject_fault {
        match HypothesisCheck::from_name(name) {
            Some(c) => case.forced_failure = Some(c),
            None => bail!("unknown check {name:?}"),
        }
    }
    Ok(verify_case(&case)?)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let report = args.report.clone();
    let outcome = match run(args) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_ERROR);
        }
    };
    let written = match &report {
        Some(path) => std::fs::write(path, &outcome.json).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{}", outcome.json);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_ERROR);
    }
    eprintln!("{}", outcome.summary);
    ExitCode::from(outcome.exit_code())
}
