//! Case files: `{"factors": [{"poly": [c0, …, cd], "torsor_nontrivial": b}], "prime_bound": N}`.
//!
//! Coefficients are decimal strings (plain JSON integers are also accepted),
//! constant term first.

use std::path::Path;

use kummer_core::galois::{IntPolynomial, DEFAULT_PRIME_BOUND};
use kummer_core::pipeline::{CaseFactor, CaseInput, Mode};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CaseFileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed case file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("factor {factor}: coefficient {index} is not an integer: {text:?}")]
    Coefficient { factor: usize, index: usize, text: String },
    #[error("unknown mode {0:?} (expected \"certify\" or \"heuristic\")")]
    Mode(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Text(String),
    Int(i64),
}

impl Coefficient {
    fn text(&self) -> String {
        match self {
            Coefficient::Text(s) => s.clone(),
            Coefficient::Int(n) => n.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSpec {
    pub poly: Vec<Coefficient>,
    #[serde(default)]
    pub torsor_nontrivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseFile {
    pub factors: Vec<FactorSpec>,
    #[serde(default)]
    pub prime_bound: Option<u64>,
    #[serde(default)]
    pub mode: Option<String>,
}

pub fn parse_mode(s: &str) -> Result<Mode, CaseFileError> {
    match s {
        "certify" => Ok(Mode::Certify),
        "heuristic" => Ok(Mode::Heuristic),
        other => Err(CaseFileError::Mode(other.to_string())),
    }
}

impl CaseFile {
    pub fn from_json(text: &str) -> Result<Self, CaseFileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, CaseFileError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CaseFileError::Io { path: path.display().to_string(), source })?;
        Self::from_json(&text)
    }

    pub fn to_case(&self) -> Result<CaseInput, CaseFileError> {
        let factors = self
            .factors
            .iter()
            .enumerate()
            .map(|(factor, spec)| {
                let texts: Vec<String> = spec.poly.iter().map(Coefficient::text).collect();
                let polynomial = IntPolynomial::from_decimal_strs(&texts).map_err(|_| {
                    let index = texts.iter().position(|t| t.trim().parse::<num_bigint::BigInt>().is_err()).unwrap_or(0);
                    CaseFileError::Coefficient { factor, index, text: texts[index].clone() }
                })?;
                Ok(CaseFactor { polynomial, torsor_nontrivial: spec.torsor_nontrivial })
            })
            .collect::<Result<Vec<_>, CaseFileError>>()?;
        let mut case = CaseInput::new(factors);
        case.prime_bound = self.prime_bound.unwrap_or(DEFAULT_PRIME_BOUND);
        if let Some(m) = &self.mode {
            case.mode = parse_mode(m)?;
        }
        Ok(case)
    }
}
