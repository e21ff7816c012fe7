use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::class::{DiscClass, Sign};
use super::DisjointError;
use crate::exact::{f2_rank_kernel, F2Matrix};
use crate::galois::{GaloisCertificate, GaloisVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DisjointnessVerdict {
    Certified,
    HeuristicOnly,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointnessCertificate {
    pub verdict: DisjointnessVerdict,
    pub reason: String,
    /// One row per symmetric-type factor; column 0 is the sign, then the
    /// primes of `columns` in order.
    pub disc_independence_matrix: F2Matrix,
    pub columns: Vec<BigInt>,
}

impl DisjointnessCertificate {
    /// Certificate for a family whose discriminant classes could not be computed.
    pub fn heuristic(reason: impl Into<String>) -> Self {
        Self {
            verdict: DisjointnessVerdict::HeuristicOnly,
            reason: reason.into(),
            disc_independence_matrix: F2Matrix::zero(0, 0),
            columns: Vec::new(),
        }
    }
}

/// Linear disjointness of splitting fields with groups `S_d` or `A_d`.
///
/// Two alternating factors of the same degree share the simple quotient
/// `A_d`, so that pair is only `HeuristicOnly`; every other pair involving an
/// alternating factor has no common nontrivial quotient. The symmetric
/// factors are disjoint iff their discriminant classes are F₂-independent in
/// `Q*/Q*²`, because the commutator subgroup of any subdirect product forces
/// `∏ A_{d_i}` and the remaining `(Z/2)ⁿ` is detected by the square roots of
/// the discriminants.
pub fn certify_family_disjoint(
    certs: &[GaloisCertificate],
    classes: &[DiscClass],
) -> Result<DisjointnessCertificate, DisjointError> {
    if certs.len() != classes.len() {
        return Err(DisjointError::InputMismatch(alloc::format!(
            "{} certificates but {} discriminant classes",
            certs.len(),
            classes.len()
        )));
    }
    for (i, (c, k)) in certs.iter().zip(classes).enumerate() {
        if c.verdict == GaloisVerdict::Unknown {
            return Err(DisjointError::InputMismatch(alloc::format!("factor {i} has no certified Galois group")));
        }
        if (c.verdict == GaloisVerdict::AlternatingGroup) != k.is_trivial() {
            return Err(DisjointError::InputMismatch(alloc::format!(
                "factor {i}: discriminant class {k} contradicts the Galois verdict"
            )));
        }
    }

    let mut columns: Vec<BigInt> = Vec::new();
    for k in classes {
        for p in &k.support {
            if !columns.contains(p) {
                columns.push(p.clone());
            }
        }
    }
    columns.sort();
    let symmetric: Vec<&DiscClass> = certs
        .iter()
        .zip(classes)
        .filter(|(c, _)| c.verdict == GaloisVerdict::SymmetricGroup)
        .map(|(_, k)| k)
        .collect();
    let mut matrix = F2Matrix::zero(symmetric.len(), columns.len() + 1);
    for (r, k) in symmetric.iter().enumerate() {
        matrix.set(r, 0, k.sign == Sign::Minus);
        for p in &k.support {
            let c = columns.binary_search(p).expect("column collected above");
            matrix.set(r, c + 1, true);
        }
    }
    let rank = f2_rank_kernel(&matrix).0;

    let mut same_alternating = Vec::new();
    for i in 0..certs.len() {
        for j in i + 1..certs.len() {
            let both_alt = certs[i].verdict == GaloisVerdict::AlternatingGroup
                && certs[j].verdict == GaloisVerdict::AlternatingGroup;
            if both_alt && certs[i].degree == certs[j].degree {
                same_alternating.push((i, j));
            }
        }
    }

    let (verdict, reason) = if rank < symmetric.len() {
        (
            DisjointnessVerdict::Failed,
            alloc::format!(
                "discriminant classes of the {} symmetric factors span only rank {}",
                symmetric.len(),
                rank
            ),
        )
    } else if !same_alternating.is_empty() {
        let pairs: Vec<String> = same_alternating.iter().map(|(i, j)| alloc::format!("({i}, {j})")).collect();
        (
            DisjointnessVerdict::HeuristicOnly,
            alloc::format!(
                "alternating factors of equal degree {} may share their splitting field",
                pairs.join(", ")
            ),
        )
    } else {
        (
            DisjointnessVerdict::Certified,
            alloc::format!(
                "{} independent discriminant classes; no common quotient involving alternating factors",
                symmetric.len()
            ),
        )
    };
    Ok(DisjointnessCertificate { verdict, reason, disc_independence_matrix: matrix, columns })
}
