use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::is_prime_u64;
use crate::galois::{cycle_type_mod_p, FrobeniusType, IntPolynomial, MAX_REDUCTION_PRIME};

/// Dependence between the Frobenius cycle types of two polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusStatistics {
    /// Primes where both reductions are squarefree of full degree.
    pub primes_used: usize,
    /// Total-variation distance between the joint distribution and the
    /// product of its marginals.
    pub total_variation: f64,
    /// `total_variation / min(1 − Σp², 1 − Σq²)`; the denominator bounds the
    /// distance for any coupling and is attained by identical variables, so
    /// the score lies in `[0, 1]`. Zero when a marginal is a point mass.
    pub score: f64,
}

fn abs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}

/// Empirical cycle-type dependence over primes below `prime_bound`.
///
/// A heuristic only: independence of the statistics is necessary for
/// disjointness but never sufficient.
pub fn frobenius_joint_statistics(f1: &IntPolynomial, f2: &IntPolynomial, prime_bound: u64) -> FrobeniusStatistics {
    let mut joint: BTreeMap<(Vec<usize>, Vec<usize>), u64> = BTreeMap::new();
    let mut left: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut right: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut n = 0u64;
    let leads = [f1.leading().cloned(), f2.leading().cloned()];
    for p in (2..prime_bound.min(MAX_REDUCTION_PRIME)).filter(|&p| is_prime_u64(p)) {
        let bp = BigInt::from(p);
        if leads.iter().any(|l| l.as_ref().is_none_or(|l| (l % &bp).is_zero())) {
            continue;
        }
        let (Ok(FrobeniusType::Unramified(a)), Ok(FrobeniusType::Unramified(b))) =
            (cycle_type_mod_p(f1, p), cycle_type_mod_p(f2, p))
        else {
            continue;
        };
        *left.entry(a.clone()).or_default() += 1;
        *right.entry(b.clone()).or_default() += 1;
        *joint.entry((a, b)).or_default() += 1;
        n += 1;
    }
    if n == 0 {
        return FrobeniusStatistics { primes_used: 0, total_variation: 0.0, score: 0.0 };
    }
    let nf = n as f64;
    let mut tv = 0.0;
    for (a, &ca) in &left {
        for (b, &cb) in &right {
            let observed = joint.get(&(a.clone(), b.clone())).copied().unwrap_or(0) as f64 / nf;
            let product = (ca as f64 / nf) * (cb as f64 / nf);
            tv += abs(observed - product);
        }
    }
    tv /= 2.0;
    let collision = |m: &BTreeMap<Vec<usize>, u64>| m.values().map(|&c| (c as f64 / nf) * (c as f64 / nf)).sum::<f64>();
    let bound = (1.0 - collision(&left)).min(1.0 - collision(&right));
    let score = if bound > 0.0 { (tv / bound).min(1.0) } else { 0.0 };
    FrobeniusStatistics { primes_used: n as usize, total_variation: tv, score }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_polynomials_are_fully_dependent() {
        let f = IntPolynomial::from_i64(&[1, -1, 0, 0, 0, 1]);
        let s = frobenius_joint_statistics(&f, &f, 2000);
        assert!(s.primes_used > 250);
        assert!(abs(s.score - 1.0) < 1e-9, "{s:?}");
        let shifted = frobenius_joint_statistics(&f, &f.shift(1), 2000);
        assert!(abs(shifted.score - 1.0) < 1e-9, "{shifted:?}");
    }
}
