use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::modp::{cycle_type_mod_p, FrobeniusType, MAX_REDUCTION_PRIME};
use super::poly::{discriminant, IntPolynomial};
use super::GaloisError;
use crate::exact::is_prime_u64;

/// Default bound for the ascending prime scan.
pub const DEFAULT_PRIME_BOUND: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GaloisVerdict {
    SymmetricGroup,
    AlternatingGroup,
    Unknown,
}

/// What a witness prime proves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessRole {
    /// `f mod p` irreducible: the group is transitive.
    Irreducible,
    /// A power of Frobenius is a `q`-cycle for a prime `q` from the degree table.
    Jordan { cycle: usize },
    /// Frobenius is an odd permutation.
    OddPermutation,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub prime: u64,
    pub cycle_type: Vec<usize>,
    pub role: WitnessRole,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisCertificate {
    pub degree: usize,
    pub verdict: GaloisVerdict,
    pub witnesses: Vec<Witness>,
    pub discriminant: BigInt,
    pub disc_square: bool,
    /// Largest prime examined by the scan.
    pub prime_bound_used: u64,
    pub diagnostic: Option<String>,
}

/// Primes `q` such that a transitive group of degree `d` containing a
/// `q`-cycle contains `A_d`.
///
/// Degree 3: both transitive groups contain `A₃`.
/// Degree 5: the transitive groups are `C₅, D₅, F₂₀, A₅, S₅`; only `A₅, S₅`
/// have order divisible by 3, and `C₅, D₅, F₂₀` contain no transposition.
/// Degree 7: the transitive groups are `C₇, D₇, F₂₁, F₄₂, PSL(3,2), A₇, S₇`;
/// only `A₇, S₇` have order divisible by 5, and `q ∈ {2, 3}` satisfies
/// `q ≤ d − 3` in Jordan's theorem for primitive groups (prime degree makes
/// transitive groups primitive).
pub fn jordan_cycle_primes(d: usize) -> &'static [usize] {
    match d {
        3 => &[3],
        5 => &[2, 3],
        7 => &[2, 3, 5],
        _ => &[],
    }
}

/// The prime `q` from the table for which some power of a permutation with
/// this cycle type is a `q`-cycle: exactly one cycle length is divisible by
/// `q` and that length equals `q`.
fn jordan_cycle(d: usize, cycle_type: &[usize]) -> Option<usize> {
    jordan_cycle_primes(d).iter().copied().find(|&q| {
        let mut divisible = cycle_type.iter().filter(|&&len| len % q == 0);
        divisible.next() == Some(&q) && divisible.next().is_none()
    })
}

fn is_odd(d: usize, cycle_type: &[usize]) -> bool {
    (d - cycle_type.len()) % 2 == 1
}

/// True iff `n` is a perfect square in Z.
pub fn disc_is_square(n: &BigInt) -> Result<bool, GaloisError> {
    if n.is_zero() {
        return Err(GaloisError::ZeroInput);
    }
    if n.is_negative() {
        return Ok(false);
    }
    let r = n.sqrt();
    Ok(&r * &r == *n)
}

/// Proves `Gal(f) ⊇ A_d` from an irreducibility prime and a Jordan prime,
/// then decides `A_d` versus `S_d` by the discriminant; an `S_d` verdict
/// also records an odd Frobenius. Primes are scanned in increasing order.
pub fn certify_galois(f: &IntPolynomial, prime_bound: u64) -> Result<GaloisCertificate, GaloisError> {
    let d = f.degree().ok_or(GaloisError::ZeroPolynomial)?;
    if d % 2 == 0 {
        return Err(GaloisError::EvenDegree(d));
    }
    let disc = discriminant(f);
    if disc.is_zero() {
        return Err(GaloisError::Inseparable);
    }
    let disc_square = disc_is_square(&disc)?;
    let mut cert = GaloisCertificate {
        degree: d,
        verdict: GaloisVerdict::Unknown,
        witnesses: Vec::new(),
        discriminant: disc,
        disc_square,
        prime_bound_used: 0,
        diagnostic: None,
    };
    if jordan_cycle_primes(d).is_empty() {
        cert.diagnostic = Some(alloc::format!("degree {d} is outside the supported set {{3, 5, 7}}"));
        return Ok(cert);
    }
    let lead = f.leading().expect("nonzero").clone();
    let (mut irreducible, mut jordan, mut odd) = (None, None, None);
    let need_odd = !disc_square;
    let bound = prime_bound.min(MAX_REDUCTION_PRIME - 1);
    for p in (2..=bound).filter(|&p| is_prime_u64(p)) {
        cert.prime_bound_used = p;
        if (&lead % BigInt::from(p)).is_zero() {
            continue;
        }
        let FrobeniusType::Unramified(ct) = cycle_type_mod_p(f, p)? else { continue };
        if irreducible.is_none() && ct.len() == 1 {
            irreducible = Some(Witness { prime: p, cycle_type: ct.clone(), role: WitnessRole::Irreducible });
        }
        if jordan.is_none() {
            if let Some(cycle) = jordan_cycle(d, &ct) {
                jordan = Some(Witness { prime: p, cycle_type: ct.clone(), role: WitnessRole::Jordan { cycle } });
            }
        }
        if need_odd && odd.is_none() && is_odd(d, &ct) {
            odd = Some(Witness { prime: p, cycle_type: ct, role: WitnessRole::OddPermutation });
        }
        if irreducible.is_some() && jordan.is_some() && (!need_odd || odd.is_some()) {
            break;
        }
    }
    match (irreducible, jordan, odd) {
        (Some(i), Some(j), o) if !need_odd || o.is_some() => {
            cert.witnesses.push(i);
            cert.witnesses.push(j);
            if let Some(o) = o {
                cert.witnesses.push(o);
                cert.verdict = GaloisVerdict::SymmetricGroup;
            } else {
                cert.verdict = GaloisVerdict::AlternatingGroup;
            }
        }
        (i, j, o) => {
            let missing: Vec<&str> = [
                i.is_none().then_some("irreducibility prime"),
                j.is_none().then_some("Jordan cycle prime"),
                (need_odd && o.is_none()).then_some("odd Frobenius"),
            ]
            .into_iter()
            .flatten()
            .collect();
            cert.diagnostic = Some(alloc::format!("no {} below {}", missing.join(", "), prime_bound));
        }
    }
    Ok(cert)
}

impl GaloisCertificate {
    /// Recomputes every witness cycle type and re-applies the rules.
    pub fn replay(&self, f: &IntPolynomial) -> bool {
        if self.verdict == GaloisVerdict::Unknown {
            return true;
        }
        let reproduced = self.witnesses.iter().all(|w| {
            cycle_type_mod_p(f, w.prime) == Ok(FrobeniusType::Unramified(w.cycle_type.clone()))
        });
        let has = |pred: &dyn Fn(&Witness) -> bool| self.witnesses.iter().any(pred);
        let transitive = has(&|w| w.role == WitnessRole::Irreducible && w.cycle_type.len() == 1);
        let jordan = has(&|w| {
            matches!(w.role, WitnessRole::Jordan { cycle } if jordan_cycle(self.degree, &w.cycle_type) == Some(cycle))
        });
        let odd = has(&|w| w.role == WitnessRole::OddPermutation && is_odd(self.degree, &w.cycle_type));
        let square = disc_is_square(&self.discriminant) == Ok(self.disc_square) && self.discriminant == discriminant(f);
        let parity = match self.verdict {
            GaloisVerdict::SymmetricGroup => odd && !self.disc_square,
            GaloisVerdict::AlternatingGroup => self.disc_square,
            GaloisVerdict::Unknown => unreachable!(),
        };
        reproduced && transitive && jordan && square && parity
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s5_certificate() {
        let f = IntPolynomial::from_i64(&[1, -1, 0, 0, 0, 1]);
        let c = certify_galois(&f, 200).unwrap();
        assert_eq!(c.verdict, GaloisVerdict::SymmetricGroup);
        assert!(!c.disc_square);
        assert!(c.replay(&f));
        assert_eq!(c.witnesses[1].prime, 2);
    }

    #[test]
    fn s3_certificate() {
        let f = IntPolynomial::from_i64(&[-1, -1, 0, 1]);
        let c = certify_galois(&f, 50).unwrap();
        assert_eq!(c.verdict, GaloisVerdict::SymmetricGroup);
        assert_eq!(c.discriminant, BigInt::from(-23));
    }

    #[test]
    fn a3_certificate() {
        // x³ − 3x + 1 has discriminant 81
        let f = IntPolynomial::from_i64(&[1, -3, 0, 1]);
        let c = certify_galois(&f, 100).unwrap();
        assert_eq!(c.verdict, GaloisVerdict::AlternatingGroup);
        assert!(c.disc_square);
        assert!(c.replay(&f));
    }

    #[test]
    fn rejections() {
        let sextic = IntPolynomial::from_i64(&[5, -8, 4, 0, 4, -8, 4]);
        assert_eq!(certify_galois(&sextic, 100).unwrap_err(), GaloisError::EvenDegree(6));
        let square = IntPolynomial::from_i64(&[0, 0, 0, 1]);
        assert_eq!(certify_galois(&square, 100).unwrap_err(), GaloisError::Inseparable);
        let nine = IntPolynomial::from_i64(&[1, -1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let c = certify_galois(&nine, 100).unwrap();
        assert_eq!(c.verdict, GaloisVerdict::Unknown);
        assert!(c.diagnostic.is_some());
        // reducible: x(x² + 1)(x² + 2) has no irreducibility prime
        let red = IntPolynomial::from_i64(&[0, 2, 0, 3, 0, 1]);
        assert_eq!(certify_galois(&red, 200).unwrap().verdict, GaloisVerdict::Unknown);
    }

    #[test]
    fn square_test() {
        assert_eq!(disc_is_square(&BigInt::from(2869)), Ok(false));
        assert_eq!(disc_is_square(&BigInt::from(4)), Ok(true));
        assert_eq!(disc_is_square(&BigInt::from(-23)), Ok(false));
        assert_eq!(disc_is_square(&BigInt::zero()), Err(GaloisError::ZeroInput));
    }
}
