use kummer_core::galois::*;
use kummer_core::BigInt;
use proptest::prelude::*;

/// Determinant by cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] * cofactor_det(&minor);
    }
    total
}

/// `(−1)^{d(d−1)/2} Res(f, f′) / a_d` with the resultant as a Sylvester determinant.
fn oracle_discriminant(f: &[i64]) -> i128 {
    let d = f.len() - 1;
    let df: Vec<i64> = (1..=d).map(|i| i as i64 * f[i]).collect();
    let (m, n) = (d, d - 1);
    let size = m + n;
    let mut s = vec![vec![0i128; size]; size];
    for r in 0..n {
        for (k, &c) in f.iter().rev().enumerate() {
            s[r][r + k] = c as i128;
        }
    }
    for r in 0..m {
        for (k, &c) in df.iter().rev().enumerate() {
            s[n + r][r + k] = c as i128;
        }
    }
    let res = cofactor_det(&s);
    let sign = if (d * (d - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    sign * res / f[d] as i128
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Quotient and remainder of `a` by monic `b` over F_p.
fn divmod_monic(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![0; r.len() - b.len() + 1];
    for shift in (0..q.len()).rev() {
        let c = r[shift + b.len() - 1];
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
    }
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

/// Degrees of the irreducible factors of `f mod p` (monic `f`) found by
/// dividing out the lowest-degree monic divisor from an exhaustive search;
/// `None` when a factor repeats.
fn oracle_cycle_type(f: &[i64], p: u64) -> Option<Vec<usize>> {
    let mut g: Vec<u64> = f.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
    trim(&mut g);
    let mut factors: Vec<Vec<u64>> = Vec::new();
    while g.len() > 1 {
        let (h, q) = (1..g.len())
            .find_map(|k| {
                (0..p.pow(k as u32)).find_map(|code| {
                    let mut h: Vec<u64> = (0..k).map(|i| code / p.pow(i as u32) % p).collect();
                    h.push(1);
                    let (q, r) = divmod_monic(&g, &h, p);
                    r.is_empty().then_some((h, q))
                })
            })
            .unwrap();
        if factors.contains(&h) {
            return None;
        }
        factors.push(h);
        g = q;
    }
    let mut degrees: Vec<usize> = factors.iter().map(|h| h.len() - 1).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Some(degrees)
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

const QUINTIC: [i64; 6] = [1, -1, 0, 0, 0, 1];

#[test]
fn discriminant_examples() {
    assert_eq!(discriminant(&poly(&QUINTIC)), BigInt::from(2869));
    assert_eq!(oracle_discriminant(&QUINTIC), 2869);
    assert_eq!(discriminant(&poly(&[-1, -1, 0, 1])), BigInt::from(-23));
    assert_eq!(oracle_discriminant(&[-1, -1, 0, 1]), -23);
    assert_eq!(discriminant(&poly(&[-1, 0, 1])), BigInt::from(4));
    assert_eq!(discriminant(&poly(&[1, 2, 1])), BigInt::from(0));
}

#[test]
fn reduction_examples() {
    assert_eq!(cycle_type_mod_p(&poly(&[1, 0, 1]), 5), Ok(FrobeniusType::Unramified(vec![1, 1])));
    assert_eq!(cycle_type_mod_p(&poly(&[1, 0, 1]), 2), Ok(FrobeniusType::Ramified));
    let expected = oracle_cycle_type(&QUINTIC, 2).unwrap();
    assert_eq!(cycle_type_mod_p(&poly(&QUINTIC), 2), Ok(FrobeniusType::Unramified(expected)));
    assert!(cycle_type_mod_p(&poly(&[1, 0, 2]), 2).is_err());
}

#[test]
fn certificate_examples() {
    let c = certify_galois(&poly(&QUINTIC), 200).unwrap();
    assert_eq!((c.degree, c.verdict), (5, GaloisVerdict::SymmetricGroup));
    assert!(c.prime_bound_used <= 200);
    let c = certify_galois(&poly(&[-1, -1, 0, 1]), 50).unwrap();
    assert_eq!(c.verdict, GaloisVerdict::SymmetricGroup);
    assert!(!c.disc_square);
    let sextic = poly(&[5, -8, 4, 0, 4, -8, 4]);
    assert!(matches!(certify_galois(&sextic, 200), Err(GaloisError::EvenDegree(_))));
    let square_factor = poly(&[1, 1]).mul(&poly(&[1, 1])).mul(&poly(&[1, 0, 1]));
    assert_eq!(square_factor.degree(), Some(4));
    let inseparable = square_factor.mul(&poly(&[2, 1]));
    assert_eq!(certify_galois(&inseparable, 200), Err(GaloisError::Inseparable));
}

#[test]
fn alternating_and_unsupported_degrees() {
    // x³ − 3x + 1: disc 81
    let c = certify_galois(&poly(&[1, -3, 0, 1]), 100).unwrap();
    assert_eq!(c.verdict, GaloisVerdict::AlternatingGroup);
    assert!(c.disc_square);
    assert!(c.replay(&poly(&[1, -3, 0, 1])));
    let nine = poly(&[1, -1, 0, 0, 0, 0, 0, 0, 0, 1]);
    let c = certify_galois(&nine, 100).unwrap();
    assert_eq!(c.verdict, GaloisVerdict::Unknown);
    assert!(c.diagnostic.is_some());
}

#[test]
fn square_test() {
    assert_eq!(disc_is_square(&BigInt::from(2869)), Ok(false));
    assert_eq!(disc_is_square(&BigInt::from(4)), Ok(true));
    assert_eq!(disc_is_square(&BigInt::from(-23)), Ok(false));
    assert!(disc_is_square(&BigInt::from(0)).is_err());
    let big = BigInt::parse_bytes(b"123456789123456789123456789", 10).unwrap();
    assert_eq!(disc_is_square(&(&big * &big)), Ok(true));
    assert_eq!(disc_is_square(&(&big * &big + 1)), Ok(false));
}

/// Frequencies of each cycle type in `S₅`.
const S5_CLASSES: [(&[usize], f64); 7] = [
    (&[1, 1, 1, 1, 1], 1.0 / 120.0),
    (&[2, 1, 1, 1], 10.0 / 120.0),
    (&[2, 2, 1], 15.0 / 120.0),
    (&[3, 1, 1], 20.0 / 120.0),
    (&[3, 2], 20.0 / 120.0),
    (&[4, 1], 30.0 / 120.0),
    (&[5], 24.0 / 120.0),
];

#[test]
fn chebotarev_smoke() {
    let f = poly(&QUINTIC);
    let mut counts = std::collections::BTreeMap::<Vec<usize>, usize>::new();
    let mut total = 0usize;
    for p in (2u64..10_000).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)) {
        if let Ok(FrobeniusType::Unramified(t)) = cycle_type_mod_p(&f, p) {
            *counts.entry(t).or_default() += 1;
            total += 1;
        }
    }
    for (t, expected) in S5_CLASSES {
        let observed = *counts.get(t).unwrap_or(&0) as f64 / total as f64;
        assert!((observed - expected).abs() < 0.1, "{t:?}: {observed} vs {expected}");
    }
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    (1..=max_deg).prop_flat_map(|d| {
        (prop::collection::vec(-6i64..=6, d), 1i64..=3).prop_map(|(mut c, lead)| {
            c.push(lead);
            c
        })
    })
}

fn odd_monic(deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-9i64..=9, deg).prop_map(|mut c| {
        c.push(1);
        c
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn discriminant_matches_sylvester_oracle(f in small_poly(5)) {
        prop_assume!(f.len() >= 2);
        prop_assert_eq!(discriminant(&poly(&f)), BigInt::from(oracle_discriminant(&f)));
    }

    #[test]
    fn discriminant_of_product(f in small_poly(3), g in small_poly(3)) {
        let (pf, pg) = (poly(&f), poly(&g));
        let r = resultant(&pf, &pg);
        prop_assert_eq!(discriminant(&pf.mul(&pg)), discriminant(&pf) * discriminant(&pg) * &r * &r);
    }

    #[test]
    fn reduction_matches_trial_division(f in odd_monic(5), pi in 0usize..6) {
        let p = [2u64, 3, 5, 7, 11, 13][pi];
        let got = cycle_type_mod_p(&poly(&f), p).unwrap();
        let expected = match oracle_cycle_type(&f, p) {
            Some(t) => FrobeniusType::Unramified(t),
            None => FrobeniusType::Ramified,
        };
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn certificates_replay(deg in prop::sample::select(vec![3usize, 5, 7]), seed in prop::collection::vec(-9i64..=9, 7)) {
        let mut f = seed[..deg].to_vec();
        f.push(1);
        let f = poly(&f);
        prop_assume!(discriminant(&f) != BigInt::from(0));
        let c = certify_galois(&f, 300).unwrap();
        prop_assert!(c.replay(&f));
        if c.verdict != GaloisVerdict::Unknown {
            prop_assert_eq!(c.disc_square, c.verdict == GaloisVerdict::AlternatingGroup);
            let w = &c.witnesses;
            prop_assert!(w.iter().any(|w| w.role == WitnessRole::Irreducible));
            let jordan = w.iter().any(|w| matches!(w.role, WitnessRole::Jordan { .. }));
            prop_assert!(jordan);
        }
    }
}
