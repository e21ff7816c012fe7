use std::collections::HashSet;

use kummer_core::disjoint::*;
use kummer_core::galois::{certify_galois, GaloisCertificate, GaloisVerdict, IntPolynomial};
use kummer_core::groups::{alternating_group, symmetric_group, FiniteGroup, GroupElement};
use kummer_core::BigInt;
use proptest::prelude::*;

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn certified(c: &[i64]) -> (GaloisCertificate, DiscClass) {
    let f = poly(c);
    (certify_galois(&f, 1000).unwrap(), disc_class(&f, DEFAULT_FACTOR_BUDGET).unwrap())
}

fn verdict(family: &[&[i64]]) -> DisjointnessVerdict {
    let (certs, classes): (Vec<_>, Vec<_>) = family.iter().map(|c| certified(c)).unzip();
    certify_family_disjoint(&certs, &classes).unwrap().verdict
}

const QUINTIC: &[i64] = &[1, -1, 0, 0, 0, 1];
const CUBIC: &[i64] = &[-1, -1, 0, 1];
const A5: &[i64] = &[16, 20, 0, 0, 0, 1];
const A7: &[i64] = &[48, -56, 0, 0, 0, 0, 0, 1];
/// Classes `+{3, 31}`, `−{3}`, `−{31}`: pairwise independent, product trivial.
const DEPENDENT_TRIPLE: [&[i64]; 3] = [&[1, -6, 0, 1], &[6, -6, 0, 1], &[1, 1, 0, 1]];

fn class(sign: Sign, primes: &[i64]) -> DiscClass {
    DiscClass { sign, support: primes.iter().map(|&p| BigInt::from(p)).collect() }
}

#[test]
fn class_examples() {
    assert_eq!(certified(QUINTIC).1, class(Sign::Plus, &[19, 151]));
    assert_eq!(certified(CUBIC).1, class(Sign::Minus, &[23]));
    assert_eq!(disc_class(&poly(&[-2, 0, 1]), DEFAULT_FACTOR_BUDGET).unwrap(), class(Sign::Plus, &[2]));
    assert_eq!(certified(A5).1, class(Sign::Plus, &[]));
}

#[test]
fn family_examples() {
    assert_eq!(verdict(&[QUINTIC, CUBIC]), DisjointnessVerdict::Certified);
    // the oracle: each discriminant and their product are non-squares
    for n in [2869i64, -23, 2869 * -23] {
        assert!(!kummer_core::galois::disc_is_square(&BigInt::from(n)).unwrap());
    }
    assert_eq!(verdict(&[QUINTIC, QUINTIC]), DisjointnessVerdict::Failed);
    assert_eq!(verdict(&[A5, A7]), DisjointnessVerdict::Certified);
    assert_eq!(verdict(&[A5, QUINTIC, CUBIC]), DisjointnessVerdict::Certified);
    assert_eq!(verdict(&[A5, A5]), DisjointnessVerdict::HeuristicOnly);
}

#[test]
fn pairwise_independence_is_not_enough() {
    let [a, b, c] = DEPENDENT_TRIPLE;
    let classes: Vec<DiscClass> = DEPENDENT_TRIPLE.iter().map(|f| certified(f).1).collect();
    assert!(classes[0].mul(&classes[1]).mul(&classes[2]).is_trivial());
    for pair in [[a, b], [a, c], [b, c]] {
        assert_eq!(verdict(&pair), DisjointnessVerdict::Certified);
    }
    assert_eq!(verdict(&[a, b, c]), DisjointnessVerdict::Failed);
}

#[test]
fn input_mismatch() {
    let (c, k) = certified(QUINTIC);
    assert!(matches!(certify_family_disjoint(std::slice::from_ref(&c), &[]), Err(DisjointError::InputMismatch(_))));
    assert!(matches!(certify_family_disjoint(&[c], &[class(Sign::Plus, &[])]), Err(DisjointError::InputMismatch(_))));
    let mut unknown = certified(QUINTIC).0;
    unknown.verdict = GaloisVerdict::Unknown;
    assert!(certify_family_disjoint(&[unknown], &[k]).is_err());
}

/// Normal closure of `x` by conjugating with the generators and then
/// multiplying out, sharing nothing with the library's closure.
fn normal_closure_order(g: &FiniteGroup, x: &GroupElement) -> usize {
    let mut class: HashSet<GroupElement> = HashSet::from([x.clone()]);
    let mut frontier = vec![x.clone()];
    while let Some(y) = frontier.pop() {
        for t in g.generators() {
            let c = t.inverse().mul(&y).mul(t);
            if class.insert(c.clone()) {
                frontier.push(c);
            }
        }
    }
    let mut sub: HashSet<GroupElement> = HashSet::from([x.identity_like()]);
    let mut frontier = vec![x.identity_like()];
    while let Some(y) = frontier.pop() {
        for c in &class {
            let z = y.mul(c);
            if sub.insert(z.clone()) {
                frontier.push(z);
            }
        }
    }
    sub.len()
}

/// Orders of the normal subgroups generated by one element of every
/// nonidentity cycle type.
fn normal_subgroup_orders(g: FiniteGroup) -> Vec<usize> {
    let g = g.enumerate().unwrap();
    let mut seen = HashSet::new();
    let mut orders = Vec::new();
    for x in g.elements().unwrap() {
        let GroupElement::Perm(p) = x else { unreachable!() };
        if !p.is_identity() && seen.insert(p.cycle_type()) {
            orders.push(normal_closure_order(&g, x));
        }
    }
    orders.sort_unstable();
    orders.dedup();
    orders
}

#[test]
fn goursat_quotients_at_desk_scale() {
    // A₅ and A₇ are simple of different orders: no common nontrivial quotient
    assert_eq!(normal_subgroup_orders(alternating_group(5)), vec![60]);
    assert_eq!(normal_subgroup_orders(alternating_group(7)), vec![2520]);
    // the only proper nontrivial normal subgroup of S₅ is A₅
    assert_eq!(normal_subgroup_orders(symmetric_group(5)), vec![60, 120]);
}

#[test]
fn frobenius_statistics() {
    let q = poly(QUINTIC);
    assert!(frobenius_joint_statistics(&q, &q, 3000).score > 0.9);
    assert!(frobenius_joint_statistics(&q, &q.shift(1), 3000).score > 0.9);
    let s = frobenius_joint_statistics(&q, &poly(CUBIC), 10_000);
    assert!(s.score < 0.05, "{s:?}");
    assert!(s.primes_used > 1000);
}

/// Odd monic cubics with distinct squarefree discriminant classes.
fn symmetric_pool() -> Vec<Vec<i64>> {
    let mut pool: Vec<Vec<i64>> = Vec::new();
    let mut classes: Vec<DiscClass> = Vec::new();
    for a in -6i64..=6 {
        for b in 1i64..=6 {
            let f = vec![b, a, 0, 1];
            let Ok(c) = certify_galois(&poly(&f), 500) else { continue };
            if c.verdict != GaloisVerdict::SymmetricGroup {
                continue;
            }
            let k = disc_class(&poly(&f), DEFAULT_FACTOR_BUDGET).unwrap();
            if !classes.contains(&k) {
                classes.push(k);
                pool.push(f);
            }
        }
    }
    pool
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verdict_is_order_invariant(idx in prop::collection::vec(0usize..20, 2..5), rot in 0usize..5) {
        let pool = symmetric_pool();
        let family: Vec<&[i64]> = idx.iter().map(|&i| pool[i % pool.len()].as_slice()).collect();
        let mut rotated = family.clone();
        rotated.rotate_left(rot % family.len());
        rotated.reverse();
        prop_assert_eq!(verdict(&family), verdict(&rotated));
    }

    #[test]
    fn product_class_breaks_certification(
        primes in prop::collection::btree_set(prop::sample::select(vec![2i64, 3, 5, 7, 11, 13, 17, 19, 23, 29]), 1..6),
        mask in 1u32..32,
    ) {
        let (cert, _) = certified(CUBIC);
        let classes: Vec<DiscClass> = primes.iter().map(|&p| class(Sign::Minus, &[p])).collect();
        let base = certify_family_disjoint(&vec![cert.clone(); classes.len()], &classes).unwrap();
        prop_assert_eq!(base.verdict, DisjointnessVerdict::Certified);
        let picked: Vec<&DiscClass> = classes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| c).collect();
        prop_assume!(!picked.is_empty());
        let product = picked.iter().skip(1).fold(picked[0].clone(), |acc, c| acc.mul(c));
        prop_assume!(!product.is_trivial());
        let mut extended = classes.clone();
        extended.push(product);
        let flipped = certify_family_disjoint(&vec![cert; extended.len()], &extended).unwrap();
        prop_assert_ne!(flipped.verdict, DisjointnessVerdict::Certified);
    }
}
