use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::element::{GroupElement, Permutation};
use super::group::{FiniteGroup, GroupError};
use crate::exact::{is_prime_u64, FpMatrix, PrimeField};

/// `S_d` generated by `(0 1)` and `(0 1 … d−1)`.
pub fn symmetric_group(d: usize) -> FiniteGroup {
    assert!(d >= 1, "symmetric group needs at least one point");
    let identity = GroupElement::Perm(Permutation::identity(d));
    if d == 1 {
        return FiniteGroup::new(identity, Vec::new());
    }
    let cycle: Vec<usize> = (0..d).collect();
    let gens = alloc::vec![
        GroupElement::Perm(Permutation::from_cycles(d, &[&[0, 1]])),
        GroupElement::Perm(Permutation::from_cycles(d, &[&cycle])),
    ];
    FiniteGroup::new(identity, gens)
}

/// `A_d` generated by `(0 1 2)` and an even long cycle: `(0 … d−1)` for odd
/// `d`, `(1 … d−1)` for even `d`.
pub fn alternating_group(d: usize) -> FiniteGroup {
    assert!(d >= 1, "alternating group needs at least one point");
    let identity = GroupElement::Perm(Permutation::identity(d));
    if d < 3 {
        return FiniteGroup::new(identity, Vec::new());
    }
    let cycle: Vec<usize> = if d % 2 == 1 { (0..d).collect() } else { (1..d).collect() };
    let mut gens = alloc::vec![GroupElement::Perm(Permutation::from_cycles(d, &[&[0, 1, 2]]))];
    if d > 3 {
        gens.push(GroupElement::Perm(Permutation::from_cycles(d, &[&cycle])));
    }
    FiniteGroup::new(identity, gens)
}

/// Gram matrix of `ω(x, y) = Σ_{i<m} (x_i y_{n−1−i} − x_{n−1−i} y_i)`, `m = n/2`:
/// the anti-diagonal with `m` ones followed by `m` minus ones.
pub fn symplectic_form(field: PrimeField, n: usize) -> FpMatrix {
    let mut j = FpMatrix::zero(field, n, n);
    for i in 0..n / 2 {
        j.set(i, n - 1 - i, 1);
        j.set(n - 1 - i, i, field.neg(1));
    }
    j
}

/// `λ` with `Mᵀ J M = λ J`, or `None` when `m` is not a symplectic similitude.
pub fn symplectic_multiplier(m: &FpMatrix) -> Option<u8> {
    let n = m.rows();
    if n == 0 || n % 2 == 1 || m.cols() != n {
        return None;
    }
    let j = symplectic_form(m.field(), n);
    let g = m.transpose().mul(&j).mul(m);
    let lambda = g.get(0, n - 1);
    (lambda != 0 && g == j.scale(lambda)).then_some(lambda)
}

fn check_symplectic_args(n: usize, l: u32) -> Result<PrimeField, GroupError> {
    if n == 0 || n % 2 == 1 {
        return Err(GroupError::OddSymplecticDimension(n));
    }
    if !(2..256).contains(&l) || !is_prime_u64(l as u64) {
        return Err(GroupError::BadPrime(l));
    }
    Ok(PrimeField::new(l))
}

/// Transvection `x ↦ x + ω(v, x)·v`, i.e. `I + v·(vᵀJ)`.
fn transvection(field: PrimeField, j: &FpMatrix, v: &[u8]) -> FpMatrix {
    let n = v.len();
    let w = j.transpose().mul_vec(v);
    let mut t = FpMatrix::identity(field, n);
    for r in 0..n {
        for c in 0..n {
            let add = field.mul(v[r], w[c]);
            t.set(r, c, field.add(t.get(r, c), add));
        }
    }
    t
}

/// `Sp(n, F_ℓ)` generated by the transvections along `e_i` and `e_i + e_j`.
pub fn symplectic_group(n: usize, l: u32) -> Result<FiniteGroup, GroupError> {
    let field = check_symplectic_args(n, l)?;
    let j = symplectic_form(field, n);
    let mut gens = Vec::new();
    for a in 0..n {
        let mut v = alloc::vec![0u8; n];
        v[a] = 1;
        gens.push(GroupElement::Matrix(transvection(field, &j, &v)));
        for b in a + 1..n {
            let mut w = v.clone();
            w[b] = 1;
            gens.push(GroupElement::Matrix(transvection(field, &j, &w)));
        }
    }
    Ok(FiniteGroup::new(GroupElement::Matrix(FpMatrix::identity(field, n)), gens))
}

/// `GSp(n, F_ℓ)`: the `Sp` generators plus `diag(1, …, 1, c, …, c)` with `c`
/// the least primitive root, whose multiplier is `c`.
pub fn general_symplectic_group(n: usize, l: u32) -> Result<FiniteGroup, GroupError> {
    let field = check_symplectic_args(n, l)?;
    let sp = symplectic_group(n, l)?;
    let mut gens = sp.generators().to_vec();
    if l > 2 {
        let c = field.primitive_root();
        let mut d = FpMatrix::identity(field, n);
        for i in n / 2..n {
            d.set(i, i, c);
        }
        gens.push(GroupElement::Matrix(d));
    }
    Ok(FiniteGroup::new(sp.identity().clone(), gens))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymplecticFamily {
    Sp,
    GSp,
    PSp,
}

/// Closed-form order with `m = n/2`:
/// `|Sp| = ℓ^{m²}·∏_{i=1}^{m}(ℓ^{2i} − 1)`, `|GSp| = (ℓ − 1)·|Sp|`,
/// `|PSp| = |Sp| / gcd(2, ℓ − 1)`.
///
/// # Panics
/// If `n` is odd.
pub fn group_order_formula(family: SymplecticFamily, n: usize, l: u32) -> BigInt {
    assert!(n.is_multiple_of(2), "symplectic dimension must be even");
    let m = (n / 2) as u32;
    let lb = BigInt::from(l);
    let mut order = lb.pow(m * m);
    for i in 1..=m {
        order *= lb.pow(2 * i) - BigInt::one();
    }
    match family {
        SymplecticFamily::Sp => order,
        SymplecticFamily::GSp => order * (l - 1),
        SymplecticFamily::PSp if l == 2 => order,
        SymplecticFamily::PSp => order / 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_symmetric_and_alternating_orders() {
        let fact = [1usize, 1, 2, 6, 24, 120, 720];
        for d in 1..=6 {
            assert_eq!(symmetric_group(d).enumerate().unwrap().order(), Some(fact[d]));
            let half = if d < 2 { 1 } else { fact[d] / 2 };
            assert_eq!(alternating_group(d).enumerate().unwrap().order(), Some(half));
        }
    }

    #[test]
    fn alternating_generators_are_even() {
        for d in 3..=8 {
            for g in alternating_group(d).generators() {
                let GroupElement::Perm(p) = g else { unreachable!() };
                assert!(p.is_even());
            }
        }
    }

    #[test]
    fn generators_are_similitudes() {
        let gsp = general_symplectic_group(4, 3).unwrap();
        let mults: Vec<u8> = gsp
            .generators()
            .iter()
            .map(|g| {
                let GroupElement::Matrix(m) = g else { unreachable!() };
                symplectic_multiplier(m).unwrap()
            })
            .collect();
        assert!(mults[..mults.len() - 1].iter().all(|&x| x == 1));
        assert_eq!(*mults.last().unwrap(), 2);
    }

    #[test]
    fn sp4_f2_matches_formula() {
        let g = symplectic_group(4, 2).unwrap().enumerate().unwrap();
        assert_eq!(BigInt::from(g.order().unwrap()), group_order_formula(SymplecticFamily::Sp, 4, 2));
        assert_eq!(g.order(), Some(720));
    }

    #[test]
    fn sp2_is_sl2() {
        for l in [2u32, 3, 5, 7] {
            let g = symplectic_group(2, l).unwrap().enumerate().unwrap();
            let expect = group_order_formula(SymplecticFamily::Sp, 2, l);
            assert_eq!(BigInt::from(g.order().unwrap()), expect);
        }
    }

    #[test]
    fn formula_values() {
        assert_eq!(group_order_formula(SymplecticFamily::PSp, 4, 3), BigInt::from(25920));
        assert_eq!(group_order_formula(SymplecticFamily::Sp, 4, 3), BigInt::from(51840));
        assert_eq!(group_order_formula(SymplecticFamily::GSp, 4, 3), BigInt::from(103680));
    }

    #[test]
    fn bad_arguments() {
        assert_eq!(symplectic_group(3, 3).unwrap_err(), GroupError::OddSymplecticDimension(3));
        assert_eq!(symplectic_group(4, 4).unwrap_err(), GroupError::BadPrime(4));
    }
}
