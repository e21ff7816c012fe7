use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::KummerError;
use crate::exact::{lattice_index, saturate_within, Index, Lattice, ZMatrix};

/// Largest `g` for which the lattices are built explicitly (ambient `2^{2g}`).
pub const MAX_LATTICE_G: usize = 3;
/// Largest `g` for numerology and the canonical class.
pub const MAX_NUMEROLOGY_G: usize = 6;

/// Number of 2-torsion points, `2^{2g}`.
pub fn num_points(g: usize) -> usize {
    1 << (2 * g)
}

/// Value of the affine function `x ↦ L·x + c` over F₂, points and linear
/// forms encoded as bit masks.
#[inline]
pub fn affine_value(l: usize, c: u8, x: usize) -> u8 {
    ((l & x).count_ones() as u8 + c) & 1
}

/// Half-sum generator `½·Σ_{L(x)=c} e_x` as numerators over denominator 2.
pub fn nikulin_generator(g: usize, l: usize, c: u8) -> Vec<i64> {
    (0..num_points(g)).map(|x| (affine_value(l, c, x) == 0) as i64).collect()
}

/// `Z[T] ⊂ Π₁ ⊂ Π` inside `½·Z^{2^{2g}}`, coordinates indexed by the points
/// of `F₂^{2g}`.
///
/// `Π₁ = Z[T] + Z·½Σ e_x` and `Π = Z[T] + Σ_{(L, c)} Z·½Σ_{L(x)=c} e_x` over
/// all linear forms `L` (zero included) and constants `c`.
#[derive(Clone, Debug)]
pub struct KummerLatticeModel {
    pub g: usize,
    pub zt: Lattice,
    pub pi1: Lattice,
    pub pi: Lattice,
    pub ns_rank: usize,
}

impl KummerLatticeModel {
    pub fn num_points(&self) -> usize {
        num_points(self.g)
    }

    /// Elementary divisors of `Π / Z[T]`.
    pub fn quotient_invariants(&self) -> Vec<BigInt> {
        self.zt.quotient_invariants(&self.pi).expect("Z[T] ⊆ Π by construction")
    }

    /// Number of invariants equal to 2 in `Π / Z[T]`.
    pub fn quotient_twos(&self) -> usize {
        let two = BigInt::from(2);
        self.quotient_invariants().iter().filter(|d| **d == two).count()
    }
}

fn index_of(sub: &Lattice, sup: &Lattice) -> Result<BigInt, KummerError> {
    match lattice_index(sub, sup)? {
        Index::Finite(n) => Ok(n),
        Index::Infinite => Err(KummerError::Invariant("infinite index in the Kummer filtration")),
    }
}

/// Builds the model and verifies `[Π₁ : Z[T]] = 2`, `[Π : Z[T]] = 2^{2g+1}`,
/// `Π / Z[T] ≅ (Z/2)^{2g+1}` and `rank Π = 2^{2g}`.
pub fn build_nikulin_lattice(g: usize) -> Result<KummerLatticeModel, KummerError> {
    build_nikulin_lattice_with_ns(g, 1)
}

pub fn build_nikulin_lattice_with_ns(g: usize, ns_rank: usize) -> Result<KummerLatticeModel, KummerError> {
    if g < 2 {
        return Err(KummerError::GTooSmall(g));
    }
    if g > MAX_LATTICE_G {
        return Err(KummerError::GTooLarge { g, limit: MAX_LATTICE_G });
    }
    if ns_rank == 0 {
        return Err(KummerError::NsRankZero);
    }
    let n = num_points(g);
    let doubled: Vec<Vec<i64>> = (0..n)
        .map(|x| {
            let mut r = vec![0i64; n];
            r[x] = 2;
            r
        })
        .collect();
    let zt = Lattice::from_generators(&ZMatrix::from_rows(&doubled), 2);
    let mut rows1 = doubled.clone();
    rows1.push(nikulin_generator(g, 0, 0));
    let pi1 = Lattice::from_generators(&ZMatrix::from_rows(&rows1), 2);
    let mut rows = doubled;
    for l in 0..n {
        for c in 0..2 {
            rows.push(nikulin_generator(g, l, c));
        }
    }
    let pi = Lattice::from_generators(&ZMatrix::from_rows(&rows), 2);
    let model = KummerLatticeModel { g, zt, pi1, pi, ns_rank };

    if !(model.pi1.contains_lattice(&model.zt) && model.pi.contains_lattice(&model.pi1)) {
        return Err(KummerError::Invariant("Z[T] ⊆ Π₁ ⊆ Π fails"));
    }
    if index_of(&model.zt, &model.pi1)? != BigInt::from(2) {
        return Err(KummerError::Invariant("[Π₁ : Z[T]] ≠ 2"));
    }
    if index_of(&model.zt, &model.pi)? != BigInt::one() << (2 * g + 1) {
        return Err(KummerError::Invariant("[Π : Z[T]] ≠ 2^{2g+1}"));
    }
    let inv = model.quotient_invariants();
    let ones = inv.iter().filter(|d| d.is_one()).count();
    if model.quotient_twos() != 2 * g + 1 || ones + 2 * g + 1 != inv.len() {
        return Err(KummerError::Invariant("Π / Z[T] is not (Z/2)^{2g+1}"));
    }
    if model.pi.rank() != n {
        return Err(KummerError::Invariant("rank Π ≠ 2^{2g}"));
    }
    if saturate_within(&model.zt, &model.pi)? != model.pi {
        return Err(KummerError::Invariant("Z[T] is not of finite index in Π"));
    }
    Ok(model)
}

/// Vector of `½·Z^N` stored as numerators over denominator 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfVector {
    pub numerators: Vec<BigInt>,
}

impl HalfVector {
    pub fn denominator() -> BigInt {
        BigInt::from(2)
    }

    pub fn is_zero(&self) -> bool {
        self.numerators.iter().all(Zero::is_zero)
    }

    /// Membership in `Π₁ = Z[T] + Z·½Σ e_x`: all coordinates are integers,
    /// or all are strictly half-integers.
    pub fn in_pi1(&self) -> bool {
        let two = BigInt::from(2);
        let mut parities = self.numerators.iter().map(|x| (x % &two).is_zero());
        match parities.next() {
            None => true,
            Some(first) => parities.all(|p| p == first),
        }
    }
}

/// `K = (g − 2)·½Σ e_x`, the canonical class in the exceptional-divisor model.
pub fn canonical_class(g: usize) -> Result<HalfVector, KummerError> {
    if g < 2 {
        return Err(KummerError::GTooSmall(g));
    }
    if g > MAX_NUMEROLOGY_G {
        return Err(KummerError::GTooLarge { g, limit: MAX_NUMEROLOGY_G });
    }
    let k = BigInt::from(g - 2);
    Ok(HalfVector { numerators: vec![k; num_points(g)] })
}

/// Pairing of `[D_x]` with `[π(L_y)]`: `−2` on the diagonal, 0 elsewhere
/// (distinct exceptional divisors are disjoint).
pub fn exceptional_intersections(g: usize) -> Result<ZMatrix, KummerError> {
    if g < 2 {
        return Err(KummerError::GTooSmall(g));
    }
    if g > MAX_LATTICE_G {
        return Err(KummerError::GTooLarge { g, limit: MAX_LATTICE_G });
    }
    Ok(ZMatrix::diagonal(&vec![-2; num_points(g)]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Numerology {
    pub picard_rank: u64,
    /// `b_0, …, b_{2g}`.
    pub betti: Vec<u64>,
    pub h2_dim: u64,
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Picard rank `2^{2g} + n`, Betti numbers `b_{2i} = C(2g, 2i) + 2^{2g}` for
/// `0 < i < g` (odd ones vanish, `b_0 = b_{2g} = 1`), and
/// `h² = g(2g − 1) + 2^{2g}`, checked against `b_2`.
pub fn numerology(g: usize, ns_rank: usize) -> Result<Numerology, KummerError> {
    if g < 2 {
        return Err(KummerError::GTooSmall(g));
    }
    if g > MAX_NUMEROLOGY_G {
        return Err(KummerError::GTooLarge { g, limit: MAX_NUMEROLOGY_G });
    }
    if ns_rank == 0 {
        return Err(KummerError::NsRankZero);
    }
    let gg = g as u64;
    let points = 1u64 << (2 * gg);
    let betti: Vec<u64> = (0..=2 * gg)
        .map(|k| match k {
            0 => 1,
            k if k == 2 * gg => 1,
            k if k % 2 == 1 => 0,
            k => binomial(2 * gg, k) + points,
        })
        .collect();
    let h2_dim = gg * (2 * gg - 1) + points;
    if betti[2] != h2_dim {
        return Err(KummerError::Invariant("b₂ ≠ h² dimension"));
    }
    Ok(Numerology { picard_rank: points + ns_rank as u64, betti, h2_dim })
}
