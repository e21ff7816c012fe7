use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::zmatrix::{integer_kernel, smith_invariants, ZMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattices live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("basis vector {0} of the candidate sublattice is not in the superlattice")]
    NotASublattice(usize),
}

/// Subgroup of `(1/D)·Z^n` stored as integer numerators over a common
/// denominator `D`.
///
/// The basis is kept in row Hermite normal form and `D` is minimal, so two
/// lattices are equal exactly when their representations are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    ambient_dim: usize,
    denominator: BigInt,
    basis: ZMatrix,
}

/// Index of one lattice in another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Index {
    Finite(BigInt),
    Infinite,
}

impl Lattice {
    /// Lattice spanned by the rows of `numerators`, each divided by `denominator`.
    pub fn from_generators(numerators: &ZMatrix, denominator: impl Into<BigInt>) -> Self {
        let mut denominator = denominator.into();
        assert!(denominator.is_positive(), "lattice denominator must be positive");
        let mut basis = numerators.row_hnf();
        let mut g = denominator.clone();
        for i in 0..basis.rows() {
            for x in basis.row(i) {
                g = g.gcd(x);
            }
        }
        if basis.rows() == 0 {
            g = denominator.clone();
        }
        if !g.is_one() {
            let rows: Vec<Vec<BigInt>> = basis
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(|x| x / &g).collect())
                .collect();
            basis = ZMatrix::from_big_rows(&rows, numerators.cols());
            denominator /= &g;
        }
        Self {
            ambient_dim: numerators.cols(),
            denominator,
            basis,
        }
    }

    /// `Z^n` with its standard basis.
    pub fn standard(n: usize) -> Self {
        Self::from_generators(&ZMatrix::identity(n), 1)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// Basis numerators (rows), in Hermite normal form.
    pub fn basis(&self) -> &ZMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Integer coordinates of `numerators / denominator` in this lattice's basis,
    /// or `None` when the vector is not in the lattice.
    pub fn coordinates(&self, numerators: &[BigInt], denominator: &BigInt) -> Option<Vec<BigInt>> {
        assert_eq!(numerators.len(), self.ambient_dim);
        // x·B/D = v/d  ⇔  x·B = v·D/d
        let mut w = Vec::with_capacity(numerators.len());
        for v in numerators {
            let (q, r) = (v * &self.denominator).div_rem(denominator);
            if !r.is_zero() {
                return None;
            }
            w.push(q);
        }
        let mut coords = Vec::with_capacity(self.rank());
        let mut col = 0;
        for i in 0..self.rank() {
            let row = self.basis.row(i);
            while row[col].is_zero() {
                if !w[col].is_zero() {
                    return None;
                }
                col += 1;
            }
            let (q, r) = w[col].div_rem(&row[col]);
            if !r.is_zero() {
                return None;
            }
            for (x, b) in w.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &q * b;
                }
            }
            coords.push(q);
            col += 1;
        }
        w.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, numerators: &[BigInt], denominator: &BigInt) -> bool {
        self.coordinates(numerators, denominator).is_some()
    }

    /// True iff every basis vector of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.ambient_dim == self.ambient_dim
            && (0..other.rank()).all(|i| self.contains(other.basis.row(i), &other.denominator))
    }

    /// Coordinates of every basis vector of `sub` in this lattice's basis,
    /// one row per basis vector of `sub`.
    pub fn coordinate_matrix(&self, sub: &Lattice) -> Result<ZMatrix, LatticeError> {
        if sub.ambient_dim != self.ambient_dim {
            return Err(LatticeError::AmbientMismatch(sub.ambient_dim, self.ambient_dim));
        }
        let rows = (0..sub.rank())
            .map(|i| {
                self.coordinates(sub.basis.row(i), &sub.denominator)
                    .ok_or(LatticeError::NotASublattice(i))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ZMatrix::from_big_rows(&rows, self.rank()))
    }

    /// Smith invariants of `self` inside `sup` (the elementary divisors of the
    /// quotient, including 1s); only meaningful for equal ranks.
    pub fn quotient_invariants(&self, sup: &Lattice) -> Result<Vec<BigInt>, LatticeError> {
        Ok(smith_invariants(&sup.coordinate_matrix(self)?))
    }
}

/// `[sup : sub]`: the product of the Smith invariants of `sub`'s basis
/// expressed in `sup`'s basis; infinite when the ranks differ.
pub fn lattice_index(sub: &Lattice, sup: &Lattice) -> Result<Index, LatticeError> {
    let c = sup.coordinate_matrix(sub)?;
    if sub.rank() != sup.rank() {
        return Ok(Index::Infinite);
    }
    let inv = smith_invariants(&c);
    if inv.len() < sub.rank() {
        return Ok(Index::Infinite);
    }
    Ok(Index::Finite(inv.iter().product()))
}

/// `{v ∈ sup : n·v ∈ l for some n ≠ 0}`.
pub fn saturate_within(l: &Lattice, sup: &Lattice) -> Result<Lattice, LatticeError> {
    let c = sup.coordinate_matrix(l)?;
    // rows orthogonal to the kernel of C are exactly Q·rowspace(C) ∩ Z^r
    let k = integer_kernel(&c);
    let s = integer_kernel(&k);
    let gens = s.mul(sup.basis());
    Ok(Lattice::from_generators(&gens, sup.denominator().clone()))
}

/// Saturation of `l` inside `(1/D)·Z^n`, where `D` is `l`'s denominator.
pub fn saturate(l: &Lattice) -> Lattice {
    let ambient = Lattice {
        ambient_dim: l.ambient_dim,
        denominator: l.denominator.clone(),
        basis: ZMatrix::identity(l.ambient_dim),
    };
    saturate_within(l, &ambient).expect("every lattice lies in its own ambient")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn index_of_2z2() {
        let sub = Lattice::from_generators(&ZMatrix::diagonal(&[2, 2]), 1);
        let sup = Lattice::standard(2);
        assert_eq!(lattice_index(&sub, &sup), Ok(Index::Finite(BigInt::from(4))));
        assert_eq!(
            lattice_index(&sup, &sub),
            Err(LatticeError::NotASublattice(0))
        );
    }

    #[test]
    fn index_infinite_for_rank_drop() {
        let sub = Lattice::from_generators(&ZMatrix::from_rows(&[vec![1, 0]]), 1);
        assert_eq!(lattice_index(&sub, &Lattice::standard(2)), Ok(Index::Infinite));
    }

    #[test]
    fn saturation_examples() {
        let two = Lattice::from_generators(&ZMatrix::diagonal(&[2, 2]), 1);
        assert_eq!(saturate(&two), Lattice::standard(2));
        let line = Lattice::from_generators(&ZMatrix::from_rows(&[vec![2, 2]]), 1);
        let sat = saturate(&line);
        assert_eq!(sat, Lattice::from_generators(&ZMatrix::from_rows(&[vec![1, 1]]), 1));
        assert_eq!(saturate(&sat), sat);
    }

    #[test]
    fn denominator_is_minimal() {
        let l = Lattice::from_generators(&ZMatrix::from_rows(&[vec![2, 4], vec![0, 6]]), 2);
        assert!(l.denominator().is_one());
        let half = Lattice::from_generators(&ZMatrix::from_rows(&[vec![1, 1], vec![0, 2]]), 2);
        assert_eq!(half.denominator(), &BigInt::from(2));
        assert!(half.contains(&big(&[1, 1]), &BigInt::from(2)));
        assert!(!half.contains(&big(&[1, 0]), &BigInt::from(2)));
        assert!(half.contains(&big(&[1, 0]), &BigInt::one()));
    }
}
