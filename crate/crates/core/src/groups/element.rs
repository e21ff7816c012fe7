use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::FpMatrix;

/// Bijection of `{0, …, n−1}` stored as its image array.
///
/// Products compose right to left: `(p·q)(i) = p(q(i))`, so permutations act
/// on the left and a permutation module is a homomorphism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// # Panics
    /// If `images` is not a bijection of `0..len` or has more than 256 points.
    pub fn new(images: Vec<u8>) -> Self {
        assert!(images.len() <= 256, "permutation degree above 256");
        let mut seen = [false; 256];
        for &x in &images {
            assert!((x as usize) < images.len() && !seen[x as usize], "not a permutation");
            seen[x as usize] = true;
        }
        Self(images)
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).map(|i| i as u8).collect())
    }

    /// Permutation of `n` points from disjoint cycles (0-based points).
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Self {
        let mut images: Vec<u8> = (0..n).map(|i| i as u8).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                images[a] = cycle[(k + 1) % cycle.len()] as u8;
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "permutation degree mismatch");
        Self(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn is_even(&self) -> bool {
        (self.degree() - self.cycle_type().len()).is_multiple_of(2)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

/// Element `(v, g)` of `V ⋊ G`; `linear` is the matrix of `g` on `V`.
///
/// Multiplication: `(v₁, g₁)·(v₂, g₂) = (v₁ + g₁·v₂, g₁g₂)`, i.e. the affine
/// map `x ↦ g·x + v` composed right to left.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SemidirectPair {
    pub translation: Vec<u8>,
    pub linear: FpMatrix,
    pub base: GroupElement,
}

/// Element of one of the supported concrete groups.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum GroupElement {
    Perm(Permutation),
    /// Invertible square matrix over F_ℓ acting on column vectors.
    Matrix(FpMatrix),
    Pair(Box<SemidirectPair>),
    Tuple(Vec<GroupElement>),
}

impl GroupElement {
    /// Group product.
    ///
    /// # Panics
    /// If the two elements come from differently shaped groups.
    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Self::Perm(a), Self::Perm(b)) => Self::Perm(a.compose(b)),
            (Self::Matrix(a), Self::Matrix(b)) => Self::Matrix(a.mul(b)),
            (Self::Pair(a), Self::Pair(b)) => {
                let f = a.linear.field();
                let moved = a.linear.mul_vec(&b.translation);
                let translation = a
                    .translation
                    .iter()
                    .zip(&moved)
                    .map(|(&x, &y)| f.add(x, y))
                    .collect();
                Self::Pair(Box::new(SemidirectPair {
                    translation,
                    linear: a.linear.mul(&b.linear),
                    base: a.base.mul(&b.base),
                }))
            }
            (Self::Tuple(a), Self::Tuple(b)) => {
                assert_eq!(a.len(), b.len(), "product arity mismatch");
                Self::Tuple(a.iter().zip(b).map(|(x, y)| x.mul(y)).collect())
            }
            _ => panic!("multiplying elements of different group kinds"),
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            Self::Perm(p) => Self::Perm(p.inverse()),
            Self::Matrix(m) => Self::Matrix(m.inverse().expect("group matrices are invertible")),
            Self::Pair(pair) => {
                let inv = pair.linear.inverse().expect("group matrices are invertible");
                let f = inv.field();
                let translation = inv.mul_vec(&pair.translation).iter().map(|&x| f.neg(x)).collect();
                Self::Pair(Box::new(SemidirectPair {
                    translation,
                    linear: inv,
                    base: pair.base.inverse(),
                }))
            }
            Self::Tuple(xs) => Self::Tuple(xs.iter().map(Self::inverse).collect()),
        }
    }

    /// The identity of the group this element belongs to.
    pub fn identity_like(&self) -> Self {
        match self {
            Self::Perm(p) => Self::Perm(Permutation::identity(p.degree())),
            Self::Matrix(m) => Self::Matrix(FpMatrix::identity(m.field(), m.rows())),
            Self::Pair(pair) => Self::Pair(Box::new(SemidirectPair {
                translation: alloc::vec![0; pair.translation.len()],
                linear: FpMatrix::identity(pair.linear.field(), pair.linear.rows()),
                base: pair.base.identity_like(),
            })),
            Self::Tuple(xs) => Self::Tuple(xs.iter().map(Self::identity_like).collect()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Self::Perm(p) => p.is_identity(),
            Self::Matrix(m) => m.is_identity(),
            Self::Pair(pair) => {
                pair.translation.iter().all(|&x| x == 0)
                    && pair.linear.is_identity()
                    && pair.base.is_identity()
            }
            Self::Tuple(xs) => xs.iter().all(Self::is_identity),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = self.identity_like();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Element order by repeated multiplication, giving up past `bound`.
    pub fn order(&self, bound: u64) -> Option<u64> {
        let mut x = self.clone();
        for k in 1..=bound {
            if x.is_identity() {
                return Some(k);
            }
            x = x.mul(self);
        }
        None
    }

    /// Commutator `a⁻¹b⁻¹ab`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    pub fn conjugate_by(&self, t: &Self) -> Self {
        t.mul(self).mul(&t.inverse())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::PrimeField;
    use alloc::vec;

    #[test]
    fn permutation_composition_is_right_to_left() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]);
        let b = Permutation::from_cycles(3, &[&[1, 2]]);
        // (a·b)(1) = a(b(1)) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(a.compose(&a.inverse()), Permutation::identity(3));
        assert_eq!(Permutation::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).cycle_type(), vec![3, 2]);
        assert!(!Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).is_even());
    }

    #[test]
    fn pair_multiplication_is_affine_composition() {
        let f = PrimeField::new(2);
        let swap = FpMatrix::from_rows(f, &[vec![0, 1], vec![1, 0]]);
        let a = GroupElement::Pair(Box::new(SemidirectPair {
            translation: vec![1, 0],
            linear: swap.clone(),
            base: GroupElement::Matrix(swap.clone()),
        }));
        let b = GroupElement::Pair(Box::new(SemidirectPair {
            translation: vec![1, 1],
            linear: FpMatrix::identity(f, 2),
            base: GroupElement::Matrix(FpMatrix::identity(f, 2)),
        }));
        let GroupElement::Pair(ab) = a.mul(&b) else { unreachable!() };
        // v₁ + g₁·v₂ = (1,0) + (1,1) = (0,1)
        assert_eq!(ab.translation, vec![0, 1]);
        assert!(a.mul(&a.inverse()).is_identity());
        assert_eq!(b.order(10), Some(2));
    }
}
