use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::factor::factor;
use super::DisjointError;
use crate::galois::{discriminant, IntPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

/// Class of a nonzero rational in `Q*/Q*²`: a sign and the primes dividing
/// the squarefree part, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiscClass {
    pub sign: Sign,
    pub support: Vec<BigInt>,
}

impl DiscClass {
    /// Square class of a nonzero integer, or `None` if factoring exceeds the budget.
    pub fn of_integer(n: &BigInt, budget: u64) -> Option<Self> {
        let sign = if n.is_negative() { Sign::Minus } else { Sign::Plus };
        let support = factor(n, budget)?
            .into_iter()
            .filter(|(_, e)| e % 2 == 1)
            .map(|(p, _)| p)
            .collect();
        Some(Self { sign, support })
    }

    pub fn is_trivial(&self) -> bool {
        self.sign == Sign::Plus && self.support.is_empty()
    }

    /// Product in `Q*/Q*²`: signs multiply, supports take the symmetric difference.
    pub fn mul(&self, other: &Self) -> Self {
        let sign = if self.sign == other.sign { Sign::Plus } else { Sign::Minus };
        let mut support: Vec<BigInt> = self
            .support
            .iter()
            .filter(|p| !other.support.contains(p))
            .chain(other.support.iter().filter(|p| !self.support.contains(p)))
            .cloned()
            .collect();
        support.sort();
        Self { sign, support }
    }

    /// The squarefree representative `±∏ p`.
    pub fn squarefree_part(&self) -> BigInt {
        let prod: BigInt = self.support.iter().product();
        match self.sign {
            Sign::Plus => prod,
            Sign::Minus => -prod,
        }
    }
}

impl fmt::Display for DiscClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "{s}{{")?;
        for (i, p) in self.support.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Square class of `disc(f)`.
pub fn disc_class(f: &IntPolynomial, budget: u64) -> Result<DiscClass, DisjointError> {
    if f.degree().unwrap_or(0) < 1 {
        return Err(DisjointError::Inseparable);
    }
    let d = discriminant(f);
    if d.sign() == num_bigint::Sign::NoSign {
        return Err(DisjointError::Inseparable);
    }
    DiscClass::of_integer(&d, budget).ok_or(DisjointError::FactorBudgetExceeded)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disjoint::DEFAULT_FACTOR_BUDGET;
    use alloc::vec;

    #[test]
    fn classes() {
        let c = disc_class(&IntPolynomial::from_i64(&[1, -1, 0, 0, 0, 1]), DEFAULT_FACTOR_BUDGET).unwrap();
        assert_eq!(c, DiscClass { sign: Sign::Plus, support: vec![BigInt::from(19), BigInt::from(151)] });
        let c = disc_class(&IntPolynomial::from_i64(&[-1, -1, 0, 1]), DEFAULT_FACTOR_BUDGET).unwrap();
        assert_eq!(alloc::format!("{c}"), "-{23}");
        let c = disc_class(&IntPolynomial::from_i64(&[-2, 0, 1]), DEFAULT_FACTOR_BUDGET).unwrap();
        assert_eq!(c.squarefree_part(), BigInt::from(2));
        assert!(c.mul(&c).is_trivial());
    }
}
