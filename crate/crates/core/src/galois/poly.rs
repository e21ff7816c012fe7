use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::ZMatrix;

/// Univariate polynomial over Z, coefficients constant-first.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient
/// is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Parses decimal coefficient strings, constant first.
    pub fn from_decimal_strs<S: AsRef<str>>(coeffs: &[S]) -> Result<Self, num_bigint::ParseBigIntError> {
        coeffs
            .iter()
            .map(|s| BigInt::from_str(s.as_ref().trim()))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `f(x + a)`.
    pub fn shift(&self, a: i64) -> Self {
        let a = BigInt::from(a);
        let mut out: Vec<BigInt> = Vec::new();
        // Horner in the ring Z[x] with x ↦ x + a
        for c in self.coeffs.iter().rev() {
            let mut next = alloc::vec![BigInt::zero(); out.len() + 1];
            for (i, o) in out.iter().enumerate() {
                next[i + 1] += o;
                next[i] += o * &a;
            }
            next[0] += c;
            out = next;
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff: String = if mag.is_one() && i > 0 { String::new() } else { alloc::format!("{mag}") };
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Sylvester matrix of `f` (degree m) and `g` (degree n): `n` shifted rows
/// of `f` over `m` shifted rows of `g`, coefficients leading-first.
pub fn sylvester_matrix(f: &IntPolynomial, g: &IntPolynomial) -> ZMatrix {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, count, deg) in [(f, n, m), (g, m, n)] {
        for shift in 0..count {
            let mut row = alloc::vec![BigInt::zero(); size];
            for (k, c) in poly.coeffs().iter().rev().enumerate() {
                row[shift + k] = c.clone();
            }
            debug_assert!(deg + shift < size || size == 0);
            rows.push(row);
        }
    }
    ZMatrix::from_big_rows(&rows, size)
}

/// `Res(f, g)` as the determinant of the Sylvester matrix.
///
/// Zero when either polynomial is zero; `lc(g)^m` when `g` is a nonzero
/// constant and `f` has degree `m`.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    sylvester_matrix(f, g).determinant()
}

/// `disc(f) = (−1)^{n(n−1)/2}·Res(f, f′)/lc(f)` for `deg f = n ≥ 1`.
///
/// # Panics
/// On the zero polynomial or a constant.
pub fn discriminant(f: &IntPolynomial) -> BigInt {
    let n = f.degree().filter(|&n| n >= 1).expect("discriminant needs degree at least 1");
    if n == 1 {
        return BigInt::one();
    }
    let r = resultant(f, &f.derivative());
    let d = r / f.leading().expect("nonzero");
    if (n * (n - 1) / 2) % 2 == 1 {
        -d
    } else {
        d
    }
}
