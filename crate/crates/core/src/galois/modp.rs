use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::poly::IntPolynomial;
use super::GaloisError;
use crate::exact::is_prime_u64;

/// Largest prime accepted for reduction; keeps products inside `u64`.
pub const MAX_REDUCTION_PRIME: u64 = 1 << 31;

/// Factorization pattern of `f mod p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FrobeniusType {
    /// Degrees of the irreducible factors, decreasing.
    Unramified(Vec<usize>),
    /// `f mod p` has a repeated factor.
    Ramified,
}

/// Polynomial over F_p, constant-first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Fp {
    p: u64,
}

impl Fp {
    fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        r
    }

    fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + self.p - y) % self.p;
        }
        Self::trim(&mut out);
        out
    }

    fn rem(&self, a: &[u64], m: &[u64]) -> Vec<u64> {
        let mut r = a.to_vec();
        Self::trim(&mut r);
        let dm = m.len() - 1;
        let inv = self.inv(m[dm]);
        while r.len() > dm {
            let q = r[r.len() - 1] * inv % self.p;
            let shift = r.len() - 1 - dm;
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + self.p - q * c % self.p) % self.p;
            }
            Self::trim(&mut r);
        }
        r
    }

    fn div_exact(&self, a: &[u64], m: &[u64]) -> Vec<u64> {
        let mut r = a.to_vec();
        let dm = m.len() - 1;
        let inv = self.inv(m[dm]);
        let mut q = vec![0; r.len() - dm];
        while r.len() > dm {
            let c = r[r.len() - 1] * inv % self.p;
            let shift = r.len() - 1 - dm;
            q[shift] = c;
            for (i, &mc) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + self.p - c * mc % self.p) % self.p;
            }
            Self::trim(&mut r);
        }
        debug_assert!(r.is_empty());
        q
    }

    fn mulmod(&self, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        self.rem(&prod, m)
    }

    fn powmod(&self, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut result = self.rem(&[1], m);
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                result = self.mulmod(&result, &b, m);
            }
            b = self.mulmod(&b, &b, m);
            e >>= 1;
        }
        result
    }

    fn gcd(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        Self::trim(&mut a);
        Self::trim(&mut b);
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        a
    }

    fn derivative(&self, a: &[u64]) -> Vec<u64> {
        let mut d: Vec<u64> = a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % self.p) * c % self.p).collect();
        Self::trim(&mut d);
        d
    }
}

fn reduce(f: &IntPolynomial, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits in u64"))
        .collect();
    Fp::trim(&mut out);
    out
}

/// Factor degrees of `f mod p` by distinct-degree factorization, or
/// `Ramified` when `f mod p` is not squarefree.
pub fn cycle_type_mod_p(f: &IntPolynomial, p: u64) -> Result<FrobeniusType, GaloisError> {
    if !is_prime_u64(p) || p >= MAX_REDUCTION_PRIME {
        return Err(GaloisError::BadPrime(p));
    }
    let d = f.degree().ok_or(GaloisError::ZeroPolynomial)?;
    let a = reduce(f, p);
    if a.len() != d + 1 {
        return Err(GaloisError::BadPrime(p));
    }
    let fp = Fp { p };
    if d == 0 {
        return Ok(FrobeniusType::Unramified(Vec::new()));
    }
    if fp.gcd(&a, &fp.derivative(&a)).len() > 1 {
        return Ok(FrobeniusType::Ramified);
    }
    let mut rest = a;
    let mut degrees = Vec::new();
    let x = [0u64, 1];
    let mut h = fp.rem(&x, &rest);
    let mut k = 1;
    while rest.len() > 2 * k {
        h = fp.powmod(&h, p, &rest);
        let g = fp.gcd(&rest, &fp.sub(&h, &x));
        let gd = g.len() - 1;
        if gd > 0 {
            degrees.extend(core::iter::repeat_n(k, gd / k));
            rest = fp.div_exact(&rest, &g);
            h = fp.rem(&h, &rest);
        }
        k += 1;
    }
    if rest.len() > 1 {
        degrees.push(rest.len() - 1);
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Ok(FrobeniusType::Unramified(degrees))
}
