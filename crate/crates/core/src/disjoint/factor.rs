use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 10_000;
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Pollard-rho iteration budget shared across one factorization.
pub const DEFAULT_FACTOR_BUDGET: u64 = 1 << 22;

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for `u64` (bases up to 37 suffice).
pub fn is_prime_u64_mr(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES[..12] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Miller–Rabin on big integers with the fixed bases 2..41: deterministic
/// below 3.3·10²⁴, a strong probable-prime test above.
fn is_probable_prime_big(n: &BigInt) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64_mr(small);
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'bases: for &a in &MR_BASES {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn rho_u64(n: u64, budget: &mut u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    for c in 1..u64::MAX {
        let f = |x: u64| ((mulmod(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return Some(d);
        }
    }
    None
}

fn rho_big(n: &BigInt, budget: &mut u64) -> Option<BigInt> {
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (BigInt::from(2), BigInt::from(2), BigInt::one());
        while d.is_one() {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).gcd(n);
        }
        if &d != n {
            return Some(d);
        }
        c += 1;
    }
}

/// Prime factorization of `|n|` as ascending `(prime, exponent)` pairs, or
/// `None` when the rho budget runs out.
///
/// # Panics
/// On zero.
pub fn factor(n: &BigInt, budget: u64) -> Option<Vec<(BigInt, u32)>> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut m = BigInt::from(n.magnitude().clone());
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, out: &mut Vec<(BigInt, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some(entry) => entry.1 += 1,
        None => out.push((p, 1)),
    };
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        while (&m % &bp).is_zero() {
            m /= &bp;
            push(bp.clone(), &mut out);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut budget = budget;
    let mut stack: Vec<BigInt> = Vec::new();
    if !m.is_one() {
        stack.push(m);
    }
    while let Some(x) = stack.pop() {
        if is_probable_prime_big(&x) {
            push(x, &mut out);
            continue;
        }
        let d = match x.to_u64() {
            Some(small) => BigInt::from(rho_u64(small, &mut budget)?),
            None => rho_big(&x, &mut budget)?,
        };
        stack.push(&x / &d);
        stack.push(d);
    }
    out.sort();
    Some(out)
}
