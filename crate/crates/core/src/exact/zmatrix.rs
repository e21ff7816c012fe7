use alloc::vec;
use alloc::vec::Vec;
use alloc::string::ToString;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct ZMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ZMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let big: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&a| BigInt::from(a)).collect())
            .collect();
        Self::from_big_rows(&big, rows.first().map_or(0, Vec::len))
    }

    /// `cols` is only consulted when `rows` is empty.
    pub fn from_big_rows(rows: &[Vec<BigInt>], cols: usize) -> Self {
        let cols = rows.first().map_or(cols, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged integer matrix");
            data.extend(r.iter().cloned());
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m.data[i * n + i] = BigInt::from(e);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in integer product");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// True iff every off-diagonal entry is zero.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// # Panics
    /// If the matrix is not square.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// Canonical row Hermite normal form of the row lattice, zero rows dropped.
    ///
    /// Pivots are positive and entries above a pivot lie in `[0, pivot)`.
    pub fn row_hnf(&self) -> Self {
        let mut a = self.to_rows();
        let r = echelonize(&mut a, self.cols, true);
        a.truncate(r);
        Self::from_big_rows(&a, self.cols)
    }
}

impl fmt::Debug for ZMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ZMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i).iter().map(ToString::to_string).collect::<Vec<_>>())?;
        }
        Ok(())
    }
}


fn sub_multiple(dst: &mut [BigInt], src: &[BigInt], q: &BigInt) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

/// Row-echelonizes `a` on its first `width` columns with unimodular row
/// operations (the full rows are transformed). Returns the rank.
fn echelonize(a: &mut [Vec<BigInt>], width: usize, reduce_above: bool) -> usize {
    let n = a.len();
    let mut r = 0;
    for c in 0..width {
        if r == n {
            break;
        }
        loop {
            let pick = (r..n)
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(p) = pick else { break };
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..n {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                let (top, rest) = a.split_at_mut(i);
                sub_multiple(&mut rest[0], &top[r], &q);
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a.get(r).is_none_or(|row| row[c].is_zero()) {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -core::mem::take(x);
            }
        }
        if reduce_above {
            for i in 0..r {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                let (top, rest) = a.split_at_mut(r);
                sub_multiple(&mut top[i], &rest[0], &q);
            }
        }
        r += 1;
    }
    r
}

/// Basis (as rows) of the integer right kernel `{x ∈ Zⁿ : A·x = 0}`.
pub fn integer_kernel(a: &ZMatrix) -> ZMatrix {
    let n = a.cols();
    let m = a.rows();
    let mut aug: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut row: Vec<BigInt> = (0..m).map(|i| a.get(i, j).clone()).collect();
            row.extend((0..n).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let rank = echelonize(&mut aug, m, false);
    let kernel: Vec<Vec<BigInt>> = aug[rank..].iter().map(|row| row[m..].to_vec()).collect();
    ZMatrix::from_big_rows(&kernel, n).row_hnf()
}

/// Smith decomposition `U·M·V = D` with `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: ZMatrix,
    pub d: ZMatrix,
    pub v: ZMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries `d₁ | d₂ | …`.
    pub fn invariants(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }
}

struct SmithWork {
    d: Vec<Vec<BigInt>>,
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
}

impl SmithWork {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap(a, b);
        if let Some(u) = &mut self.u {
            u.swap(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for row in self.d.iter_mut() {
            row.swap(a, b);
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                row.swap(a, b);
            }
        }
    }

    /// row_i -= q·row_t
    fn row_op(&mut self, i: usize, t: usize, q: &BigInt) {
        let (lo, hi) = (i.min(t), i.max(t));
        let (top, rest) = self.d.split_at_mut(hi);
        let (dst, src) = if i < t { (&mut top[lo], &rest[0]) } else { (&mut rest[0], &top[lo]) };
        sub_multiple(dst, src, q);
        if let Some(u) = &mut self.u {
            let (top, rest) = u.split_at_mut(hi);
            let (dst, src) = if i < t { (&mut top[lo], &rest[0]) } else { (&mut rest[0], &top[lo]) };
            sub_multiple(dst, src, q);
        }
    }

    /// col_j -= q·col_t
    fn col_op(&mut self, j: usize, t: usize, q: &BigInt) {
        for row in self.d.iter_mut() {
            if !row[t].is_zero() {
                let delta = q * &row[t];
                row[j] -= delta;
            }
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                if !row[t].is_zero() {
                    let delta = q * &row[t];
                    row[j] -= delta;
                }
            }
        }
    }

    fn negate_row(&mut self, t: usize) {
        for x in self.d[t].iter_mut() {
            *x = -core::mem::take(x);
        }
        if let Some(u) = &mut self.u {
            for x in u[t].iter_mut() {
                *x = -core::mem::take(x);
            }
        }
    }

    fn run(&mut self) {
        let rows = self.d.len();
        let cols = self.d.first().map_or(0, Vec::len);
        for t in 0..rows.min(cols) {
            loop {
                // smallest |entry| in the trailing block becomes the pivot
                let mut best: Option<(usize, usize)> = None;
                for i in t..rows {
                    for j in t..cols {
                        let x = &self.d[i][j];
                        if x.is_zero() {
                            continue;
                        }
                        if best.is_none_or(|(bi, bj)| x.abs() < self.d[bi][bj].abs()) {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = best else { return };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                let mut clean = true;
                for i in t + 1..rows {
                    if self.d[i][t].is_zero() {
                        continue;
                    }
                    let q = self.d[i][t].div_floor(&self.d[t][t]);
                    self.row_op(i, t, &q);
                    clean &= self.d[i][t].is_zero();
                }
                for j in t + 1..cols {
                    if self.d[t][j].is_zero() {
                        continue;
                    }
                    let q = self.d[t][j].div_floor(&self.d[t][t]);
                    self.col_op(j, t, &q);
                    clean &= self.d[t][j].is_zero();
                }
                if !clean {
                    continue;
                }
                let pivot = self.d[t][t].clone();
                let offender = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !self.d[i][j].is_multiple_of(&pivot)));
                match offender {
                    Some(i) => self.row_op(t, i, &BigInt::from(-1)),
                    None => break,
                }
            }
            if self.d[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Smith normal form with transforms: `U·m·V = D`, `D = diag(d₁, …, d_r, 0, …)`
/// with `d₁ | d₂ | … | d_r`, all `d_i ≥ 1`.
pub fn smith_normal_form(m: &ZMatrix) -> SmithForm {
    let mut w = SmithWork {
        d: m.to_rows(),
        u: Some(identity_rows(m.rows())),
        v: Some(identity_rows(m.cols())),
    };
    w.run();
    SmithForm {
        u: ZMatrix::from_big_rows(&w.u.unwrap_or_default(), m.rows()),
        d: ZMatrix::from_big_rows(&w.d, m.cols()),
        v: ZMatrix::from_big_rows(&w.v.unwrap_or_default(), m.cols()),
    }
}

/// Nonzero Smith invariants `d₁ | … | d_r` without tracking transforms.
pub fn smith_invariants(m: &ZMatrix) -> Vec<BigInt> {
    // Pre-reducing to Hermite form keeps the Smith loop on an r×n block.
    let h = m.row_hnf();
    let mut w = SmithWork {
        d: h.to_rows(),
        u: None,
        v: None,
    };
    w.run();
    (0..h.rows())
        .map(|i| w.d[i][i].clone())
        .take_while(|x| !x.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &ZMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.d.is_diagonal());
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        let inv = s.invariants();
        for w in inv.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn diag_2_3() {
        let s = check(&ZMatrix::diagonal(&[2, 3]));
        assert_eq!(s.invariants(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&ZMatrix::identity(4));
        assert_eq!(s.d, ZMatrix::identity(4));
    }

    #[test]
    fn already_smith() {
        let s = check(&ZMatrix::diagonal(&[2, 2]));
        assert_eq!(s.d, ZMatrix::diagonal(&[2, 2]));
    }

    #[test]
    fn rectangular_and_singular() {
        let m = ZMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = check(&m);
        assert_eq!(
            s.invariants(),
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        let m = ZMatrix::from_rows(&[vec![1, 2], vec![2, 4], vec![3, 6]]);
        assert_eq!(check(&m).invariants(), vec![BigInt::from(1)]);
        assert_eq!(smith_invariants(&m), vec![BigInt::from(1)]);
    }

    #[test]
    fn determinant_bareiss() {
        let m = ZMatrix::from_rows(&[vec![0, 2, 1], vec![3, 1, 4], vec![1, 5, 9]]);
        assert_eq!(m.determinant(), BigInt::from(-32));
    }

    #[test]
    fn kernel_of_row_vector() {
        let a = ZMatrix::from_rows(&[vec![2, 3, 0]]);
        let k = integer_kernel(&a);
        assert_eq!(k.rows(), 2);
        for i in 0..k.rows() {
            let dot: BigInt = (0..3).map(|j| a.get(0, j) * k.get(i, j)).sum();
            assert!(dot.is_zero());
        }
        // the kernel lattice is saturated: index of its span in Q-span ∩ Z³ is 1
        let inv = smith_invariants(&k);
        assert!(inv.iter().all(|d| d.is_one()));
    }

    #[test]
    fn hnf_is_canonical() {
        let a = ZMatrix::from_rows(&[vec![2, 0], vec![0, 2], vec![1, 1]]);
        let b = ZMatrix::from_rows(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(a.row_hnf(), b.row_hnf());
        assert_eq!(a.row_hnf(), ZMatrix::from_rows(&[vec![1, 1], vec![0, 2]]));
    }
}
