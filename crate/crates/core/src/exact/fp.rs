use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Arithmetic in F_p for a small prime `p < 256`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// # Panics
    /// If `p` is not a prime below 256.
    pub fn new(p: u32) -> Self {
        assert!(p < 256 && is_prime_u64(p as u64), "F_p needs a prime p < 256, got {p}");
        Self { p }
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u32 + b as u32) % self.p) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u32 + self.p - b as u32) % self.p) as u8
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.p) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        ((self.p - a as u32) % self.p) as u8
    }

    pub fn pow(self, mut a: u8, mut e: u64) -> u8 {
        let mut r = 1u8 % self.p as u8;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// # Panics
    /// On zero.
    pub fn inv(self, a: u8) -> u8 {
        assert!(!(a as u32).is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, (self.p - 2) as u64)
    }

    /// Reduces an arbitrary integer into `0..p`.
    pub fn reduce(self, a: i64) -> u8 {
        a.rem_euclid(self.p as i64) as u8
    }

    /// A generator of the multiplicative group.
    pub fn primitive_root(self) -> u8 {
        let order = self.p - 1;
        let mut factors = Vec::new();
        let mut n = order;
        let mut q = 2;
        while q * q <= n {
            if n.is_multiple_of(q) {
                factors.push(q);
                while n.is_multiple_of(q) {
                    n /= q;
                }
            }
            q += 1;
        }
        if n > 1 {
            factors.push(n);
        }
        (1..self.p)
            .map(|g| g as u8)
            .find(|&g| factors.iter().all(|&f| self.pow(g, (order / f) as u64) != 1))
            .unwrap_or(1)
    }
}

/// Deterministic trial-division primality for small inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense matrix over a small prime field, entries stored as bytes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl FpMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing entries mod p.
    ///
    /// # Panics
    /// If the rows have different lengths.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged F_p matrix");
            data.extend(row.iter().map(|&a| field.reduce(a)));
        }
        Self {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_flat(field: PrimeField, rows: usize, cols: usize, data: Vec<u8>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_flat(&self) -> &[u8] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u8::from(i == j)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in F_p product");
        let f = self.field;
        let p = f.p();
        let mut out = vec![0u8; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u32;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d = ((*d as u32 + a * b as u32) % p) as u8;
                }
            }
        }
        Self::from_flat(f, self.rows, other.cols, out)
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.p();
        (0..self.rows)
            .map(|i| {
                let s: u32 = self.row(i).iter().zip(v).map(|(&a, &b)| a as u32 * b as u32).sum();
                (s % p) as u8
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Self::from_flat(f, self.rows, self.cols, data)
    }

    pub fn scale(&self, c: u8) -> Self {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Self::from_flat(f, self.rows, self.cols, data)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.rows + other.rows;
        let m = self.cols + other.cols;
        let mut out = Self::zero(self.field, n, m);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    /// Row-reduces in place to reduced echelon form, returning pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            for j in 0..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                let a = self.get(i, c);
                if i != r && a != 0 {
                    for j in 0..self.cols {
                        let v = f.sub(self.get(i, j), f.mul(a, self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right null space `{x : self·x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u8>> {
        let f = self.field;
        let mut r = self.clone();
        let pivots = r.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u8; self.cols];
                v[free] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(row, free));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zero(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// True iff `self − I` is nilpotent, i.e. the matrix has p-power order.
    pub fn is_unipotent(&self) -> bool {
        let n = self.rows;
        let d = self.sub(&Self::identity(self.field, n));
        let mut acc = d.clone();
        for _ in 1..n {
            acc = acc.mul(&d);
        }
        n == 0 || acc.is_zero()
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix over F_{} {}x{}", self.field.p(), self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Incrementally maintained semi-echelon basis of a row space over F_p.
///
/// Every stored row has a leading 1 at its pivot column, and each row is
/// reduced against all rows inserted before it.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    field: PrimeField,
    width: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(field: PrimeField, width: usize) -> Self {
        Self {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    fn reduce(&self, row: &mut [u8]) {
        let f = self.field;
        for (stored, &pc) in self.rows.iter().zip(&self.pivots) {
            let a = row[pc];
            if a != 0 {
                for (x, &s) in row.iter_mut().zip(stored) {
                    if s != 0 {
                        *x = f.sub(*x, f.mul(a, s));
                    }
                }
            }
        }
    }

    /// Inserts a row; returns true when it enlarged the span.
    pub fn insert(&mut self, mut row: Vec<u8>) -> bool {
        debug_assert_eq!(row.len(), self.width);
        if self.rows.len() == self.width {
            return false;
        }
        self.reduce(&mut row);
        let Some(pc) = row.iter().position(|&a| a != 0) else {
            return false;
        };
        let inv = self.field.inv(row[pc]);
        for x in row.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(row);
        self.pivots.push(pc);
        true
    }

    pub fn contains(&self, row: &[u8]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(|&a| a == 0)
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Basis of `{x : r·x = 0 for every stored row r}`.
    pub fn nullspace(&self) -> Vec<Vec<u8>> {
        let flat: Vec<u8> = self.rows.iter().flatten().copied().collect();
        FpMatrix::from_flat(self.field, self.rows.len(), self.width, flat).nullspace()
    }
}

/// Smallest subspace containing `seeds` and stable under every matrix in `mats`.
pub fn spin_up(field: PrimeField, width: usize, mats: &[FpMatrix], seeds: &[Vec<u8>]) -> RowEchelon {
    let mut span = RowEchelon::new(field, width);
    for s in seeds {
        span.insert(s.clone());
    }
    let mut next = 0;
    while next < span.rank() && span.rank() < width {
        let v = span.basis()[next].clone();
        for m in mats {
            span.insert(m.mul_vec(&v));
        }
        next += 1;
    }
    span
}
