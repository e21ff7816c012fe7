//! Test oracles that share no code path with the library algorithms they check.
#![allow(dead_code)]

use std::sync::Arc;

use kummer_core::cohomology::GModule;
use kummer_core::exact::{FpMatrix, Lattice, PrimeField, ZMatrix};
use kummer_core::groups::{FiniteGroup, GroupElement, Permutation};
use kummer_core::BigInt;
use rand::Rng;

/// Row echelon form over F_p with incremental insertion, written out
/// independently of the library's elimination.
pub struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(p: u32) -> Self {
        Self { p: p as u64, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn inv(&self, a: u64) -> u64 {
        (1..self.p).find(|&b| a * b % self.p == 1).unwrap()
    }

    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a = (*a + p - c * b % p) % p;
                }
            }
        }
        let Some(pivot) = v.iter().position(|&a| a != 0) else { return false };
        let inv = self.inv(v[pivot]);
        for a in &mut v {
            *a = *a * inv % p;
        }
        for (_, row) in &mut self.rows {
            let c = row[pivot];
            if c != 0 {
                for (a, b) in row.iter_mut().zip(&v) {
                    *a = (*a + p - c * b % p) % p;
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

/// `dim H¹(G, M)` with one unknown vector per group element and
/// `c(xy) = c(x) + ρ(x)c(y)` imposed for every pair `(x, y)`; for larger
/// groups `y` runs over the generators only, which already forces the
/// identity for all pairs. `B¹` has dimension `dim M − dim M^G`.
pub fn brute_h1_dim(m: &GModule) -> usize {
    let m = m.enumerated().unwrap();
    let g = m.group();
    let n = g.order().unwrap();
    let r = m.dim();
    let p = m.field().p();
    let rho: Vec<FpMatrix> = (0..n).map(|i| m.element_matrix(i)).collect();
    let width = n * r;
    let mut eqs = Echelon::new(p);
    let partners: Vec<usize> = if n * n * r <= 20_000 {
        (0..n).collect()
    } else {
        g.generators().iter().map(|s| g.index_of(s).unwrap()).collect()
    };
    for x in 0..n {
        for &y in &partners {
            let xy = g.mul_index(x, y);
            for i in 0..r {
                let mut row = vec![0u64; width];
                let pp = p as u64;
                row[xy * r + i] = (row[xy * r + i] + 1) % pp;
                row[x * r + i] = (row[x * r + i] + pp - 1) % pp;
                for j in 0..r {
                    let a = rho[x].get(i, j) as u64;
                    row[y * r + j] = (row[y * r + j] + pp - a) % pp;
                }
                eqs.insert(row);
            }
        }
    }
    let z1 = width - eqs.rank();
    let mut fixed = Echelon::new(p);
    for x in 0..n {
        for i in 0..r {
            let row: Vec<u64> = (0..r)
                .map(|j| {
                    let a = rho[x].get(i, j) as u64 + if i == j { p as u64 - 1 } else { 0 };
                    a % p as u64
                })
                .collect();
            fixed.insert(row);
        }
    }
    let b1 = fixed.rank();
    z1 - b1
}

/// Integral `H¹(G, Zʳ)` as `Z¹ / B¹` with one unknown per element and the
/// cocycle identity on every Cayley edge. `actions[s]` is the column-action
/// matrix of generator `s` of the enumerated group `g`.
pub fn brute_integral_h1(g: &FiniteGroup, actions: &[ZMatrix]) -> Vec<BigInt> {
    let n = g.order().unwrap();
    let k = g.num_generators();
    let r = actions[0].rows();
    let mut mats: Vec<Option<ZMatrix>> = vec![None; n];
    mats[0] = Some(ZMatrix::identity(r));
    for y in 1..n {
        let (x, s) = g.tree_parent(y).unwrap();
        let ax = mats[x].clone().expect("BFS order");
        mats[y] = Some(ax.mul(&actions[s]));
    }
    let mats: Vec<ZMatrix> = mats.into_iter().map(Option::unwrap).collect();
    let width = n * r;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for x in 0..n {
        for s in 0..k {
            let xs = g.cayley(x, s);
            let sx = g.index_of(&g.generators()[s]).unwrap();
            for i in 0..r {
                let mut row = vec![BigInt::from(0); width];
                row[xs * r + i] += 1;
                row[x * r + i] -= 1;
                for j in 0..r {
                    row[sx * r + j] -= mats[x].get(i, j);
                }
                rows.push(row);
            }
        }
    }
    // the identity element carries c(e) = 0
    for i in 0..r {
        let mut row = vec![BigInt::from(0); width];
        row[i] = BigInt::from(1);
        rows.push(row);
    }
    let z1 = kummer_core::exact::integer_kernel(&ZMatrix::from_big_rows(&rows, width));
    let z1_lattice = Lattice::from_generators(&z1, 1);
    let b1_rows: Vec<Vec<BigInt>> = (0..r)
        .map(|j| {
            let mut row = vec![BigInt::from(0); width];
            for x in 0..n {
                for i in 0..r {
                    let delta = if i == j { BigInt::from(1) } else { BigInt::from(0) };
                    row[x * r + i] = mats[x].get(i, j) - delta;
                }
            }
            row
        })
        .collect();
    let b1_lattice = Lattice::from_generators(&ZMatrix::from_big_rows(&b1_rows, width), 1);
    b1_lattice
        .quotient_invariants(&z1_lattice)
        .unwrap()
        .into_iter()
        .filter(|d| *d != BigInt::from(1))
        .collect()
}

pub fn perm(images: &[u8]) -> GroupElement {
    GroupElement::Perm(Permutation::new(images.to_vec()))
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut v: Vec<u8> = (0..n as u8).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        v.swap(i, j);
    }
    Permutation::new(v)
}

/// A random permutation group of degree `n` with order at most `max_order`.
pub fn random_small_group<R: Rng>(rng: &mut R, max_order: usize) -> FiniteGroup {
    loop {
        let n = rng.gen_range(3..=5);
        let k = rng.gen_range(1..=2);
        let gens: Vec<GroupElement> = (0..k).map(|_| GroupElement::Perm(random_perm(rng, n))).collect();
        let g = FiniteGroup::generated_by(gens).with_cap(max_order);
        if let Ok(g) = g.enumerate() {
            return g;
        }
    }
}

pub fn random_invertible<R: Rng>(rng: &mut R, field: PrimeField, n: usize) -> FpMatrix {
    loop {
        let data = (0..n * n).map(|_| rng.gen_range(0..field.p()) as u8).collect();
        let m = FpMatrix::from_flat(field, n, n, data);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Module over a permutation group: a permutation block, an optional sign
/// block (odd `p`) and a trivial block, in a random basis.
pub fn random_module<R: Rng>(rng: &mut R, group: Arc<FiniteGroup>, p: u32, max_dim: usize) -> GModule {
    let field = PrimeField::new(p);
    let GroupElement::Perm(id) = group.identity() else { unreachable!() };
    let deg = id.degree();
    let use_perm = deg <= max_dim && rng.gen_bool(0.7);
    let perm_dim = if use_perm { deg } else { 0 };
    let sign = p != 2 && perm_dim < max_dim && rng.gen_bool(0.5);
    let room = max_dim - perm_dim - sign as usize;
    let trivial = if perm_dim + sign as usize == 0 { rng.gen_range(1..=room.max(1)) } else { rng.gen_range(0..=room.min(2)) };
    let dim = perm_dim + sign as usize + trivial;
    let c = random_invertible(rng, field, dim);
    let ci = c.inverse().unwrap();
    let mats = group
        .generators()
        .iter()
        .map(|s| {
            let GroupElement::Perm(q) = s else { unreachable!() };
            let mut m = FpMatrix::identity(field, dim);
            if use_perm {
                for i in 0..deg {
                    for j in 0..deg {
                        m.set(i, j, 0);
                    }
                }
                for i in 0..deg {
                    m.set(q.apply(i), i, 1);
                }
            }
            if sign && !q.is_even() {
                m.set(perm_dim, perm_dim, (p - 1) as u8);
            }
            c.mul(&m).mul(&ci)
        })
        .collect();
    GModule::new(group, field, dim, mats).unwrap()
}
