use alloc::vec;
use alloc::vec::Vec;

use super::module::{CohomologyError, GModule};
use crate::exact::{PrimeField, RowEchelon};

/// `Z¹`, `B¹` and `H¹ = Z¹/B¹` of a module, with cocycles recorded by their
/// values on the group generators (concatenated, generator-major).
#[derive(Clone, Debug)]
pub struct CocycleSpace {
    field: PrimeField,
    dim: usize,
    num_generators: usize,
    z1: RowEchelon,
    b1: RowEchelon,
}

impl CocycleSpace {
    pub fn z1_dim(&self) -> usize {
        self.z1.rank()
    }

    pub fn b1_dim(&self) -> usize {
        self.b1.rank()
    }

    pub fn h1_dim(&self) -> usize {
        self.z1.rank() - self.b1.rank()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Basis of `Z¹`, each cocycle as one vector per generator.
    pub fn cocycle_basis(&self) -> Vec<Vec<Vec<u8>>> {
        self.z1.basis().iter().map(|c| self.split(c)).collect()
    }

    /// Basis of `B¹`, each coboundary as one vector per generator.
    pub fn coboundary_basis(&self) -> Vec<Vec<Vec<u8>>> {
        self.b1.basis().iter().map(|c| self.split(c)).collect()
    }

    /// Cocycles whose classes form a basis of `H¹`.
    pub fn h1_representatives(&self) -> Vec<Vec<Vec<u8>>> {
        let mut span = self.b1.clone();
        self.z1
            .basis()
            .iter()
            .filter(|c| span.insert((*c).clone()))
            .map(|c| self.split(c))
            .collect()
    }

    fn split(&self, flat: &[u8]) -> Vec<Vec<u8>> {
        flat.chunks(self.dim.max(1)).take(self.num_generators).map(<[u8]>::to_vec).collect()
    }

    fn flatten(&self, values: &[Vec<u8>]) -> Result<Vec<u8>, CohomologyError> {
        if values.len() != self.num_generators {
            return Err(CohomologyError::GeneratorCount {
                expected: self.num_generators,
                found: values.len(),
            });
        }
        let mut flat = Vec::with_capacity(self.dim * self.num_generators);
        for v in values {
            if v.len() != self.dim {
                return Err(CohomologyError::VectorLength { expected: self.dim, found: v.len() });
            }
            flat.extend(v.iter().map(|&x| (x as u32 % self.field.p()) as u8));
        }
        Ok(flat)
    }

    /// True iff the generator values extend to a 1-cocycle.
    pub fn is_cocycle(&self, values: &[Vec<u8>]) -> Result<bool, CohomologyError> {
        Ok(self.z1.contains(&self.flatten(values)?))
    }

    pub fn is_coboundary(&self, values: &[Vec<u8>]) -> Result<bool, CohomologyError> {
        Ok(self.b1.contains(&self.flatten(values)?))
    }

    /// Dimension of the span of the classes of `cocycles` in `H¹`.
    pub fn class_span_dim(&self, cocycles: &[Vec<Vec<u8>>]) -> Result<usize, CohomologyError> {
        let mut span = self.b1.clone();
        let mut added = 0;
        for c in cocycles {
            let flat = self.flatten(c)?;
            if !self.z1.contains(&flat) {
                return Err(CohomologyError::NotACocycle);
            }
            if span.insert(flat) {
                added += 1;
            }
        }
        Ok(added)
    }

    /// `dim H¹ / ⟨classes of cocycles⟩`.
    pub fn quotient_dim(&self, cocycles: &[Vec<Vec<u8>>]) -> Result<usize, CohomologyError> {
        Ok(self.h1_dim() - self.class_span_dim(cocycles)?)
    }
}

/// `H¹(G, M)` from unknowns on the generators only.
///
/// Writes `c(x) = L_x·u` where `u` stacks the unknown values `c(s)`.
/// Propagating `c(x·s) = c(x) + ρ(x)·c(s)` along the BFS tree defines every
/// `L_x`; each Cayley edge off the tree contributes the linear constraint
/// `L_x·u + ρ(x)·u_s − L_{x·s}·u = 0`. Enumerates the group if needed.
pub fn h1(m: &GModule) -> Result<CocycleSpace, CohomologyError> {
    let m = m.enumerated()?;
    let group = m.group();
    let field = m.field();
    let p = field.p();
    let r = m.dim();
    let k = group.num_generators();
    let width = r * k;
    let n = group.order().expect("enumerated");
    let rs = r * r;
    let lw = r * width;
    let reps = m.element_matrices_flat();

    let mut lin = vec![0u8; n * lw];
    for y in 1..n {
        let (x, s) = group.tree_parent(y).expect("non-identity has a parent");
        let (head, tail) = lin.split_at_mut(y * lw);
        let ly = &mut tail[..lw];
        ly.copy_from_slice(&head[x * lw..(x + 1) * lw]);
        let rho = &reps[x * rs..(x + 1) * rs];
        for i in 0..r {
            for j in 0..r {
                let idx = i * width + s * r + j;
                ly[idx] = ((ly[idx] as u32 + rho[i * r + j] as u32) % p) as u8;
            }
        }
    }

    let mut constraints = RowEchelon::new(field, width);
    'edges: for x in 0..n {
        for s in 0..k {
            let y = group.cayley(x, s);
            if group.tree_parent(y) == Some((x, s)) {
                continue;
            }
            let lx = &lin[x * lw..(x + 1) * lw];
            let ly = &lin[y * lw..(y + 1) * lw];
            let rho = &reps[x * rs..(x + 1) * rs];
            for i in 0..r {
                let mut row: Vec<u8> = (0..width)
                    .map(|c| ((lx[i * width + c] as u32 + p - ly[i * width + c] as u32) % p) as u8)
                    .collect();
                for j in 0..r {
                    let idx = s * r + j;
                    row[idx] = ((row[idx] as u32 + rho[i * r + j] as u32) % p) as u8;
                }
                if row.iter().any(|&a| a != 0) {
                    constraints.insert(row);
                    if constraints.rank() == width {
                        break 'edges;
                    }
                }
            }
        }
    }

    let mut z1 = RowEchelon::new(field, width);
    for c in constraints.nullspace() {
        z1.insert(c);
    }
    let mut b1 = RowEchelon::new(field, width);
    for j in 0..r {
        // coboundary of e_j: s ↦ ρ(s)e_j − e_j
        let mut row = vec![0u8; width];
        for (s, g) in m.generator_matrices().iter().enumerate() {
            for i in 0..r {
                let v = if i == j { field.sub(g.get(i, j), 1) } else { g.get(i, j) };
                row[s * r + i] = v;
            }
        }
        b1.insert(row);
    }
    Ok(CocycleSpace { field, dim: r, num_generators: k, z1, b1 })
}

/// Values of the cocycle with the given generator values on every element
/// (BFS order), or `None` when the values violate the cocycle identity on
/// some Cayley edge. The module's group must be enumerated.
pub fn cocycle_on_elements(m: &GModule, values: &[Vec<u8>]) -> Option<Vec<Vec<u8>>> {
    let group = m.group();
    let n = group.order()?;
    let f = m.field();
    let r = m.dim();
    let mut c = vec![vec![0u8; r]; n];
    let reps = m.element_matrices_flat();
    let apply = |x: usize, v: &[u8]| -> Vec<u8> {
        let rho = &reps[x * r * r..(x + 1) * r * r];
        (0..r)
            .map(|i| (0..r).fold(0u8, |acc, j| f.add(acc, f.mul(rho[i * r + j], v[j]))))
            .collect()
    };
    for y in 1..n {
        let (x, s) = group.tree_parent(y)?;
        let moved = apply(x, &values[s]);
        c[y] = c[x].iter().zip(&moved).map(|(&a, &b)| f.add(a, b)).collect();
    }
    for x in 0..n {
        for (s, v) in values.iter().enumerate() {
            let moved = apply(x, v);
            let expect: Vec<u8> = c[x].iter().zip(&moved).map(|(&a, &b)| f.add(a, b)).collect();
            if expect != c[group.cayley(x, s)] {
                return None;
            }
        }
    }
    Some(c)
}
