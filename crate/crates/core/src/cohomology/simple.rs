use alloc::vec;
use alloc::vec::Vec;

use super::module::{CohomologyError, GModule};
use crate::exact::{spin_up, FpMatrix, PrimeField, RowEchelon};

/// Largest module dimension accepted by the spin-up simplicity test.
pub const SIMPLICITY_DIM_LIMIT: usize = 24;

/// Elements inspected when looking for a unipotent element with a small
/// fixed space.
const UNIPOTENT_SEARCH: usize = 4096;

fn fixed_space(m: &FpMatrix) -> Vec<Vec<u8>> {
    m.sub(&FpMatrix::identity(m.field(), m.rows())).nullspace()
}

/// Fixed space of a unipotent element, as small as the search finds.
///
/// A group of ℓ-power order fixes a nonzero vector of every nonzero
/// `F_ℓ`-module, so each nonzero submodule meets this space.
fn smallest_unipotent_fixed_space(m: &GModule) -> Vec<Vec<u8>> {
    let dim = m.dim();
    let mut best: Vec<Vec<u8>> = (0..dim)
        .map(|i| {
            let mut e = vec![0u8; dim];
            e[i] = 1;
            e
        })
        .collect();
    let consider = |x: &FpMatrix, best: &mut Vec<Vec<u8>>| {
        if !x.is_identity() && x.is_unipotent() {
            let fix = fixed_space(x);
            if fix.len() < best.len() {
                *best = fix;
            }
        }
    };
    let gens = m.generator_matrices();
    for g in gens {
        consider(g, &mut best);
    }
    for a in gens {
        for b in gens {
            consider(&a.mul(b), &mut best);
        }
    }
    if m.group().is_enumerated() && best.len() > 1 {
        let n = m.group().order().unwrap_or(0).min(UNIPOTENT_SEARCH);
        let sq = dim * dim;
        let flat = m.element_matrices_flat_prefix(n);
        for i in 1..n {
            let x = FpMatrix::from_flat(m.field(), dim, dim, flat[i * sq..(i + 1) * sq].to_vec());
            consider(&x, &mut best);
            if best.len() == 1 {
                break;
            }
        }
    }
    best
}

/// Calls `f` on every nonzero vector of `span(basis)` whose first nonzero
/// coordinate (in the basis) is 1; stops early when `f` returns false.
fn for_each_projective_point(
    field: PrimeField,
    basis: &[Vec<u8>],
    mut f: impl FnMut(&[u8]) -> bool,
) {
    let k = basis.len();
    let width = basis.first().map_or(0, Vec::len);
    let p = field.p() as u64;
    for lead in 0..k {
        let tail = k - lead - 1;
        for t in 0..p.pow(tail as u32) {
            let mut v = basis[lead].clone();
            let mut rest = t;
            for b in &basis[lead + 1..] {
                let c = (rest % p) as u8;
                rest /= p;
                if c != 0 {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = field.add(*x, field.mul(c, y));
                    }
                }
            }
            debug_assert_eq!(v.len(), width);
            if !f(&v) {
                return;
            }
        }
    }
}

/// True iff the only submodules are 0 and the whole module.
///
/// Every nonzero submodule contains a nonzero fixed vector of a unipotent
/// element `u`, so it suffices to spin up the lines of `Fix(u)`.
pub fn is_simple(m: &GModule) -> Result<bool, CohomologyError> {
    let dim = m.dim();
    if dim > SIMPLICITY_DIM_LIMIT {
        return Err(CohomologyError::DimTooLarge { dim, limit: SIMPLICITY_DIM_LIMIT });
    }
    if dim == 0 {
        return Ok(false);
    }
    let candidates = smallest_unipotent_fixed_space(m);
    let gens = m.generator_matrices();
    let mut simple = true;
    for_each_projective_point(m.field(), &candidates, |v| {
        simple = spin_up(m.field(), dim, gens, &[v.to_vec()]).rank() == dim;
        simple
    });
    Ok(simple)
}

/// Rows of the linear system `E·A_s − B_s·E = 0` in the unknowns `E`
/// (`rows × cols`, row-major).
fn intertwiner_system(field: PrimeField, a: &[FpMatrix], b: &[FpMatrix], rows: usize, cols: usize) -> RowEchelon {
    let mut sys = RowEchelon::new(field, rows * cols);
    for (am, bm) in a.iter().zip(b) {
        for i in 0..rows {
            for j in 0..cols {
                // (E A)_{ij} − (B E)_{ij} = Σ_k E_{ik} A_{kj} − Σ_k B_{ik} E_{kj}
                let mut eq = vec![0u8; rows * cols];
                for k in 0..cols {
                    let idx = i * cols + k;
                    eq[idx] = field.add(eq[idx], am.get(k, j));
                }
                for k in 0..rows {
                    let idx = k * cols + j;
                    eq[idx] = field.sub(eq[idx], bm.get(i, k));
                }
                sys.insert(eq);
                if sys.rank() == rows * cols {
                    return sys;
                }
            }
        }
    }
    sys
}

/// `dim_F End_G(M)`: the commutant of the generator matrices.
pub fn endomorphism_algebra_dim(m: &GModule) -> usize {
    let d = m.dim();
    let g = m.generator_matrices();
    d * d - intertwiner_system(m.field(), g, g, d, d).rank()
}

/// Simple with `End_G(M) = F_ℓ`.
///
/// Over a finite field the endomorphism ring of a simple module is a field
/// (finite division rings are commutative), and the module stays simple over
/// the algebraic closure exactly when that field is `F_ℓ`.
pub fn is_absolutely_simple(m: &GModule) -> Result<bool, CohomologyError> {
    Ok(is_simple(m)? && endomorphism_algebra_dim(m) == 1)
}

/// `dim Hom_G(M, N)`.
pub fn hom_module_dim(m: &GModule, n: &GModule) -> Result<usize, CohomologyError> {
    m.same_group(n)?;
    let sys = intertwiner_system(m.field(), m.generator_matrices(), n.generator_matrices(), n.dim(), m.dim());
    Ok(n.dim() * m.dim() - sys.rank())
}

/// Alternating forms `B` with `ρ(s)ᵀ·B·ρ(s) = χ(s)·B` for every generator,
/// each returned as a full `dim × dim` matrix.
pub fn invariant_alternating_forms(m: &GModule) -> Result<Vec<FpMatrix>, CohomologyError> {
    let chi = m.character().ok_or(CohomologyError::MissingCharacter)?;
    let f = m.field();
    let d = m.dim();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    let mut sys = RowEchelon::new(f, pairs.len());
    for (r, &c) in m.generator_matrices().iter().zip(chi) {
        for &(a, b) in &pairs {
            // (ρᵀBρ)_{ab} = Σ_{i<j} B_{ij}(ρ_{ia}ρ_{jb} − ρ_{ja}ρ_{ib})
            let eq: Vec<u8> = pairs
                .iter()
                .map(|&(i, j)| {
                    let mut v = f.sub(f.mul(r.get(i, a), r.get(j, b)), f.mul(r.get(j, a), r.get(i, b)));
                    if (i, j) == (a, b) {
                        v = f.sub(v, c);
                    }
                    v
                })
                .collect();
            sys.insert(eq);
        }
    }
    Ok(sys
        .nullspace()
        .into_iter()
        .map(|sol| {
            let mut b = FpMatrix::zero(f, d, d);
            for (&(i, j), &x) in pairs.iter().zip(&sol) {
                b.set(i, j, x);
                b.set(j, i, f.neg(x));
            }
            b
        })
        .collect())
}

/// `dim Hom(∧²M, χ)^G`.
pub fn wedge2_dual_invariants_dim(m: &GModule) -> Result<usize, CohomologyError> {
    Ok(invariant_alternating_forms(m)?.len())
}

/// `dim M^G`, the common fixed space of the generators.
pub fn h0(m: &GModule) -> usize {
    let d = m.dim();
    let f = m.field();
    let mut sys = RowEchelon::new(f, d);
    for g in m.generator_matrices() {
        let diff = g.sub(&FpMatrix::identity(f, d));
        for i in 0..d {
            sys.insert(diff.row(i).to_vec());
        }
    }
    d - sys.rank()
}
