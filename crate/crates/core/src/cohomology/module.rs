use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::exact::{FpMatrix, PrimeField};
use crate::groups::{
    alternating_group, direct_product, symmetric_group, FiniteGroup, GroupElement, GroupError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("expected {expected} generator matrices, found {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("generator matrix {index} is not an invertible {dim}x{dim} matrix over F_{p}")]
    BadGeneratorMatrix { index: usize, dim: usize, p: u32 },
    #[error("generator images do not respect the relation closing Cayley edge ({element}, {generator})")]
    Inconsistent { element: usize, generator: usize },
    #[error("character value for generator {0} is not a unit")]
    BadCharacter(usize),
    #[error("module dimension {dim} exceeds the limit {limit}")]
    DimTooLarge { dim: usize, limit: usize },
    #[error("modules are defined over different groups or fields")]
    GroupMismatch,
    #[error("module carries no character")]
    MissingCharacter,
    #[error("the zero-sum model needs an odd degree at least 3, got {0}")]
    EvenDegree(usize),
    #[error("group elements have no linear part")]
    NotLinear,
    #[error("vector has length {found}, module dimension is {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("generator values do not define a 1-cocycle")]
    NotACocycle,
}

/// Which group the zero-sum module is built over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PermutationFamily {
    Symmetric,
    Alternating,
}

/// Linear action of a finitely generated group on `F_ℓ^dim`.
///
/// Stored as one matrix per group generator (acting on column vectors) and
/// an optional scalar character given by its value on each generator.
/// When the group is enumerated, construction verifies that the assignment
/// extends to a homomorphism.
#[derive(Clone, Debug)]
pub struct GModule {
    group: Arc<FiniteGroup>,
    field: PrimeField,
    dim: usize,
    matrices: Vec<FpMatrix>,
    character: Option<Vec<u8>>,
}

impl GModule {
    pub fn new(
        group: Arc<FiniteGroup>,
        field: PrimeField,
        dim: usize,
        matrices: Vec<FpMatrix>,
    ) -> Result<Self, CohomologyError> {
        if matrices.len() != group.num_generators() {
            return Err(CohomologyError::GeneratorCount {
                expected: group.num_generators(),
                found: matrices.len(),
            });
        }
        for (index, m) in matrices.iter().enumerate() {
            if m.field() != field || m.rows() != dim || m.cols() != dim || !m.is_invertible() {
                return Err(CohomologyError::BadGeneratorMatrix { index, dim, p: field.p() });
            }
        }
        let module = Self { group, field, dim, matrices, character: None };
        if module.group.is_enumerated() {
            check_relations(&module.group, field, dim, &module.matrices)?;
        }
        Ok(module)
    }

    /// Attaches a scalar character `χ`, given by its value on each generator.
    pub fn with_character(mut self, values: Vec<u8>) -> Result<Self, CohomologyError> {
        if values.len() != self.matrices.len() {
            return Err(CohomologyError::GeneratorCount {
                expected: self.matrices.len(),
                found: values.len(),
            });
        }
        if let Some(i) = values.iter().position(|&c| (c as u32).is_multiple_of(self.field.p())) {
            return Err(CohomologyError::BadCharacter(i));
        }
        if self.group.is_enumerated() {
            let scalars: Vec<FpMatrix> = values
                .iter()
                .map(|&c| FpMatrix::from_flat(self.field, 1, 1, vec![c]))
                .collect();
            check_relations(&self.group, self.field, 1, &scalars)?;
        }
        self.character = Some(values);
        Ok(self)
    }

    /// Trivial action on `F_ℓ^dim`.
    pub fn trivial(group: Arc<FiniteGroup>, field: PrimeField, dim: usize) -> Self {
        let matrices = vec![FpMatrix::identity(field, dim); group.num_generators()];
        Self { group, field, dim, matrices, character: None }
    }

    /// Permutation module `F_ℓ^d` of a permutation group: `σ·e_i = e_{σ(i)}`.
    ///
    /// # Panics
    /// If the group generators are not permutations of a common degree.
    pub fn permutation(group: Arc<FiniteGroup>, field: PrimeField) -> Self {
        let GroupElement::Perm(id) = group.identity() else {
            panic!("permutation module needs a permutation group");
        };
        let d = id.degree();
        let matrices = group
            .generators()
            .iter()
            .map(|g| {
                let GroupElement::Perm(p) = g else { panic!("generator is not a permutation") };
                let mut m = FpMatrix::zero(field, d, d);
                for i in 0..d {
                    m.set(p.apply(i), i, 1);
                }
                m
            })
            .collect();
        Self { group, field, dim: d, matrices, character: None }
    }

    /// Natural module of a matrix group, or the linear part of an affine group.
    pub fn natural(group: Arc<FiniteGroup>) -> Result<Self, CohomologyError> {
        let linear = |g: &GroupElement| match g {
            GroupElement::Matrix(m) => Some(m.clone()),
            GroupElement::Pair(p) => Some(p.linear.clone()),
            _ => None,
        };
        let id = linear(group.identity()).ok_or(CohomologyError::NotLinear)?;
        let matrices = group
            .generators()
            .iter()
            .map(linear)
            .collect::<Option<Vec<_>>>()
            .ok_or(CohomologyError::NotLinear)?;
        let (field, dim) = (id.field(), id.rows());
        Ok(Self { group, field, dim, matrices, character: None })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_matrices(&self) -> &[FpMatrix] {
        &self.matrices
    }

    pub fn character(&self) -> Option<&[u8]> {
        self.character.as_deref()
    }

    /// Same action over the enumerated group; the enumeration is shared by
    /// every module derived from the result.
    pub fn enumerated(&self) -> Result<Self, CohomologyError> {
        if self.group.is_enumerated() {
            return Ok(self.clone());
        }
        let group = Arc::new((*self.group).clone().enumerate()?);
        let rebuilt = Self::new(group, self.field, self.dim, self.matrices.clone())?;
        match &self.character {
            Some(c) => rebuilt.with_character(c.clone()),
            None => Ok(rebuilt),
        }
    }

    /// Same action on a group object with identical generators.
    pub fn over(&self, group: Arc<FiniteGroup>) -> Result<Self, CohomologyError> {
        if group.generators() != self.group.generators() {
            return Err(CohomologyError::GroupMismatch);
        }
        let rebuilt = Self::new(group, self.field, self.dim, self.matrices.clone())?;
        match &self.character {
            Some(c) => rebuilt.with_character(c.clone()),
            None => Ok(rebuilt),
        }
    }

    /// Contragredient module `V* = Hom(V, F_ℓ)`, matrices `(ρ(s)⁻¹)ᵀ`.
    pub fn dual(&self) -> Self {
        let matrices = self
            .matrices
            .iter()
            .map(|m| m.inverse().expect("generator matrices are invertible").transpose())
            .collect();
        Self {
            group: self.group.clone(),
            field: self.field,
            dim: self.dim,
            matrices,
            character: None,
        }
    }

    /// Direct sum of two modules over the same group.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, CohomologyError> {
        self.same_group(other)?;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        let character = match (&self.character, &other.character) {
            (Some(a), Some(b)) if a == b => Some(a.clone()),
            _ => None,
        };
        Ok(Self {
            group: self.group.clone(),
            field: self.field,
            dim: self.dim + other.dim,
            matrices,
            character,
        })
    }

    /// `⊕ M_i` over `∏ G_i`, each factor acting on its own summand.
    ///
    /// The product group is not enumerated.
    pub fn external_direct_sum(modules: &[&Self]) -> Result<Self, CohomologyError> {
        let first = modules.first().ok_or(CohomologyError::GroupMismatch)?;
        let field = first.field;
        if modules.iter().any(|m| m.field != field) {
            return Err(CohomologyError::GroupMismatch);
        }
        let groups: Vec<&FiniteGroup> = modules.iter().map(|m| &*m.group).collect();
        let product = direct_product(&groups);
        let dims: Vec<usize> = modules.iter().map(|m| m.dim).collect();
        let total: usize = dims.iter().sum();
        let mut matrices = Vec::new();
        let mut character = Some(Vec::new());
        let mut offset = 0;
        for (m, &d) in modules.iter().zip(&dims) {
            for (s, block) in m.matrices.iter().enumerate() {
                let mut big = FpMatrix::identity(field, total);
                for i in 0..d {
                    for j in 0..d {
                        big.set(offset + i, offset + j, block.get(i, j));
                    }
                }
                matrices.push(big);
                match (&mut character, &m.character) {
                    (Some(c), Some(mc)) => c.push(mc[s]),
                    _ => character = None,
                }
            }
            offset += d;
        }
        Ok(Self {
            group: Arc::new(product),
            field,
            dim: total,
            matrices,
            character,
        })
    }

    pub(crate) fn same_group(&self, other: &Self) -> Result<(), CohomologyError> {
        let same = self.field == other.field
            && (Arc::ptr_eq(&self.group, &other.group)
                || self.group.generators() == other.group.generators());
        if same {
            Ok(())
        } else {
            Err(CohomologyError::GroupMismatch)
        }
    }

    /// `ρ(x)` for every enumerated element, flattened row-major in BFS order.
    ///
    /// # Panics
    /// If the group is not enumerated.
    pub(crate) fn element_matrices_flat(&self) -> Vec<u8> {
        element_matrices_flat(&self.group, self.field, self.dim, &self.matrices)
    }

    /// `ρ` on the first `n` enumerated elements; the BFS prefix is closed
    /// under taking tree parents.
    pub(crate) fn element_matrices_flat_prefix(&self, n: usize) -> Vec<u8> {
        let sq = self.dim * self.dim;
        let mut reps = vec![0u8; n * sq];
        if n == 0 {
            return reps;
        }
        for i in 0..self.dim {
            reps[i * self.dim + i] = 1;
        }
        for y in 1..n {
            let (x, s) = self.group.tree_parent(y).expect("non-identity has a parent");
            let (head, tail) = reps.split_at_mut(y * sq);
            mat_mul_flat(self.field, self.dim, &head[x * sq..(x + 1) * sq], self.matrices[s].as_flat(), &mut tail[..sq]);
        }
        reps
    }

    /// Matrix of an enumerated element.
    pub fn element_matrix(&self, index: usize) -> FpMatrix {
        let mut m = FpMatrix::identity(self.field, self.dim);
        let mut path = Vec::new();
        let mut i = index;
        while let Some((p, s)) = self.group.tree_parent(i) {
            path.push(s);
            i = p;
        }
        for &s in path.iter().rev() {
            m = m.mul(&self.matrices[s]);
        }
        m
    }
}

/// `ρ` on every element via the BFS tree: `ρ(x·s) = ρ(x)ρ(s)`.
pub(crate) fn element_matrices_flat(
    group: &FiniteGroup,
    field: PrimeField,
    dim: usize,
    matrices: &[FpMatrix],
) -> Vec<u8> {
    let n = group.order().expect("group not enumerated");
    let sq = dim * dim;
    let mut reps = vec![0u8; n * sq];
    for i in 0..dim {
        reps[i * dim + i] = 1;
    }
    for y in 1..n {
        let (x, s) = group.tree_parent(y).expect("non-identity has a parent");
        let (head, tail) = reps.split_at_mut(y * sq);
        mat_mul_flat(field, dim, &head[x * sq..(x + 1) * sq], matrices[s].as_flat(), &mut tail[..sq]);
    }
    reps
}

pub(crate) fn mat_mul_flat(field: PrimeField, d: usize, a: &[u8], b: &[u8], out: &mut [u8]) {
    let p = field.p();
    for i in 0..d {
        for j in 0..d {
            let mut acc = 0u32;
            for k in 0..d {
                acc += a[i * d + k] as u32 * b[k * d + j] as u32;
            }
            out[i * d + j] = (acc % p) as u8;
        }
    }
}

fn check_relations(
    group: &FiniteGroup,
    field: PrimeField,
    dim: usize,
    matrices: &[FpMatrix],
) -> Result<(), CohomologyError> {
    let reps = element_matrices_flat(group, field, dim, matrices);
    let sq = dim * dim;
    let mut prod = vec![0u8; sq];
    for x in 0..group.order().unwrap_or(0) {
        for (s, m) in matrices.iter().enumerate() {
            let y = group.cayley(x, s);
            if group.tree_parent(y) == Some((x, s)) {
                continue;
            }
            mat_mul_flat(field, dim, &reps[x * sq..(x + 1) * sq], m.as_flat(), &mut prod);
            if prod[..] != reps[y * sq..(y + 1) * sq] {
                return Err(CohomologyError::Inconsistent { element: x, generator: s });
            }
        }
    }
    Ok(())
}

/// Zero-sum submodule of the permutation module `F₂^d` over `S_d` or `A_d`.
///
/// For odd `d` it is a direct summand of dimension `d − 1`. Basis
/// `b_i = e_i + e_{d−1}` for `i < d − 1`; a zero-sum vector has coordinates
/// equal to its first `d − 1` entries. The group is enumerated.
pub fn standard_module(d: usize, family: PermutationFamily) -> Result<GModule, CohomologyError> {
    if d < 3 || d.is_multiple_of(2) {
        return Err(CohomologyError::EvenDegree(d));
    }
    let group = match family {
        PermutationFamily::Symmetric => symmetric_group(d),
        PermutationFamily::Alternating => alternating_group(d),
    };
    zero_sum_module(Arc::new(group.enumerate()?), PrimeField::new(2))
}

/// Zero-sum submodule of the permutation module of any permutation group over F₂.
pub fn zero_sum_module(group: Arc<FiniteGroup>, field: PrimeField) -> Result<GModule, CohomologyError> {
    let GroupElement::Perm(id) = group.identity() else {
        return Err(CohomologyError::NotLinear);
    };
    let d = id.degree();
    let r = d - 1;
    let matrices = group
        .generators()
        .iter()
        .map(|g| {
            let GroupElement::Perm(p) = g else { unreachable!("generators share the identity's kind") };
            let mut m = FpMatrix::zero(field, r, r);
            let last = p.apply(d - 1);
            for i in 0..r {
                // σ·b_i = e_{σ(i)} − e_{σ(d−1)}
                let a = p.apply(i);
                if a < r {
                    m.set(a, i, field.add(m.get(a, i), 1));
                }
                if last < r {
                    m.set(last, i, field.sub(m.get(last, i), 1));
                }
            }
            m
        })
        .collect();
    GModule::new(group, field, r, matrices)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bad_assignment_is_rejected() {
        let s3 = Arc::new(symmetric_group(3).enumerate().unwrap());
        let f = PrimeField::new(3);
        // (0 1) ↦ 1, (0 1 2) ↦ 2 violates (0 1)(0 1 2)(0 1) = (0 1 2)⁻¹
        let bad = vec![
            FpMatrix::identity(f, 1),
            FpMatrix::from_rows(f, &[vec![2]]),
        ];
        assert!(matches!(
            GModule::new(s3.clone(), f, 1, bad),
            Err(CohomologyError::Inconsistent { .. })
        ));
        let sign = GModule::trivial(s3, f, 1).with_character(vec![2, 1]);
        assert!(sign.is_ok());
    }

    #[test]
    fn standard_module_shapes() {
        for (d, fam) in [(3, PermutationFamily::Symmetric), (5, PermutationFamily::Alternating), (7, PermutationFamily::Symmetric)] {
            let m = standard_module(d, fam).unwrap();
            assert_eq!(m.dim(), d - 1);
        }
        assert_eq!(standard_module(4, PermutationFamily::Symmetric).unwrap_err(), CohomologyError::EvenDegree(4));
    }

    #[test]
    fn element_matrix_matches_flat() {
        let m = standard_module(5, PermutationFamily::Symmetric).unwrap();
        let flat = m.element_matrices_flat();
        for i in [0, 7, 59, 119] {
            assert_eq!(m.element_matrix(i).as_flat(), &flat[i * 16..(i + 1) * 16]);
        }
    }
}
