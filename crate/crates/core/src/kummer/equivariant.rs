use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::integral::integral_h1;
use super::lattice::{num_points, KummerLatticeModel};
use super::KummerError;
use crate::cohomology::{h0, h1, invariant_alternating_forms, GModule};
use crate::exact::{FpMatrix, Lattice, PrimeField, ZMatrix};
use crate::groups::{direct_product, semidirect, FiniteGroup, GroupElement, Permutation};

/// One abelian-variety factor of the torsor: the Galois module `V = A_i[2]`
/// over `G_i` and whether the 2-covering class `[T_i]` is nontrivial.
#[derive(Clone, Debug)]
pub struct TorsorFactor {
    pub module: GModule,
    pub nontrivial: bool,
}

/// `x ↦ Mx + t` on `F₂^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub linear: FpMatrix,
    pub translation: Vec<u8>,
}

impl AffineMap {
    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    /// Image of a point encoded as a bit mask (bit `k` is coordinate `k`).
    pub fn apply(&self, x: usize) -> usize {
        let k = self.dim();
        let v: Vec<u8> = (0..k).map(|i| ((x >> i) & 1) as u8).collect();
        let w = self.linear.mul_vec(&v);
        (0..k).fold(0, |acc, i| acc | ((((w[i] ^ self.translation[i]) & 1) as usize) << i))
    }
}

/// The group `P = ∏ (V_i ⋊ G_i) × ∏ G_j` acting on `T(k̄) = ∏ F₂^{2g_i}` by
/// affine maps on nontrivial factors and linear maps on trivial ones.
///
/// Invariant: `generators[s]` is the action of `group.generators()[s]`.
#[derive(Clone, Debug)]
pub struct TorsorGroup {
    pub group: FiniteGroup,
    pub order: BigInt,
    pub factors: Vec<TorsorFactor>,
    /// `(offset, dim)` of each factor's coordinates in `F₂^{2g}`.
    pub blocks: Vec<(usize, usize)>,
    pub generators: Vec<AffineMap>,
}

impl TorsorGroup {
    /// `2g`.
    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.1).sum()
    }

    pub fn num_points(&self) -> usize {
        1 << self.dim()
    }

    /// Permutations of the `2^{2g}` points induced by the generators.
    pub fn point_permutations(&self) -> Vec<Vec<usize>> {
        let n = self.num_points();
        self.generators.iter().map(|a| (0..n).map(|x| a.apply(x)).collect()).collect()
    }

    pub fn point_permutation_elements(&self) -> Vec<Permutation> {
        self.point_permutations()
            .into_iter()
            .map(|p| Permutation::new(p.into_iter().map(|x| x as u8).collect()))
            .collect()
    }

    /// Size of the orbit of `x` under the group.
    pub fn orbit_size(&self, x: usize) -> usize {
        let perms = self.point_permutations();
        let mut seen = vec![false; self.num_points()];
        seen[x] = true;
        let mut stack = vec![x];
        let mut count = 1;
        while let Some(y) = stack.pop() {
            for p in &perms {
                let z = p[y];
                if !seen[z] {
                    seen[z] = true;
                    count += 1;
                    stack.push(z);
                }
            }
        }
        count
    }

    /// Whether the group is transitive on the points of factor `i`'s block.
    pub fn factor_transitive(&self, i: usize) -> bool {
        let (offset, dim) = self.blocks[i];
        let mask = ((1usize << dim) - 1) << offset;
        let perms = self.point_permutations();
        let mut seen = vec![false; 1 << dim];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(y) = stack.pop() {
            for p in &perms {
                let z = (p[y << offset] & mask) >> offset;
                if !seen[z] {
                    seen[z] = true;
                    stack.push(z);
                }
            }
        }
        seen.iter().all(|&b| b)
    }
}

/// Builds `P` from the factors. Every module must be over F₂ with even
/// dimension; factor groups are enumerated to obtain `|P|`.
pub fn torsor_group(factors: &[TorsorFactor]) -> Result<TorsorGroup, KummerError> {
    let f2 = PrimeField::new(2);
    let mut groups = Vec::with_capacity(factors.len());
    let mut blocks = Vec::with_capacity(factors.len());
    let mut local: Vec<Vec<AffineMap>> = Vec::with_capacity(factors.len());
    let mut order = BigInt::one();
    let mut offset = 0;
    for f in factors {
        let m = &f.module;
        if m.field() != f2 || m.dim() % 2 == 1 {
            return Err(KummerError::ActionMismatch("torsor modules must be even-dimensional over F₂"));
        }
        let g = m.group().clone();
        let g_order = match g.order() {
            Some(n) => n,
            None => (*g).clone().enumerate()?.order().expect("enumerated"),
        };
        order *= BigInt::from(g_order);
        let dim = m.dim();
        if f.nontrivial {
            let p = semidirect(dim, &g, m)?;
            order <<= dim;
            let maps = p
                .generators()
                .iter()
                .map(|s| match s {
                    GroupElement::Pair(pair) => {
                        Ok(AffineMap { linear: pair.linear.clone(), translation: pair.translation.clone() })
                    }
                    _ => Err(KummerError::ActionMismatch("semidirect generator is not affine")),
                })
                .collect::<Result<Vec<_>, _>>()?;
            local.push(maps);
            groups.push(p);
        } else {
            local.push(
                m.generator_matrices()
                    .iter()
                    .map(|a| AffineMap { linear: a.clone(), translation: vec![0; dim] })
                    .collect(),
            );
            groups.push((*g).clone());
        }
        blocks.push((offset, dim));
        offset += dim;
    }
    let total = offset;
    let refs: Vec<&FiniteGroup> = groups.iter().collect();
    let group = direct_product(&refs);
    let mut generators = Vec::with_capacity(group.num_generators());
    for (maps, &(off, dim)) in local.iter().zip(&blocks) {
        for a in maps {
            let mut linear = FpMatrix::identity(f2, total);
            let mut translation = vec![0u8; total];
            for i in 0..dim {
                for j in 0..dim {
                    linear.set(off + i, off + j, a.linear.get(i, j));
                }
                translation[off + i] = a.translation[i];
            }
            generators.push(AffineMap { linear, translation });
        }
    }
    debug_assert_eq!(generators.len(), group.num_generators());
    Ok(TorsorGroup { group, order, factors: factors.to_vec(), blocks, generators })
}

/// `P` acting on the lattices of a Kummer model through the points.
#[derive(Clone, Debug)]
pub struct EquivariantLattice {
    pub model: KummerLatticeModel,
    pub torsor: TorsorGroup,
    permutations: Vec<Vec<usize>>,
}

/// Attaches the point action of `p` to `model`, checking dimensions and
/// that `Z[T]`, `Π₁` and `Π` are `P`-stable.
pub fn equivariant_lattice(model: &KummerLatticeModel, p: &TorsorGroup) -> Result<EquivariantLattice, KummerError> {
    if p.dim() != 2 * model.g {
        return Err(KummerError::ActionMismatch("torsor dimension differs from 2g"));
    }
    let e = EquivariantLattice { model: model.clone(), torsor: p.clone(), permutations: p.point_permutations() };
    for lat in [&e.model.zt, &e.model.pi1, &e.model.pi] {
        e.action_matrices(lat)?;
    }
    Ok(e)
}

impl EquivariantLattice {
    pub fn point_permutations(&self) -> &[Vec<usize>] {
        &self.permutations
    }

    /// Column-action matrices of the generators on `lattice`'s basis.
    pub fn action_matrices(&self, lattice: &Lattice) -> Result<Vec<ZMatrix>, KummerError> {
        let basis = lattice.basis();
        let den = lattice.denominator();
        let n = lattice.ambient_dim();
        self.permutations
            .iter()
            .map(|perm| {
                let mut rows = Vec::with_capacity(lattice.rank());
                for j in 0..lattice.rank() {
                    let mut moved = vec![BigInt::default(); n];
                    for (x, v) in basis.row(j).iter().enumerate() {
                        moved[perm[x]] = v.clone();
                    }
                    rows.push(
                        lattice
                            .coordinates(&moved, den)
                            .ok_or(KummerError::ActionMismatch("lattice is not stable under P"))?,
                    );
                }
                Ok(ZMatrix::from_big_rows(&rows, lattice.rank()).transpose())
            })
            .collect()
    }

    fn h1_of(&self, lattice: &Lattice) -> Result<Vec<BigInt>, KummerError> {
        Ok(integral_h1(&self.torsor.order, lattice.rank(), &self.action_matrices(lattice)?))
    }

    /// Invariants of `H¹(P, Z[T])`; empty means zero.
    pub fn h1_zt(&self) -> Result<Vec<BigInt>, KummerError> {
        self.h1_of(&self.model.zt)
    }

    /// Invariants of `H¹(P, Π₁)`; empty means zero.
    pub fn h1_pi1(&self) -> Result<Vec<BigInt>, KummerError> {
        self.h1_of(&self.model.pi1)
    }

    /// Invariants of `H¹(P, Π)`.
    pub fn h1_pi(&self) -> Result<Vec<BigInt>, KummerError> {
        self.h1_of(&self.model.pi)
    }

    /// With every torsor trivial, `{e_x : x ≠ 0} ∪ {½Σ e_x}` is a `P`-stable
    /// Z-basis of `Π₁`. `None` when some factor is nontrivial.
    pub fn pi1_permutation_basis(&self) -> Option<bool> {
        if self.torsor.factors.iter().any(|f| f.nontrivial) {
            return None;
        }
        let n = num_points(self.model.g);
        if self.permutations.iter().any(|p| p[0] != 0) {
            return Some(false);
        }
        let mut rows: Vec<Vec<i64>> = (1..n)
            .map(|x| {
                let mut r = vec![0i64; n];
                r[x] = 2;
                r
            })
            .collect();
        rows.push(vec![1; n]);
        let span = Lattice::from_generators(&ZMatrix::from_rows(&rows), 2);
        Some(rows.len() == self.model.pi1.rank() && span == self.model.pi1)
    }
}

/// Pic-model audit of one factor over `P_i = V_i ⋊ G_i` (nontrivial) or
/// `G_i` (trivial).
///
/// The model is `M_i = V_i* ⊕ Z` with `g·(m, a) = (g·m + a·φ(τ(g)), a)`,
/// where `φ: V → V*` comes from the `G_i`-invariant alternating form and
/// `τ` is the translation part. Since `H¹(P_i, Z) = 0` and the connecting
/// map sends `1 ∈ H⁰(P_i, Z)` to `[φ∘τ]`, `H¹(P_i, M_i) = H¹(P_i, V*) / ⟨[φ∘τ]⟩`.
/// The remaining factors of `P` act trivially on `V_i` and `V_i*`, so when
/// those have no invariants `H¹(P, ·) = H¹(P_i, ·)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicModelFactor {
    pub nontrivial: bool,
    pub h0_v: usize,
    pub h0_v_dual: usize,
    pub h1_v: usize,
    pub h1_v_dual: usize,
    /// Rank of `φ`; full rank means `V ≅ V*`. Zero for trivial factors.
    pub form_rank: usize,
    /// `[φ∘τ] ≠ 0` in `H¹(P_i, V*)`.
    pub differential_nonzero: bool,
    /// `dim H¹(P_i, M_i)`.
    pub h1_model: usize,
}

pub fn pic_model_factor(factor: &TorsorFactor) -> Result<PicModelFactor, KummerError> {
    let m = factor.module.enumerated()?;
    if !factor.nontrivial {
        let dual = m.dual();
        let h1_v = h1(&m)?.h1_dim();
        let h1_v_dual = h1(&dual)?.h1_dim();
        return Ok(PicModelFactor {
            nontrivial: false,
            h0_v: h0(&m),
            h0_v_dual: h0(&dual),
            h1_v,
            h1_v_dual,
            form_rank: 0,
            differential_nonzero: false,
            h1_model: h1_v_dual,
        });
    }

    let forms = invariant_alternating_forms(&m.clone().with_character(vec![1; m.generator_matrices().len()])?)?;
    let form = forms
        .into_iter()
        .max_by_key(|b| b.rank())
        .ok_or(KummerError::NoInvariantForm)?;
    let form_rank = form.rank();
    let bt = form.transpose();

    let p = semidirect(m.dim(), m.group(), &m)?.enumerate()?;
    let v = GModule::natural(Arc::new(p))?;
    let v_dual = v.dual();
    for (a, d) in v.generator_matrices().iter().zip(v_dual.generator_matrices()) {
        if bt.mul(a) != d.mul(&bt) {
            return Err(KummerError::Invariant("φ is not P-equivariant"));
        }
    }
    let space_v = h1(&v)?;
    let space_dual = h1(&v_dual)?;
    let tau: Vec<Vec<u8>> = v
        .group()
        .generators()
        .iter()
        .map(|s| match s {
            GroupElement::Pair(pair) => Ok(bt.mul_vec(&pair.translation)),
            _ => Err(KummerError::ActionMismatch("semidirect generator is not affine")),
        })
        .collect::<Result<_, _>>()?;
    if !space_dual.is_cocycle(&tau)? {
        return Err(KummerError::Invariant("φ∘τ is not a cocycle"));
    }
    let span = space_dual.class_span_dim(&[tau])?;
    Ok(PicModelFactor {
        nontrivial: true,
        h0_v: h0(&v),
        h0_v_dual: h0(&v_dual),
        h1_v: space_v.h1_dim(),
        h1_v_dual: space_dual.h1_dim(),
        form_rank,
        differential_nonzero: span == 1,
        h1_model: space_dual.h1_dim() - span,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{standard_module, PermutationFamily};
    use crate::kummer::build_nikulin_lattice;

    fn s5_factor(nontrivial: bool) -> TorsorFactor {
        TorsorFactor { module: standard_module(5, PermutationFamily::Symmetric).unwrap(), nontrivial }
    }

    #[test]
    fn trivial_torsor_s5() {
        let model = build_nikulin_lattice(2).unwrap();
        let p = torsor_group(&[s5_factor(false)]).unwrap();
        assert_eq!(p.order, BigInt::from(120));
        let e = equivariant_lattice(&model, &p).unwrap();
        assert_eq!(e.pi1_permutation_basis(), Some(true));
        assert!(e.h1_zt().unwrap().is_empty());
        assert!(e.h1_pi1().unwrap().is_empty());
        assert_eq!(p.orbit_size(0), 1);
    }

    #[test]
    fn nontrivial_torsor_s5() {
        let model = build_nikulin_lattice(2).unwrap();
        let p = torsor_group(&[s5_factor(true)]).unwrap();
        assert_eq!(p.order, BigInt::from(1920));
        assert!(p.factor_transitive(0));
        assert_eq!(p.orbit_size(0), 16);
        let e = equivariant_lattice(&model, &p).unwrap();
        assert_eq!(e.pi1_permutation_basis(), None);
        assert!(e.h1_zt().unwrap().is_empty());
        assert!(e.h1_pi1().unwrap().is_empty());
        let pic = pic_model_factor(&s5_factor(true)).unwrap();
        assert_eq!((pic.h1_v, pic.h1_v_dual, pic.form_rank), (1, 1, 4));
        assert!(pic.differential_nonzero);
        assert_eq!(pic.h1_model, 0);
    }

    #[test]
    fn dimension_mismatch() {
        let model = build_nikulin_lattice(3).unwrap();
        let p = torsor_group(&[s5_factor(true)]).unwrap();
        assert!(matches!(equivariant_lattice(&model, &p), Err(KummerError::ActionMismatch(_))));
    }
}
