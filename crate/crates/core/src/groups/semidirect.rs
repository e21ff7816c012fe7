use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use super::element::{GroupElement, SemidirectPair};
use super::group::{FiniteGroup, GroupError};
use crate::cohomology::GModule;
use crate::exact::{spin_up, FpMatrix};

/// `V ⋊ G` for the module `action` on `V = F_ℓ^{v_dim}`.
///
/// Generators: `(0, s)` for each generator `s` of `g`, followed by
/// translations `(e_i, 1)` for a greedily chosen set of standard basis
/// vectors generating `V` as a module. The result is not enumerated.
pub fn semidirect(v_dim: usize, g: &FiniteGroup, action: &GModule) -> Result<FiniteGroup, GroupError> {
    if action.dim() != v_dim {
        return Err(GroupError::DimensionMismatch { expected: v_dim, found: action.dim() });
    }
    if action.generator_matrices().len() != g.num_generators() {
        return Err(GroupError::DimensionMismatch {
            expected: g.num_generators(),
            found: action.generator_matrices().len(),
        });
    }
    let field = action.field();
    let mats = action.generator_matrices();
    let pair = |translation: Vec<u8>, linear: FpMatrix, base: GroupElement| {
        GroupElement::Pair(Box::new(SemidirectPair { translation, linear, base }))
    };
    let identity = pair(vec![0; v_dim], FpMatrix::identity(field, v_dim), g.identity().clone());
    let mut generators: Vec<GroupElement> = g
        .generators()
        .iter()
        .zip(mats)
        .map(|(s, m)| pair(vec![0; v_dim], m.clone(), s.clone()))
        .collect();
    let mut seeds: Vec<Vec<u8>> = Vec::new();
    for i in 0..v_dim {
        let mut e = vec![0u8; v_dim];
        e[i] = 1;
        if spin_up(field, v_dim, mats, &seeds).contains(&e) {
            continue;
        }
        seeds.push(e.clone());
        generators.push(pair(e, FpMatrix::identity(field, v_dim), g.identity().clone()));
    }
    Ok(FiniteGroup::new(identity, generators).with_cap(g.cap()))
}
