use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::PipelineError;
use crate::cohomology::{
    endomorphism_algebra_dim, h1, is_absolutely_simple, standard_module, GModule, PermutationFamily,
};
use crate::disjoint::{disc_class, DiscClass, DEFAULT_FACTOR_BUDGET};
use crate::galois::{discriminant, IntPolynomial};
use crate::groups::{
    general_symplectic_group, group_order_formula, has_index_l_normal_subgroup, symmetric_group, symplectic_group,
    SymplecticFamily,
};
use crate::kummer::{
    build_nikulin_lattice, canonical_class, equivariant_lattice, numerology, pic_model_factor, torsor_group,
    PicModelFactor, TorsorFactor,
};

/// The sextic whose splitting field is compared with a genus-2 Jacobian's
/// 2-torsion field.
pub fn example_2_sextic() -> IntPolynomial {
    IntPolynomial::from_i64(&[5, -8, 4, 0, 4, -8, 4])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Example1Audit {
    pub l: u32,
    pub sp_order: usize,
    pub has_index_l_normal_subgroup: bool,
    pub natural_absolutely_simple: bool,
    pub natural_end_dim: usize,
    pub psp_order_formula: BigInt,
}

impl Example1Audit {
    pub fn passed(&self) -> bool {
        let sp: BigInt = group_order_formula(SymplecticFamily::Sp, 4, self.l);
        BigInt::from(self.sp_order) == sp
            && &self.psp_order_formula * 2 == sp
            && !self.has_index_l_normal_subgroup
            && self.natural_absolutely_simple
    }
}

/// `Sp(4, F_ℓ)`: no normal subgroup of index ℓ and an absolutely simple
/// natural module. Only `ℓ = 3` is within the enumeration bound.
pub fn audit_example_1_odd(l: u32) -> Result<Example1Audit, PipelineError> {
    if l != 3 {
        return Err(PipelineError::UnsupportedPrime(l));
    }
    let sp = Arc::new(symplectic_group(4, l)?.enumerate()?);
    let natural = GModule::natural(sp.clone())?;
    Ok(Example1Audit {
        l,
        sp_order: sp.order().expect("enumerated"),
        has_index_l_normal_subgroup: has_index_l_normal_subgroup(&sp, l)?,
        natural_absolutely_simple: is_absolutely_simple(&natural)?,
        natural_end_dim: endomorphism_algebra_dim(&natural),
        psp_order_formula: group_order_formula(SymplecticFamily::PSp, 4, l),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Example2Audit {
    /// `|S₆ / S₆'S₆²|`; 2 means exactly one normal subgroup of index 2.
    pub s6_index2_quotient: usize,
    pub gsp_order: usize,
    pub gsp_index2_quotient: usize,
    /// The index-2 normal subgroup of `GSp(4, F₃)` is `F₃*²·Sp(4, F₃) = Sp(4, F₃)`.
    pub gsp_kernel_is_sp: bool,
    pub sextic_discriminant: BigInt,
    pub sextic_disc_class: DiscClass,
}

impl Example2Audit {
    pub fn expected_disc_class() -> DiscClass {
        DiscClass {
            sign: crate::disjoint::Sign::Minus,
            support: [3, 13, 31].into_iter().map(BigInt::from).collect(),
        }
    }

    pub fn passed(&self) -> bool {
        self.s6_index2_quotient == 2
            && self.gsp_index2_quotient == 2
            && self.gsp_kernel_is_sp
            && self.sextic_disc_class == Self::expected_disc_class()
    }
}

/// Goursat data for `S₆ × GSp(4, F₃)`: each factor has a unique index-2
/// normal subgroup, and the quadratic field of the sextic.
pub fn audit_example_2_goursat() -> Result<Example2Audit, PipelineError> {
    let s6 = symmetric_group(6).enumerate()?;
    let s6_index2_quotient = s6.elementary_abelian_quotient_order(2)?;
    let gsp = general_symplectic_group(4, 3)?.enumerate()?;
    let gsp_index2_quotient = gsp.elementary_abelian_quotient_order(2)?;
    let kernel = gsp.elementary_abelian_kernel(2)?;
    let sp = symplectic_group(4, 3)?;
    let gsp_kernel_is_sp = BigInt::from(kernel.order()) == group_order_formula(SymplecticFamily::Sp, 4, 3)
        && sp.generators().iter().all(|s| kernel.contains(s));
    let sextic = example_2_sextic();
    Ok(Example2Audit {
        s6_index2_quotient,
        gsp_order: gsp.order().expect("enumerated"),
        gsp_index2_quotient,
        gsp_kernel_is_sp,
        sextic_discriminant: discriminant(&sextic),
        sextic_disc_class: disc_class(&sextic, DEFAULT_FACTOR_BUDGET)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardModuleAudit {
    pub family: PermutationFamily,
    pub degree: usize,
    pub absolutely_simple: bool,
    pub end_dim: usize,
    pub h1: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Example3Audit {
    pub modules: Vec<StandardModuleAudit>,
    pub affine_group_order: BigInt,
    /// Nontrivial invariants of `H¹(2⁶ ⋊ S₇, Π₁)`.
    pub h1_pi1: Vec<BigInt>,
    pub pic: PicModelFactor,
    pub picard_prediction: u64,
    /// `K = ½Σ e_x`: every numerator is 1.
    pub canonical_class_half_sum: bool,
}

impl Example3Audit {
    pub fn passed(&self) -> bool {
        self.modules.iter().all(|m| m.absolutely_simple && m.h1 == 0)
            && self.h1_pi1.is_empty()
            && self.pic.h1_v == 1
            && self.pic.h1_model == 0
            && self.picard_prediction == 65
            && self.canonical_class_half_sum
    }
}

/// The genus-3 case with `G = S₇` or `A₇` acting on the 6-dimensional
/// standard module and the affine group `2⁶ ⋊ S₇`.
pub fn audit_example_3_desk() -> Result<Example3Audit, PipelineError> {
    let mut modules = Vec::new();
    let mut s7 = None;
    for family in [PermutationFamily::Symmetric, PermutationFamily::Alternating] {
        let m = standard_module(7, family)?;
        modules.push(StandardModuleAudit {
            family,
            degree: 7,
            absolutely_simple: is_absolutely_simple(&m)?,
            end_dim: endomorphism_algebra_dim(&m),
            h1: h1(&m)?.h1_dim(),
        });
        if family == PermutationFamily::Symmetric {
            s7 = Some(m);
        }
    }
    let factor = TorsorFactor { module: s7.expect("built above"), nontrivial: true };
    let model = build_nikulin_lattice(3)?;
    let p = torsor_group(core::slice::from_ref(&factor))?;
    let e = equivariant_lattice(&model, &p)?;
    let pic = pic_model_factor(&factor)?;
    let k = canonical_class(3)?;
    Ok(Example3Audit {
        modules,
        affine_group_order: p.order.clone(),
        h1_pi1: e.h1_pi1()?,
        pic,
        picard_prediction: numerology(3, 1)?.picard_rank,
        canonical_class_half_sum: k.numerators.iter().all(|x| *x == BigInt::from(1)),
    })
}
