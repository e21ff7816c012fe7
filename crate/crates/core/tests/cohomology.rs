use std::sync::Arc;

use kummer_core::cohomology::*;
use kummer_core::exact::{FpMatrix, PrimeField};
use kummer_core::groups::{alternating_group, direct_product, symmetric_group, FiniteGroup, GroupElement};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;

#[test]
fn generator_propagation_matches_full_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..20 {
        let g = Arc::new(common::random_small_group(&mut rng, 60));
        let p = [2, 3, 5][rng.gen_range(0..3)];
        let m = common::random_module(&mut rng, g.clone(), p, 6);
        assert_eq!(h1(&m).unwrap().h1_dim(), common::brute_h1_dim(&m), "|G| = {:?}, p = {p}", g.order());
    }
}

fn permutation_module(g: FiniteGroup) -> GModule {
    GModule::permutation(Arc::new(g.enumerate().unwrap()), PrimeField::new(2))
}

#[test]
fn shapiro_values() {
    for d in [5, 7] {
        assert_eq!(h1(&permutation_module(symmetric_group(d))).unwrap().h1_dim(), 1, "S{d}");
        assert_eq!(h1(&permutation_module(alternating_group(d))).unwrap().h1_dim(), 0, "A{d}");
        for family in [PermutationFamily::Symmetric, PermutationFamily::Alternating] {
            let m = standard_module(d, family).unwrap();
            assert_eq!(h1(&m).unwrap().h1_dim(), 0, "{family:?} {d}");
        }
    }
}

#[test]
fn shapiro_matches_point_stabilizer() {
    // H¹(S_d, F₂[S_d/S_{d−1}]) = Hom(S_{d−1}, F₂)
    let s4 = Arc::new(symmetric_group(4).enumerate().unwrap());
    let trivial = GModule::trivial(s4, PrimeField::new(2), 1);
    assert_eq!(h1(&trivial).unwrap().h1_dim(), 1);
    assert_eq!(common::brute_h1_dim(&trivial), 1);
}

#[test]
fn generating_set_independence_for_s5() {
    let f2 = PrimeField::new(2);
    let two_gens = symmetric_group(5);
    let transpositions: Vec<GroupElement> = (0..4).map(|i| {
        let mut v: Vec<u8> = (0..5).collect();
        v.swap(i, i + 1);
        common::perm(&v)
    }).collect();
    let coxeter = FiniteGroup::generated_by(transpositions);
    for g in [two_gens, coxeter] {
        let g = Arc::new(g.enumerate().unwrap());
        let perm = GModule::permutation(g.clone(), f2);
        assert_eq!(h1(&perm).unwrap().h1_dim(), 1);
        let std = zero_sum_module(g, f2).unwrap();
        assert_eq!(h1(&std).unwrap().h1_dim(), 0);
    }
}

/// `V₁ ⊕ V₂` over `G₁ × G₂` with each `V_i` inflated from its factor.
fn inflated(product: &Arc<FiniteGroup>, parts: &[&GModule], which: usize) -> GModule {
    let f = parts[which].field();
    let mut mats = Vec::new();
    for (i, m) in parts.iter().enumerate() {
        for a in m.generator_matrices() {
            mats.push(if i == which { a.clone() } else { FpMatrix::identity(f, parts[which].dim()) });
        }
    }
    GModule::new(product.clone(), f, parts[which].dim(), mats).unwrap()
}

#[test]
fn decomposition_audit() {
    let v1 = standard_module(5, PermutationFamily::Symmetric).unwrap();
    let v2 = standard_module(3, PermutationFamily::Symmetric).unwrap();
    let parts = [&v1, &v2];
    let product = Arc::new(direct_product(&[v1.group(), v2.group()]).enumerate().unwrap());
    let w1 = inflated(&product, &parts, 0);
    let w2 = inflated(&product, &parts, 1);
    assert_eq!(hom_module_dim(&w1, &w2).unwrap(), 0);
    assert_eq!(hom_module_dim(&w2, &w1).unwrap(), 0);
    let sum = w1.direct_sum(&w2).unwrap();
    let k = product.num_generators();
    let sum = sum.with_character(vec![1; k]).unwrap();
    assert_eq!(wedge2_dual_invariants_dim(&sum).unwrap(), 2);
}

#[test]
fn cocycles_extend_to_every_element() {
    let m = permutation_module(symmetric_group(4));
    let space = h1(&m).unwrap();
    for c in space.cocycle_basis() {
        assert!(cocycle_on_elements(&m.enumerated().unwrap(), &c).is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn h1_ignores_redundant_generators(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = Arc::new(common::random_small_group(&mut rng, 60));
        let p = [2, 3][rng.gen_range(0..2)];
        let m = common::random_module(&mut rng, g.clone(), p, 5);
        // append the product of the first generator with itself and the last
        let gens = g.generators();
        let extra = gens[0].mul(&gens[gens.len() - 1]);
        let mut gens2 = gens.to_vec();
        gens2.push(extra);
        let mut mats = m.generator_matrices().to_vec();
        mats.push(mats[0].mul(&mats[mats.len() - 1]));
        let g2 = Arc::new(FiniteGroup::generated_by(gens2).enumerate().unwrap());
        let m2 = GModule::new(g2, m.field(), m.dim(), mats).unwrap();
        prop_assert_eq!(h1(&m).unwrap().h1_dim(), h1(&m2).unwrap().h1_dim());
    }
}
