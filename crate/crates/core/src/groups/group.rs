use alloc::vec::Vec;

use indexmap::IndexSet;
use rustc_hash::FxBuildHasher;
use thiserror::Error;

use super::element::GroupElement;

/// Default bound on enumerated group orders.
///
/// Admits `2⁶ ⋊ S₇` (322 560) and `GSp(4, F₃)` (103 680); `GSp(4, F₅)` is
/// rejected.
pub const DEFAULT_CAP: usize = 2_000_000;

pub(crate) type ElementSet = IndexSet<GroupElement, FxBuildHasher>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("operation needs an enumerated group")]
    NotEnumerated,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix generator {0} is not invertible")]
    NotInvertible(usize),
    #[error("symplectic groups need an even dimension, got {0}")]
    OddSymplecticDimension(usize),
    #[error("{0} is not a supported prime")]
    BadPrime(u32),
}

#[derive(Clone, Debug)]
struct Enumeration {
    elements: ElementSet,
    /// `cayley[i·k + s]` is the index of `elements[i]·generators[s]`.
    cayley: Vec<u32>,
    /// BFS tree: `elements[i] = elements[parent]·generators[gen]`.
    parent: Vec<(u32, u32)>,
}

/// Finitely generated group with an optional frozen enumeration.
///
/// Enumeration is a breadth-first search from the identity over right
/// multiplication by the generators, so element indices are deterministic
/// given the generator order and the identity is element 0.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    identity: GroupElement,
    generators: Vec<GroupElement>,
    cap: usize,
    enumeration: Option<Enumeration>,
}

impl FiniteGroup {
    pub fn new(identity: GroupElement, generators: Vec<GroupElement>) -> Self {
        Self {
            identity,
            generators,
            cap: DEFAULT_CAP,
            enumeration: None,
        }
    }

    /// Group generated by `generators`, which must be nonempty.
    pub fn generated_by(generators: Vec<GroupElement>) -> Self {
        let identity = generators
            .first()
            .expect("need at least one generator to infer the identity")
            .identity_like();
        Self::new(identity, generators)
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn identity(&self) -> &GroupElement {
        &self.identity
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_enumerated(&self) -> bool {
        self.enumeration.is_some()
    }

    /// Freezes the element list and Cayley graph.
    pub fn enumerate(mut self) -> Result<Self, GroupError> {
        if self.enumeration.is_some() {
            return Ok(self);
        }
        let k = self.generators.len();
        let mut elements = ElementSet::default();
        elements.insert(self.identity.clone());
        let mut cayley = Vec::new();
        let mut parent = alloc::vec![(0u32, 0u32)];
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i].clone();
            for (s, g) in self.generators.iter().enumerate() {
                let (idx, fresh) = elements.insert_full(x.mul(g));
                if fresh {
                    if elements.len() > self.cap {
                        return Err(GroupError::CapExceeded { cap: self.cap });
                    }
                    parent.push((i as u32, s as u32));
                }
                cayley.push(idx as u32);
            }
            i += 1;
        }
        debug_assert_eq!(cayley.len(), elements.len() * k);
        self.enumeration = Some(Enumeration {
            elements,
            cayley,
            parent,
        });
        Ok(self)
    }

    fn enumeration(&self) -> Result<&Enumeration, GroupError> {
        self.enumeration.as_ref().ok_or(GroupError::NotEnumerated)
    }

    /// Order of the group, if enumerated.
    pub fn order(&self) -> Option<usize> {
        self.enumeration.as_ref().map(|e| e.elements.len())
    }

    /// # Panics
    /// If the group is not enumerated or `i` is out of range.
    pub fn element(&self, i: usize) -> &GroupElement {
        &self.enumeration.as_ref().expect("group not enumerated").elements[i]
    }

    pub fn elements(&self) -> Result<impl Iterator<Item = &GroupElement>, GroupError> {
        Ok(self.enumeration()?.elements.iter())
    }

    pub fn index_of(&self, x: &GroupElement) -> Option<usize> {
        self.enumeration.as_ref()?.elements.get_index_of(x)
    }

    /// Index of `element(i)·generator(s)`.
    ///
    /// # Panics
    /// If the group is not enumerated.
    #[inline]
    pub fn cayley(&self, i: usize, s: usize) -> usize {
        let e = self.enumeration.as_ref().expect("group not enumerated");
        e.cayley[i * self.generators.len() + s] as usize
    }

    /// BFS tree edge into element `i`: `(parent, generator)`; `None` for the identity.
    pub fn tree_parent(&self, i: usize) -> Option<(usize, usize)> {
        if i == 0 {
            return None;
        }
        let e = self.enumeration.as_ref()?;
        let (p, s) = e.parent[i];
        Some((p as usize, s as usize))
    }

    /// Index of the product of two enumerated elements.
    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        let x = self.element(i).mul(self.element(j));
        self.index_of(&x).expect("enumeration is closed under products")
    }

    /// Subgroup generated by `seeds`; when `normal` is set, the normal closure
    /// (closed under conjugation by this group's generators).
    pub fn subgroup_closure(
        &self,
        seeds: &[GroupElement],
        normal: bool,
    ) -> Result<Subgroup, GroupError> {
        let mut elements = ElementSet::default();
        elements.insert(self.identity.clone());
        let mut gens: Vec<GroupElement> = Vec::new();
        let mut pending: Vec<GroupElement> = seeds.to_vec();
        loop {
            while let Some(h) = pending.pop() {
                if elements.contains(&h) {
                    continue;
                }
                gens.push(h);
                // re-close: every element times every generator
                let mut i = 0;
                while i < elements.len() {
                    let x = elements[i].clone();
                    for g in &gens {
                        let (_, fresh) = elements.insert_full(x.mul(g));
                        if fresh && elements.len() > self.cap {
                            return Err(GroupError::CapExceeded { cap: self.cap });
                        }
                    }
                    i += 1;
                }
            }
            if !normal {
                break;
            }
            for h in &gens {
                for t in &self.generators {
                    let c = h.conjugate_by(t);
                    if !elements.contains(&c) {
                        pending.push(c);
                    }
                }
            }
            if pending.is_empty() {
                break;
            }
        }
        Ok(Subgroup {
            elements,
            generators: gens,
        })
    }

    /// `K = ⟨⟨[s, t], s^ℓ⟩⟩`, the smallest normal subgroup with elementary
    /// abelian ℓ-quotient: the normal closure of commutators of generators and
    /// ℓ-th powers of generators.
    pub fn elementary_abelian_kernel(&self, l: u32) -> Result<Subgroup, GroupError> {
        let mut seeds = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                seeds.push(GroupElement::commutator(a, b));
            }
            seeds.push(a.pow(l as u64));
        }
        self.subgroup_closure(&seeds, true)
    }

    /// `[G : G'G^ℓ]`; a power of ℓ whose exponent is `dim Hom(G, Z/ℓ)`.
    pub fn elementary_abelian_quotient_order(&self, l: u32) -> Result<usize, GroupError> {
        let order = self.order().ok_or(GroupError::NotEnumerated)?;
        let k = self.elementary_abelian_kernel(l)?;
        Ok(order / k.order())
    }
}

/// Subgroup produced by a closure computation.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: ElementSet,
    generators: Vec<GroupElement>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.elements.contains(x)
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn iter(&self) -> impl Iterator<Item = &GroupElement> {
        self.elements.iter()
    }
}

/// True iff `g` surjects onto `Z/ℓ`, i.e. has a normal subgroup of index ℓ.
///
/// Tests whether ℓ divides `[G : K]` for `K` the normal closure of generator
/// commutators and ℓ-th powers. Enumerates `g` if needed.
pub fn has_index_l_normal_subgroup(g: &FiniteGroup, l: u32) -> Result<bool, GroupError> {
    if !crate::exact::is_prime_u64(l as u64) {
        return Err(GroupError::BadPrime(l));
    }
    let owned;
    let g = if g.is_enumerated() {
        g
    } else {
        owned = g.clone().enumerate()?;
        &owned
    };
    Ok(g.elementary_abelian_quotient_order(l)? % l as usize == 0)
}

/// Direct product; generators are the factor generators placed in their slot.
pub fn direct_product(factors: &[&FiniteGroup]) -> FiniteGroup {
    let identity = GroupElement::Tuple(factors.iter().map(|f| f.identity().clone()).collect());
    let mut generators = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        for s in f.generators() {
            let GroupElement::Tuple(mut slots) = identity.clone() else { unreachable!() };
            slots[i] = s.clone();
            generators.push(GroupElement::Tuple(slots));
        }
    }
    let cap = factors.iter().map(|f| f.cap()).max().unwrap_or(DEFAULT_CAP);
    FiniteGroup::new(identity, generators).with_cap(cap)
}
