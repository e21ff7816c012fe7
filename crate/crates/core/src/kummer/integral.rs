use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{smith_invariants, ZMatrix};

/// Nontrivial invariants of `H¹(P, M)` for a lattice `M = Zʳ` on which the
/// generators of `P` act by the column-action matrices `actions`.
///
/// `H¹(P, M)` is killed by `N = |P|` (any multiple works), so the sequence
/// for `M →N M` identifies it with `(M/NM)^P` modulo the image of `M^P`.
/// With `A` the stacked `A_s − I` and `d_i` its nonzero Smith invariants this
/// is `⊕ Z/gcd(N, d_i)`.
pub fn integral_h1(group_order: &BigInt, rank: usize, actions: &[ZMatrix]) -> Vec<BigInt> {
    if rank == 0 || actions.is_empty() {
        return Vec::new();
    }
    let id = ZMatrix::identity(rank);
    let mut stacked = ZMatrix::zero(0, rank);
    for a in actions {
        assert_eq!((a.rows(), a.cols()), (rank, rank), "action matrix has the wrong size");
        let mut d = a.clone();
        for i in 0..rank {
            let v = d.get(i, i) - id.get(i, i);
            d.set(i, i, v);
        }
        stacked = stacked.stack(&d);
    }
    smith_invariants(&stacked)
        .into_iter()
        .filter(|d| !d.is_zero())
        .map(|d| d.gcd(group_order))
        .filter(|q| !q.is_one())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn sign_lattice_of_c2() {
        // Z with the generator acting by −1: H¹ = Z/2
        let a = ZMatrix::from_rows(&[vec![-1]]);
        assert_eq!(integral_h1(&BigInt::from(2), 1, &[a]), vec![BigInt::from(2)]);
    }

    #[test]
    fn regular_lattice_of_c3_is_acyclic() {
        let a = ZMatrix::from_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        assert!(integral_h1(&BigInt::from(3), 3, &[a]).is_empty());
    }

    #[test]
    fn augmentation_kernel_of_c3() {
        // {x : Σx = 0} in Z[C₃] has H¹ = Z/3
        let a = ZMatrix::from_rows(&[vec![0, -1], vec![1, -1]]);
        assert_eq!(integral_h1(&BigInt::from(3), 2, &[a]), vec![BigInt::from(3)]);
    }
}
