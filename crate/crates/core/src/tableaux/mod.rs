//! Partitions, dominance order, standard and semistandard Young tableaux,
//! the Robinson-Schensted correspondence, the weight-relabelling map, the
//! two RSK correspondences on double cosets, and Kostka numbers.

mod partition;
mod rs;
mod rsk;
mod tableau;

pub use partition::Partition;
pub use rs::{rs, rs_inverse};
pub use rsk::{
    knuth_rsk, lift_pair, rsk_max_inverse, rsk_min_inverse, rsk_of_max_rep, rsk_of_min_rep,
    shape_of, unique_semistandard,
};
pub use tableau::{SemiStdTableau, StdTableau};

use crate::symgroup::Composition;

/// Errors raised by tableau-level operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("not a standard tableau")]
    NotStandard,
    #[error("not semistandard after relabelling: a descent lies in J")]
    NotSemistandard,
    #[error("shape/weight mismatch")]
    ShapeMismatch,
}

/// Number of semistandard tableaux of the given shape and weight, by direct
/// enumeration.
pub fn kostka(shape: &Partition, weight: &Composition) -> usize {
    SemiStdTableau::enumerate(shape, weight).len()
}

/// The partition obtained by sorting the parts of a composition.
pub fn mu_ord(mu: &Composition) -> Partition {
    let mut parts = mu.parts().to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted composition is a partition")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kostka_values() {
        let mu = Composition::new(vec![2, 1, 1]).unwrap();
        assert_eq!(kostka(&Partition::new(vec![3, 1]).unwrap(), &mu), 2);
        assert_eq!(kostka(&Partition::new(vec![4]).unwrap(), &mu), 1);
        assert_eq!(kostka(&Partition::new(vec![1, 1, 1, 1]).unwrap(), &mu), 0);
    }

    #[test]
    fn kostka_positivity_criterion() {
        // K(lambda, mu) > 0 iff lambda dominates mu sorted.
        for n in 1..=6 {
            for mu in Composition::enumerate(n) {
                let ord = mu_ord(&mu);
                for lambda in Partition::enumerate(n) {
                    assert_eq!(
                        kostka(&lambda, &mu) > 0,
                        lambda.dominates(&ord),
                        "lambda={:?} mu={:?}",
                        lambda,
                        mu
                    );
                }
            }
        }
    }

    #[test]
    fn kostka_is_weight_permutation_invariant() {
        let l = Partition::new(vec![3, 2]).unwrap();
        let a = Composition::new(vec![2, 2, 1]).unwrap();
        let b = Composition::new(vec![1, 2, 2]).unwrap();
        assert_eq!(kostka(&l, &a), kostka(&l, &b));
    }
}
