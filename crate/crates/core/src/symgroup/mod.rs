//! Symmetric group combinatorics: permutations with cached length and
//! descents, Bruhat order, reduced words, compositions, parabolic (Young)
//! subgroups and their coset-representative predicates, Poincare polynomials.

mod composition;
mod perm;

pub use composition::{Composition, SubsetJ};
pub use perm::{CosetFlags, Permutation};

/// Errors raised by group-level operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("rank mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("generator index {0} out of range for n = {1}")]
    BadGenerator(usize, usize),
    #[error("instance bound exceeded: n = {0} > bound {1}")]
    BoundExceeded(usize, usize),
}
