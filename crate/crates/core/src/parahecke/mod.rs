//! The parabolic Hecke algebra H^mu(S_n) = e_mu H(S_n) e_mu: double cosets
//! of the Young subgroup S_mu, the standard and renormalised standard bases,
//! both Kazhdan-Lusztig bases, cells, and cell modules.

mod cells;
mod coset;
mod elt;
mod klbases;

pub use cells::{cell_module, para_cells, predicted_cells, CellModule};
pub use coset::{CosetSystem, DoubleCoset};
pub use elt::{ParaBasis, ParaElt};

use crate::symgroup::SymError;

/// Errors raised by parabolic-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParaError {
    #[error(transparent)]
    Group(#[from] SymError),
    #[error("composition mismatch between operands")]
    MuMismatch,
    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("permutation is not a minimal double coset representative")]
    NotMinimalRep,
    #[error("tableau shape/weight mismatch")]
    ShapeMismatch,
}
