//! The Hecke algebra H(S_n) over Q(q): standard-basis arithmetic, the three
//! (anti)involutions, both Kazhdan-Lusztig bases with their memoized
//! polynomial table, q-(anti)symmetrisers and the cell partition of S_n.
//!
//! Conventions: T_s^2 = (q - q^-1) T_s + 1, C_s = T_s + q^-1 and
//! C-dagger_s = -T_s + q.

mod cells;
mod elt;
mod kl;
pub mod oracle;

pub use cells::{sn_cells, CellSide, Cells};
pub use elt::HeckeElt;
pub use kl::{KlRow, KlTable};

use crate::coeffs::{LaurentPoly, RatFunc};
use crate::symgroup::{Permutation, SubsetJ, SymError};

/// Errors raised by algebra-level operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error(transparent)]
    Group(#[from] SymError),
    #[error("antisymmetriser range [{offset}, {offset}+{k}) does not fit in 1..={n}")]
    RangeViolation { k: usize, offset: usize, n: usize },
}

/// Which of the two Kazhdan-Lusztig bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KlBasis {
    /// {C_w}: unitriangular with coefficients in q^-1 Z[q^-1].
    C,
    /// {C-dagger_w}: signed, with coefficients in q Z[q].
    CDagger,
}

/// The q-symmetriser e_J = W_J(q^2)^-1 sum over W_J of q^l(w) T_w.
///
/// It is an idempotent with T_s e_J = e_J T_s = q e_J for s in J.
pub fn q_symmetriser(j: &SubsetJ) -> HeckeElt {
    let n = j.n();
    let poincare = RatFunc::from_laurent(&j.poincare());
    let scalar = poincare.inverse().expect("Poincare polynomial is nonzero");
    let mut elt = HeckeElt::zero(n);
    for w in j.subgroup_elements() {
        let c = &RatFunc::q_pow(w.length() as i64) * &scalar;
        elt.add_term(w, c);
    }
    elt
}

/// The unnormalised q-antisymmetriser on `k` consecutive letters starting at
/// `offset` (1-based): the sum of (-1)^l(w) q^(l(w_k) - l(w)) T_w over the
/// embedded S_k. Equals C-dagger of the longest element of that block.
pub fn q_antisymmetriser(k: usize, offset: usize, n: usize) -> Result<HeckeElt, HeckeError> {
    if k == 0 || offset == 0 || offset + k - 1 > n {
        return Err(HeckeError::RangeViolation { k, offset, n });
    }
    let j = SubsetJ::new(n, (offset..offset + k - 1).collect::<Vec<_>>())?;
    let top = j.longest_element().length() as i64;
    let mut elt = HeckeElt::zero(n);
    for w in j.subgroup_elements() {
        let l = w.length() as i64;
        let sign = if l % 2 == 0 { 1 } else { -1 };
        elt.add_term(w, RatFunc::q_pow(top - l).scale_int(sign));
    }
    Ok(elt)
}

/// Verifies bar-invariance of a Kazhdan-Lusztig basis element by a full
/// bar expansion in the standard basis. Used by the verification suites.
pub fn is_bar_invariant(elt: &HeckeElt) -> bool {
    elt.bar() == *elt
}

/// C_w assembled as a standard-basis element: T_w + sum of p_{x,w} T_x.
pub fn kl_c(table: &KlTable, w: &Permutation) -> HeckeElt {
    table.c_elt(w)
}

/// C-dagger_w assembled as a standard-basis element.
pub fn kl_c_dagger(table: &KlTable, w: &Permutation) -> HeckeElt {
    table.cdagger_elt(w)
}

pub(crate) fn laurent_rf(l: &LaurentPoly) -> RatFunc {
    RatFunc::from_laurent(l)
}
