//! Brute-force reference computations, kept independent of the production
//! recursion so the two can be compared.

use crate::coeffs::{LaurentPoly, RatFunc};
use crate::symgroup::Permutation;

use super::elt::HeckeElt;

/// Computes C_w by bar-triangularization alone: start from T_w and correct
/// the defect of bar-invariance from the top down, forcing every added
/// coefficient into q^-1 Z[q^-1]. Uniqueness of the Kazhdan-Lusztig basis
/// makes the result independent of the length-induction recursion.
pub fn kl_c_by_bar_triangularization(w: &Permutation) -> HeckeElt {
    let mut elt = HeckeElt::t(w.clone());
    loop {
        let defect = elt.bar().sub(&elt);
        if defect.is_zero() {
            return elt;
        }
        // A length-maximal support element is Bruhat-maximal, so its defect
        // coefficient is bar-antisymmetric.
        let x = defect
            .support()
            .max_by(|a, b| a.length().cmp(&b.length()).then(a.cmp(b)))
            .cloned()
            .expect("nonzero defect");
        let gamma = defect
            .coeff(&x)
            .to_laurent()
            .expect("defect coefficients are Laurent");
        debug_assert_eq!(gamma.bar(), -gamma.clone(), "defect must be antisymmetric");
        debug_assert!(gamma.coeff(0).bits() == 0, "no constant term in the defect");
        // p - bar(p) = gamma with p supported in negative exponents.
        let p = LaurentPoly::from_terms(
            gamma
                .terms()
                .filter(|(e, _)| *e < 0)
                .map(|(e, c)| (e, c.clone())),
        );
        let mut correction = HeckeElt::zero(w.n());
        correction.add_term(x, RatFunc::from_laurent(&p));
        elt = elt.add(&correction);
    }
}
