use std::collections::BTreeMap;
use std::fmt;

use crate::coeffs::RatFunc;
use crate::hecke::HeckeElt;
use crate::symgroup::{Composition, Permutation};

use super::coset::CosetSystem;
use super::ParaError;

/// Declared basis of a [`ParaElt`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParaBasis {
    /// The renormalised standard spanning set {e_J T_{rmin(D)} e_J}.
    TMin,
    /// The standard basis {T_D}.
    TD,
    /// {C_{rplus(D)}}.
    KLPlus,
    /// {e_J C-dagger_{rmin(D)} e_J}.
    KLDagger,
}

impl ParaBasis {
    pub fn tag(&self) -> &'static str {
        match self {
            ParaBasis::TMin => "Tmin",
            ParaBasis::TD => "TD",
            ParaBasis::KLPlus => "KLplus",
            ParaBasis::KLDagger => "KLdagger",
        }
    }
}

/// A finitely supported element of H^mu(S_n) in a declared basis, keyed by
/// minimal coset representatives (lexicographic iteration order).
#[derive(Clone, PartialEq, Eq)]
pub struct ParaElt {
    mu: Composition,
    basis: ParaBasis,
    terms: BTreeMap<Permutation, RatFunc>,
}

impl ParaElt {
    pub fn zero(mu: Composition, basis: ParaBasis) -> Self {
        ParaElt {
            mu,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit e_J, i.e. the identity coset with coefficient 1 (any basis
    /// whose identity-coset element is e_J itself).
    pub fn unit(system: &CosetSystem, basis: ParaBasis) -> Self {
        let mut elt = Self::zero(system.mu().clone(), basis);
        elt.add_term(Permutation::identity(system.n()), RatFunc::one());
        elt
    }

    pub fn from_terms(
        mu: Composition,
        basis: ParaBasis,
        terms: impl IntoIterator<Item = (Permutation, RatFunc)>,
    ) -> Self {
        let mut elt = Self::zero(mu, basis);
        for (k, c) in terms {
            elt.add_term(k, c);
        }
        elt
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    pub fn basis(&self) -> ParaBasis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, rmin: &Permutation) -> RatFunc {
        self.terms.get(rmin).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RatFunc)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, rmin: Permutation, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(rmin) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let acc = e.get() + &c;
                if acc.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = acc;
                }
            }
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, ParaError> {
        if self.mu != rhs.mu {
            return Err(ParaError::MuMismatch);
        }
        if self.basis != rhs.basis {
            return Err(ParaError::BasisMismatch {
                expected: self.basis.tag(),
                found: rhs.basis.tag(),
            });
        }
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("incompatible ParaElt addition")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        ParaElt {
            mu: self.mu.clone(),
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.mu.clone(), self.basis);
        }
        ParaElt {
            mu: self.mu.clone(),
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// A standard-basis lift: sum of c_D T_{rmin(D)}. Flanking the lift with
    /// e_J recovers the element (TMin basis only).
    pub fn lift(&self) -> HeckeElt {
        assert_eq!(self.basis, ParaBasis::TMin, "lift needs the TMin basis");
        let mut out = HeckeElt::zero(self.mu.n());
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    /// The honest element of H(S_n) that this TMin vector denotes.
    pub fn full_form(&self, system: &CosetSystem) -> HeckeElt {
        assert_eq!(self.basis, ParaBasis::TMin, "full_form needs the TMin basis");
        let mut out = HeckeElt::zero(self.mu.n());
        for (k, c) in &self.terms {
            let idx = system.index_of_rmin(k).expect("key is a minimal rep");
            out = out.add(&system.e_t_e_full(idx).scale(c));
        }
        out
    }

    /// e_J h e_J rewritten in the TMin spanning set, using
    /// e_J T_y e_J = q^(l(y) - l(rmin)) e_J T_{rmin} e_J for y in the coset
    /// of rmin.
    pub fn project(system: &CosetSystem, h: &HeckeElt) -> Self {
        assert_eq!(h.n(), system.n());
        let mut out = Self::zero(system.mu().clone(), ParaBasis::TMin);
        for (w, c) in h.terms() {
            let (rmin, delta) = w.strip_to_xjj(system.j());
            out.add_term(rmin, c * &RatFunc::q_pow(delta as i64));
        }
        out
    }

    /// Multiplication inside H^mu: lift the left factor, multiply through
    /// the full form of the right factor, and re-project.
    pub fn try_mul(&self, rhs: &Self, system: &CosetSystem) -> Result<Self, ParaError> {
        if self.mu != rhs.mu {
            return Err(ParaError::MuMismatch);
        }
        assert_eq!(self.basis, ParaBasis::TMin);
        assert_eq!(rhs.basis, ParaBasis::TMin);
        let rhs_full = rhs.full_form(system);
        Ok(Self::mul_lift_into(self, &rhs_full, system))
    }

    pub fn mul(&self, rhs: &Self, system: &CosetSystem) -> Self {
        self.try_mul(rhs, system).expect("mu mismatch in ParaElt mul")
    }

    /// sum_D c_D T_{rmin(D)} * rhs_full, projected. `rhs_full` must already
    /// be flanked by e_J on both sides.
    pub(crate) fn mul_lift_into(lhs: &ParaElt, rhs_full: &HeckeElt, system: &CosetSystem) -> Self {
        let mut acc = HeckeElt::zero(system.n());
        for (k, c) in &lhs.terms {
            acc = acc.add(&rhs_full.left_mul_t(k).scale(c));
        }
        Self::project(system, &acc)
    }

    /// The bar involution on H^mu: bar(e h e) = e bar(h) e.
    pub fn bar(&self, system: &CosetSystem) -> Self {
        assert_eq!(self.basis, ParaBasis::TMin);
        Self::project(system, &self.lift().bar())
    }

    /// The antiautomorphism iota: maps each coset to its inverse coset,
    /// coefficients untouched.
    pub fn iota(&self) -> Self {
        ParaElt {
            mu: self.mu.clone(),
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.inverse(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        ParaElt {
            mu: self.mu.clone(),
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter_map(|(k, c)| {
                    let v = f(c);
                    if v.is_zero() {
                        None
                    } else {
                        Some((k.clone(), v))
                    }
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        m.insert("n".into(), serde_json::Value::from(self.mu.n() as u64));
        m.insert("mu".into(), self.mu.to_json());
        m.insert(
            "basis".into(),
            serde_json::Value::String(self.basis.tag().into()),
        );
        m.insert(
            "terms".into(),
            serde_json::Value::Array(
                self.terms
                    .iter()
                    .map(|(k, c)| {
                        let mut t = serde_json::Map::new();
                        t.insert("rmin".into(), k.to_json());
                        t.insert("coeff".into(), c.to_json());
                        serde_json::Value::Object(t)
                    })
                    .collect(),
            ),
        );
        serde_json::Value::Object(m)
    }
}

impl fmt::Display for ParaElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*[{}]", c, k)?;
        }
        write!(f, " {{{}}}", self.basis.tag())
    }
}

impl fmt::Debug for ParaElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::hecke::{q_symmetriser, KlTable};

    fn system(mu: &[usize]) -> CosetSystem {
        let mu = Composition::new(mu.to_vec()).unwrap();
        let n = mu.n();
        CosetSystem::new(mu, Arc::new(KlTable::new(n)))
    }

    #[test]
    fn unit_is_projection_of_one() {
        let sys = system(&[2, 2]);
        let one = HeckeElt::one(4);
        let p = ParaElt::project(&sys, &one);
        assert_eq!(p, ParaElt::unit(&sys, ParaBasis::TMin));
    }

    #[test]
    fn unit_is_neutral() {
        let sys = system(&[2, 1, 1]);
        let e = ParaElt::unit(&sys, ParaBasis::TMin);
        for idx in 0..sys.num_cosets() {
            let mut a = ParaElt::zero(sys.mu().clone(), ParaBasis::TMin);
            a.add_term(sys.coset(idx).rmin.clone(), RatFunc::q_pow(-2).scale_int(3));
            assert_eq!(e.mul(&a, &sys), a);
            assert_eq!(a.mul(&e, &sys), a);
        }
    }

    #[test]
    fn quadratic_relation_survives_projection() {
        // project(T_{s2} T_{s2}) = (q - q^-1) project(T_{s2}) + project(1)
        let sys = system(&[2, 2]);
        let t2 = HeckeElt::t(Permutation::s(2, 4));
        let sq = t2.mul(&t2);
        let lhs = ParaElt::project(&sys, &sq);
        let hook = RatFunc::q_pow(1) - RatFunc::q_pow(-1);
        let rhs = ParaElt::project(&sys, &t2)
            .scale(&hook)
            .add(&ParaElt::project(&sys, &HeckeElt::one(4)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mul_agrees_with_honest_hecke_product() {
        // structure constants against a fully expanded e_J computation
        for mu in [vec![2, 2], vec![2, 1, 1]] {
            let sys = system(&mu);
            let e = q_symmetriser(sys.j());
            for a in 0..sys.num_cosets() {
                for b in 0..sys.num_cosets() {
                    let ta = HeckeElt::t(sys.coset(a).rmin.clone());
                    let tb = HeckeElt::t(sys.coset(b).rmin.clone());
                    let honest = e.mul(&ta).mul(&e).mul(&tb).mul(&e);
                    let via_project = ParaElt::project(&sys, &honest);
                    let ea = ParaElt::from_terms(
                        sys.mu().clone(),
                        ParaBasis::TMin,
                        vec![(sys.coset(a).rmin.clone(), RatFunc::one())],
                    );
                    let eb = ParaElt::from_terms(
                        sys.mu().clone(),
                        ParaBasis::TMin,
                        vec![(sys.coset(b).rmin.clone(), RatFunc::one())],
                    );
                    assert_eq!(ea.mul(&eb, &sys), via_project, "mu={:?} a={} b={}", mu, a, b);
                }
            }
        }
    }

    #[test]
    fn mul_is_associative_on_samples() {
        let sys = system(&[2, 2]);
        let elts: Vec<ParaElt> = (0..sys.num_cosets())
            .map(|i| {
                ParaElt::from_terms(
                    sys.mu().clone(),
                    ParaBasis::TMin,
                    vec![(sys.coset(i).rmin.clone(), RatFunc::q_pow(i as i64 - 1))],
                )
            })
            .collect();
        for a in &elts {
            for b in &elts {
                for c in &elts {
                    let left = a.mul(b, &sys).mul(c, &sys);
                    let right = a.mul(&b.mul(c, &sys), &sys);
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn projection_kills_nothing_in_h_mu() {
        // project . full_form = id on TMin vectors
        let sys = system(&[2, 1, 1]);
        for idx in 0..sys.num_cosets() {
            let v = ParaElt::from_terms(
                sys.mu().clone(),
                ParaBasis::TMin,
                vec![(sys.coset(idx).rmin.clone(), RatFunc::q_pow(2))],
            );
            assert_eq!(ParaElt::project(&sys, &v.full_form(&sys)), v);
        }
    }

    #[test]
    fn mu_mismatch_is_an_error() {
        let sys22 = system(&[2, 2]);
        let sys211 = system(&[2, 1, 1]);
        let a = ParaElt::unit(&sys22, ParaBasis::TMin);
        let b = ParaElt::unit(&sys211, ParaBasis::TMin);
        assert!(matches!(a.try_mul(&b, &sys22), Err(ParaError::MuMismatch)));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn iota_fixes_e_j() {
        let sys = system(&[2, 1, 1]);
        let e = ParaElt::unit(&sys, ParaBasis::TMin);
        assert_eq!(e.iota(), e);
        // iota is an antiautomorphism on H^mu
        let a = ParaElt::from_terms(
            sys.mu().clone(),
            ParaBasis::TMin,
            vec![(sys.coset(2).rmin.clone(), RatFunc::one())],
        );
        let b = ParaElt::from_terms(
            sys.mu().clone(),
            ParaBasis::TMin,
            vec![(sys.coset(3).rmin.clone(), RatFunc::q_pow(1))],
        );
        assert_eq!(a.mul(&b, &sys).iota(), b.iota().mul(&a.iota(), &sys));
    }

    #[test]
    fn bar_is_involutive_on_projected_elements() {
        let sys = system(&[2, 2]);
        let mut v = ParaElt::unit(&sys, ParaBasis::TMin);
        v.add_term(
            sys.coset(1).rmin.clone(),
            RatFunc::q_pow(3) - RatFunc::from_int(2),
        );
        assert_eq!(v.bar(&sys).bar(&sys), v);
    }
}
