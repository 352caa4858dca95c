use std::collections::BTreeMap;
use std::fmt;

use crate::coeffs::RatFunc;
use crate::symgroup::{Permutation, SymError};

/// A finitely supported element of H(S_n) in the standard basis {T_w},
/// with coefficients in Q(q). Zero coefficients are never stored; term
/// iteration is lexicographic in one-line notation.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElt {
    n: usize,
    terms: BTreeMap<Permutation, RatFunc>,
}

impl HeckeElt {
    pub fn zero(n: usize) -> Self {
        HeckeElt {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::t(Permutation::identity(n))
    }

    /// The basis element T_w.
    pub fn t(w: Permutation) -> Self {
        let n = w.n();
        let mut terms = BTreeMap::new();
        terms.insert(w, RatFunc::one());
        HeckeElt { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Permutation) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RatFunc)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.terms.keys()
    }

    /// Adds `c * T_w` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Permutation, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(w.n(), self.n);
        match self.terms.entry(w) {
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

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        HeckeElt {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        HeckeElt {
            n: self.n,
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Right multiplication by T_i (or its inverse): the quadratic relation
    /// applied term by term.
    pub fn right_mul_gen(&self, i: usize, inverse: bool) -> Self {
        let mut out = Self::zero(self.n);
        let hook = crate::coeffs::RatFunc::q_pow(1) - crate::coeffs::RatFunc::q_pow(-1);
        for (w, c) in &self.terms {
            let ws = w.right_mul_s(i);
            if ws.length() > w.length() {
                // T_w T_i = T_{w s_i}; for the inverse use T_i^-1 = T_i - (q - q^-1).
                out.add_term(ws, c.clone());
                if inverse {
                    out.add_term(w.clone(), -(c * &hook));
                }
            } else {
                // T_w T_i = (q - q^-1) T_w + T_{w s_i}
                out.add_term(ws, c.clone());
                if !inverse {
                    out.add_term(w.clone(), c * &hook);
                }
            }
        }
        out
    }

    /// Left multiplication by T_i (or its inverse).
    pub fn left_mul_gen(&self, i: usize, inverse: bool) -> Self {
        let mut out = Self::zero(self.n);
        let hook = crate::coeffs::RatFunc::q_pow(1) - crate::coeffs::RatFunc::q_pow(-1);
        for (w, c) in &self.terms {
            let sw = w.left_mul_s(i);
            if sw.length() > w.length() {
                out.add_term(sw, c.clone());
                if inverse {
                    out.add_term(w.clone(), -(c * &hook));
                }
            } else {
                out.add_term(sw, c.clone());
                if !inverse {
                    out.add_term(w.clone(), c * &hook);
                }
            }
        }
        out
    }

    /// Right multiplication by the basis element T_v, by peeling a reduced
    /// word of v. T_w T_v = T_{wv} whenever lengths add.
    pub fn right_mul_t(&self, v: &Permutation) -> Self {
        let mut acc = self.clone();
        for i in v.reduced_word() {
            acc = acc.right_mul_gen(i, false);
        }
        acc
    }

    pub fn left_mul_t(&self, v: &Permutation) -> Self {
        let mut acc = self.clone();
        for i in v.reduced_word().into_iter().rev() {
            acc = acc.left_mul_gen(i, false);
        }
        acc
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, SymError> {
        if self.n != rhs.n {
            return Err(SymError::SizeMismatch(self.n, rhs.n));
        }
        let mut out = Self::zero(self.n);
        for (v, c) in &rhs.terms {
            let part = self.right_mul_t(v).scale(c);
            out = out.add(&part);
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("rank mismatch in Hecke product")
    }

    /// The bar involution: q -> q^-1 and T_i -> T_i^-1 (a ring automorphism).
    pub fn bar(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            // bar(T_w) = T_{i_1}^-1 ... T_{i_r}^-1 along a reduced word of w.
            let mut acc = HeckeElt::one(self.n).scale(&c.bar());
            for i in w.reduced_word() {
                acc = acc.right_mul_gen(i, true);
            }
            out = out.add(&acc);
        }
        out
    }

    /// The dagger involution: q -> q^-1 and T_i -> -T_i, so T_w picks up
    /// (-1)^l(w). Diagonal in the standard basis.
    pub fn dagger(&self) -> Self {
        HeckeElt {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let sign = if w.length() % 2 == 0 { 1 } else { -1 };
                    (w.clone(), c.bar().scale_int(sign))
                })
                .collect(),
        }
    }

    /// The antiautomorphism iota fixing each T_i: T_w -> T_{w^-1},
    /// coefficients untouched.
    pub fn iota(&self) -> Self {
        HeckeElt {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.inverse(), c.clone()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        m.insert("n".into(), serde_json::Value::from(self.n as u64));
        m.insert("basis".into(), serde_json::Value::String("T".into()));
        m.insert(
            "terms".into(),
            serde_json::Value::Array(
                self.terms
                    .iter()
                    .map(|(w, c)| {
                        let mut t = serde_json::Map::new();
                        t.insert("perm".into(), w.to_json());
                        t.insert("coeff".into(), c.to_json());
                        serde_json::Value::Object(t)
                    })
                    .collect(),
            ),
        );
        serde_json::Value::Object(m)
    }
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if w.is_identity() {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})*T[{}]", c, w)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{q_antisymmetriser, q_symmetriser};
    use super::*;
    use crate::coeffs::RatFunc;
    use crate::symgroup::SubsetJ;

    fn ts(i: usize, n: usize) -> HeckeElt {
        HeckeElt::t(Permutation::s(i, n))
    }

    #[test]
    fn quadratic_relation() {
        // T_s^2 = (q - q^-1) T_s + 1
        let t = ts(1, 2);
        let sq = t.mul(&t);
        let hook = RatFunc::q_pow(1) - RatFunc::q_pow(-1);
        let expect = t.scale(&hook).add(&HeckeElt::one(2));
        assert_eq!(sq, expect);
    }

    #[test]
    fn unit_and_braid() {
        let a = ts(1, 3).mul(&ts(2, 3)).mul(&ts(1, 3));
        let b = ts(2, 3).mul(&ts(1, 3)).mul(&ts(2, 3));
        assert_eq!(a, b);
        let x = a.add(&HeckeElt::one(3).scale(&RatFunc::q_pow(-2)));
        assert_eq!(HeckeElt::one(3).mul(&x), x);
        assert_eq!(x.mul(&HeckeElt::one(3)), x);
    }

    #[test]
    fn lengths_add() {
        // T_w T_w' = T_{ww'} when lengths add.
        let w = Permutation::from_word(4, &[1, 2]).unwrap();
        let v = Permutation::from_word(4, &[3, 2]).unwrap();
        let prod = HeckeElt::t(w.clone()).mul(&HeckeElt::t(v.clone()));
        if w.length() + v.length() == w.compose(&v).length() {
            assert_eq!(prod, HeckeElt::t(w.compose(&v)));
        }
    }

    #[test]
    fn rank_mismatch_detected() {
        let a = HeckeElt::one(3);
        let b = HeckeElt::one(4);
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn bar_of_ts_is_inverse() {
        // bar(T_s) = T_s - (q - q^-1)
        let t = ts(1, 2);
        let hook = RatFunc::q_pow(1) - RatFunc::q_pow(-1);
        assert_eq!(t.bar(), t.sub(&HeckeElt::one(2).scale(&hook)));
        // and T_s * bar(T_s) = 1
        assert_eq!(t.mul(&t.bar()), HeckeElt::one(2));
    }

    #[test]
    fn involutions_are_involutive() {
        // on a handful of structured elements of H(S_4)
        let mut x = HeckeElt::t(Permutation::from_word(4, &[1, 2, 3]).unwrap());
        x = x.add(&ts(2, 4).scale(&RatFunc::q_pow(-3)));
        x = x.add(&HeckeElt::one(4).scale(&(RatFunc::q_pow(2) - RatFunc::from_int(7))));
        assert_eq!(x.bar().bar(), x);
        assert_eq!(x.dagger().dagger(), x);
        assert_eq!(x.iota().iota(), x);
        // iota is an antiautomorphism: iota(ab) = iota(b) iota(a)
        let y = ts(3, 4).add(&ts(1, 4));
        assert_eq!(x.mul(&y).iota(), y.iota().mul(&x.iota()));
        // bar is an automorphism
        assert_eq!(x.mul(&y).bar(), x.bar().mul(&y.bar()));
    }

    #[test]
    fn symmetriser_is_idempotent_and_absorbs() {
        let j = SubsetJ::new(4, vec![1, 3]).unwrap();
        let e = q_symmetriser(&j);
        assert_eq!(e.mul(&e), e);
        for s in j.indices() {
            let t = ts(s, 4);
            let qe = e.scale(&RatFunc::q_pow(1));
            assert_eq!(t.mul(&e), qe);
            assert_eq!(e.mul(&t), qe);
        }
        // e_{S_2} = (1+q^2)^-1 (1 + q T_1)
        let j2 = SubsetJ::full(2);
        let e2 = q_symmetriser(&j2);
        let denom = RatFunc::from_laurent(&crate::coeffs::LaurentPoly::from_terms(vec![
            (0, 1.into()),
            (2, 1.into()),
        ]));
        let expect = HeckeElt::one(2)
            .add(&ts(1, 2).scale(&RatFunc::q_pow(1)))
            .scale(&denom.inverse().unwrap());
        assert_eq!(e2, expect);
    }

    #[test]
    fn antisymmetriser_k3() {
        // six terms with coefficients q^3, -q^2, -q^2, q, q, -1
        let a = q_antisymmetriser(3, 1, 3).unwrap();
        let expect: Vec<(Vec<usize>, i64, i64)> = vec![
            (vec![], 3, 1),
            (vec![1], 2, -1),
            (vec![2], 2, -1),
            (vec![1, 2], 1, 1),
            (vec![2, 1], 1, 1),
            (vec![1, 2, 1], 0, -1),
        ];
        assert_eq!(a.num_terms(), 6);
        for (word, pow, sign) in expect {
            let w = Permutation::from_word(3, &word).unwrap();
            assert_eq!(a.coeff(&w), RatFunc::q_pow(pow).scale_int(sign));
        }
        assert!(q_antisymmetriser(3, 2, 3).is_err());
    }
}
