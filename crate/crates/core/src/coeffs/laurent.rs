use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{big, CoeffError};

/// An integer Laurent polynomial in `q`, stored sparsely.
///
/// Invariants: no stored coefficient is zero and the term list is sorted by
/// strictly increasing exponent. This makes the representation canonical.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    /// The monomial `q^k`.
    pub fn q_pow(k: i64) -> Self {
        LaurentPoly {
            terms: vec![(k, BigInt::one())],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(0, c)] }
        }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(big(c))
    }

    /// The monomial `c * q^k`.
    pub fn monomial(c: BigInt, k: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(k, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (exponent, coefficient) pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut terms: Vec<(i64, BigInt)> = pairs.into_iter().collect();
        terms.sort_by_key(|(e, _)| *e);
        let mut merged: Vec<(i64, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match merged.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms: merged }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        match self.terms.binary_search_by_key(&exponent, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Multiplication by `q^k`.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The bar involution q -> q^-1.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<(i64, BigInt)> =
            self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        LaurentPoly { terms }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Exact evaluation at a rational point. Points must be nonzero when
    /// negative exponents are present.
    pub fn eval(&self, point: &BigRational) -> Result<BigRational, CoeffError> {
        let needs_inverse = self.min_exp().map_or(false, |e| e < 0);
        if needs_inverse && point.is_zero() {
            return Err(CoeffError::Pole);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                pow_rational(point, *e as u32)
            } else {
                pow_rational(point, (-*e) as u32).recip()
            };
            acc += p * BigRational::from(c.clone());
        }
        Ok(acc)
    }

    /// Exact quotient `self / other`, or `None` when the division does not
    /// come out exactly over Z[q, q^-1].
    pub fn exact_div(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // Shift both to ordinary polynomials and do long division.
        let a_val = self.min_exp().unwrap();
        let b_val = other.min_exp().unwrap();
        let mut rem = self.shifted(-a_val).terms;
        let div = other.shifted(-b_val).terms;
        let (dlead_e, dlead_c) = div.last().cloned().unwrap();
        let mut quot: Vec<(i64, BigInt)> = Vec::new();
        while let Some((rlead_e, rlead_c)) = rem.last().cloned() {
            if rlead_e < dlead_e {
                return None;
            }
            if (&rlead_c % &dlead_c) != BigInt::zero() {
                return None;
            }
            let qc = &rlead_c / &dlead_c;
            let qe = rlead_e - dlead_e;
            quot.push((qe, qc.clone()));
            let sub = LaurentPoly {
                terms: div.iter().map(|(e, c)| (e + qe, c * &qc)).collect(),
            };
            let new_rem = LaurentPoly { terms: rem } - sub;
            rem = new_rem.terms;
        }
        quot.reverse();
        Some(LaurentPoly { terms: quot }.shifted(a_val - b_val))
    }

    /// True when every exponent is >= 1, i.e. the value lies in q Z[q].
    pub fn in_q_zq(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 1)
    }

    /// True when every exponent is <= -1, i.e. the value lies in q^-1 Z[q^-1].
    pub fn in_qinv_zqinv(&self) -> bool {
        self.max_exp().map_or(true, |e| e <= -1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| {
                    serde_json::Value::Array(vec![
                        serde_json::Value::from(*e),
                        super::ratfunc::bigint_json(c),
                    ])
                })
                .collect(),
        )
    }
}

pub(crate) fn pow_rational(base: &BigRational, exp: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &rhs.terms[j];
            match ea.cmp(eb) {
                std::cmp::Ordering::Less => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*eb, cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((*ea, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(rhs.terms[j..].iter().cloned());
        LaurentPoly { terms: out }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs.clone())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut pairs = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                pairs.push((ea + eb, ca * cb));
            }
        }
        LaurentPoly::from_terms(pairs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
    };
}
owned_ops!(LaurentPoly);

impl fmt::Display for LaurentPoly {
    /// Renders in the monomial style used throughout the tables, e.g.
    /// `q^{-1}+q^{-3}` or `1+2q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest exponent first reads like the hand-written tables.
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit = abs.is_one();
            if *e == 0 {
                write!(f, "{}", abs)?;
            } else {
                if !unit {
                    write!(f, "{}", abs)?;
                }
                if *e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{{{}}}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::q_pow(1)
    }

    #[test]
    fn canonical_merge() {
        let p = LaurentPoly::from_terms(vec![(2, big(1)), (0, big(3)), (2, big(-1))]);
        assert_eq!(p, LaurentPoly::from_i64(3));
    }

    #[test]
    fn bar_is_involutive() {
        let p = LaurentPoly::from_terms(vec![(-3, big(1)), (-1, big(1))]);
        assert_eq!(p.bar(), LaurentPoly::from_terms(vec![(1, big(1)), (3, big(1))]));
        assert_eq!(p.bar().bar(), p);
    }

    #[test]
    fn exact_division() {
        // (1+q^2)(1+q^2+q^4) divides back out.
        let a = LaurentPoly::from_terms(vec![(0, big(1)), (2, big(1))]);
        let b = LaurentPoly::from_terms(vec![(0, big(1)), (2, big(1)), (4, big(1))]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(b.exact_div(&a).is_none());
        // Laurent shift does not break exactness.
        let c = a.shifted(-5);
        assert_eq!(prod.exact_div(&c).unwrap(), b.shifted(5));
    }

    #[test]
    fn eval_at_point() {
        let p = LaurentPoly::from_terms(vec![(-1, big(1)), (1, big(1))]);
        let two = BigRational::from(big(2));
        let v = p.eval(&two).unwrap();
        assert_eq!(v, BigRational::new(big(5), big(2)));
        assert_eq!(p.eval(&BigRational::zero()), Err(CoeffError::Pole));
    }

    #[test]
    fn display_matches_table_style() {
        let p = LaurentPoly::from_terms(vec![(-1, big(1)), (-3, big(1))]);
        assert_eq!(p.to_string(), "q^{-1}+q^{-3}");
        assert_eq!(q().to_string(), "q");
        assert_eq!((-LaurentPoly::one()).to_string(), "-1");
    }
}
