use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::poly::Poly;
use super::{big, CoeffError};

/// An element of the fraction field Q(q), stored as a reduced fraction of
/// integer polynomials.
///
/// Canonical form: the denominator is nonzero with positive leading
/// coefficient, and numerator and denominator share no factor over Z[q]
/// (polynomial part and integer content alike). Equality of canonical forms
/// is therefore plain structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    fn reduced(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides numerator");
        let mut den = den.exact_div(&g).expect("gcd divides denominator");
        if den.leading().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc {
            num: Poly::constant(big(c)),
            den: Poly::one(),
        }
    }

    /// The monomial `q^k`, any sign of k.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            RatFunc {
                num: Poly::q_pow(k as usize),
                den: Poly::one(),
            }
        } else {
            RatFunc {
                num: Poly::one(),
                den: Poly::q_pow((-k) as usize),
            }
        }
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let val = p.min_exp().unwrap_or(0).min(0);
        let mut coeffs = Vec::new();
        for (e, c) in p.terms() {
            let idx = (e - val) as usize;
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, BigInt::zero());
            }
            coeffs[idx] = c.clone();
        }
        let mut num = Poly(coeffs);
        num.trim();
        RatFunc {
            num,
            den: Poly::q_pow((-val) as usize),
        }
    }

    pub fn from_bigint(c: BigInt) -> Self {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == Poly::one() && self.den == Poly::one()
    }

    /// True when the value lies in Z[q, q^-1], i.e. the reduced denominator
    /// is a power of q.
    pub fn is_laurent(&self) -> bool {
        self.den.leading().is_one() && self.den.0.iter().rev().skip(1).all(|c| c.is_zero())
    }

    /// Round-trips into Z[q, q^-1] when possible.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if !self.is_laurent() {
            return None;
        }
        let shift = self.den.degree() as i64;
        Some(LaurentPoly::from_terms(
            self.num
                .0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as i64 - shift, c.clone())),
        ))
    }

    /// Membership in q Z[q] (used by the unitriangularity checks).
    pub fn in_q_zq(&self) -> bool {
        self.to_laurent().map_or(false, |l| l.in_q_zq())
    }

    /// Membership in q^-1 Z[q^-1].
    pub fn in_qinv_zqinv(&self) -> bool {
        self.to_laurent().map_or(false, |l| l.in_qinv_zqinv())
    }

    /// The bar involution q -> q^-1.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        // self(1/q) = q^(deg den - deg num) rev(num) / rev(den), where the
        // reversal also swallows any q-valuation of num and den.
        let a = self.num.degree() as i64;
        let b = self.den.degree() as i64;
        let rn = self.num.reversed();
        let rd = self.den.reversed();
        let (num, den) = if b >= a {
            (rn.mul(&Poly::q_pow((b - a) as usize)), rd)
        } else {
            (rn, rd.mul(&Poly::q_pow((a - b) as usize)))
        };
        Self::reduced(num, den)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &BigRational) -> Result<BigRational, CoeffError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(CoeffError::Pole);
        }
        Ok(self.num.eval(point) / d)
    }

    pub fn inverse(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CoeffError> {
        if rhs.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self * &RatFunc::from_int(c)
    }

    pub fn num_json(&self) -> serde_json::Value {
        poly_json(&self.num)
    }

    pub fn den_json(&self) -> serde_json::Value {
        poly_json(&self.den)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        m.insert("num".into(), self.num_json());
        m.insert("den".into(), self.den_json());
        serde_json::Value::Object(m)
    }
}

fn poly_json(p: &Poly) -> serde_json::Value {
    serde_json::Value::Array(
        p.0.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                serde_json::Value::Array(vec![serde_json::Value::from(e as u64), bigint_json(c)])
            })
            .collect(),
    )
}

/// Exact JSON number for an arbitrary-precision integer.
pub(crate) fn bigint_json(c: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(
        serde_json::Number::from_str(&c.to_string()).expect("integer literal is a JSON number"),
    )
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduced(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs.clone())
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero RatFunc")
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

macro_rules! owned_field_ops {
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
        impl Div for $t {
            type Output = $t;
            fn div(self, rhs: $t) -> $t {
                &self / &rhs
            }
        }
    };
}
owned_field_ops!(RatFunc);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.to_laurent() {
            return write!(f, "{}", l);
        }
        let num = LaurentPoly::from_terms(
            self.num
                .0
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i64, c.clone())),
        );
        let den = LaurentPoly::from_terms(
            self.den
                .0
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i64, c.clone())),
        );
        write!(f, "({})/({})", num, den)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::q_pow(1)
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        assert!((&q() * &RatFunc::q_pow(-1)).is_one());
    }

    #[test]
    fn self_division_is_one() {
        let p = RatFunc::from_laurent(&LaurentPoly::from_terms(vec![(0, big(1)), (2, big(1))]));
        assert!(p.checked_div(&p).unwrap().is_one());
        assert_eq!(
            RatFunc::one().checked_div(&RatFunc::zero()),
            Err(CoeffError::DivisionByZero)
        );
    }

    #[test]
    fn canonical_form_is_unique() {
        // 2q/2 and q agree; (q^2-1)/(q-1) reduces to q+1.
        let a = RatFunc::new(Poly(vec![big(0), big(2)]), Poly(vec![big(2)])).unwrap();
        assert_eq!(a, q());
        let b = RatFunc::new(Poly(vec![big(-1), big(0), big(1)]), Poly(vec![big(-1), big(1)]))
            .unwrap();
        assert_eq!(b.to_laurent().unwrap(), LaurentPoly::from_terms(vec![(0, big(1)), (1, big(1))]));
        // Negative leading denominator gets normalised away.
        let c = RatFunc::new(Poly(vec![big(1)]), Poly(vec![big(1), big(-1)])).unwrap();
        assert_eq!(c.to_string(), "(-1)/(q-1)");
    }

    #[test]
    fn bar_on_generators() {
        assert_eq!(q().bar(), RatFunc::q_pow(-1));
        // q^-1 + q^-3 -> q + q^3
        let p = RatFunc::from_laurent(&LaurentPoly::from_terms(vec![
            (-1, big(1)),
            (-3, big(1)),
        ]));
        let expect = RatFunc::from_laurent(&LaurentPoly::from_terms(vec![(1, big(1)), (3, big(1))]));
        assert_eq!(p.bar(), expect);
        // Bar of a genuine fraction.
        let f = RatFunc::new(Poly(vec![big(1)]), Poly(vec![big(1), big(0), big(1)])).unwrap();
        let barf = f.bar();
        // 1/(1+q^-2) = q^2/(q^2+1)
        assert_eq!(
            barf,
            RatFunc::new(Poly(vec![big(0), big(0), big(1)]), Poly(vec![big(1), big(0), big(1)]))
                .unwrap()
        );
        assert_eq!(barf.bar(), f);
    }

    #[test]
    fn membership_predicates() {
        let p = RatFunc::from_laurent(&LaurentPoly::from_terms(vec![(1, big(1)), (3, big(-1))]));
        assert!(p.in_q_zq() && !p.in_qinv_zqinv());
        assert!(p.bar().in_qinv_zqinv());
        let f = RatFunc::new(Poly(vec![big(1)]), Poly(vec![big(1), big(1)])).unwrap();
        assert!(!f.is_laurent() && !f.in_q_zq());
    }

    #[test]
    fn eval_and_pole() {
        let f = RatFunc::new(Poly(vec![big(0), big(0), big(1)]), Poly::one()).unwrap();
        let three = BigRational::from(big(3));
        assert_eq!(f.eval(&three).unwrap(), BigRational::from(big(9)));
        let g = RatFunc::new(Poly::one(), Poly(vec![big(-3), big(1)])).unwrap();
        assert_eq!(g.eval(&three), Err(CoeffError::Pole));
        // 1+q^2 never vanishes over the rationals.
        let h = RatFunc::new(Poly::one(), Poly(vec![big(1), big(0), big(1)])).unwrap();
        assert!(h.eval(&three).is_ok());
    }
}
