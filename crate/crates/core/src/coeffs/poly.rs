use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense integer polynomial in `q`, ascending coefficients, no trailing zeros.
/// Internal carrier for [`super::RatFunc`] numerators and denominators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly(pub Vec<BigInt>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Poly(vec![c]);
        p.trim();
        p
    }

    pub fn q_pow(k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::one();
        Poly(v)
    }

    pub fn trim(&mut self) {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Number of leading zero coefficients, i.e. the largest k with q^k | self.
    pub fn valuation(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn leading(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = rhs.0.get(i).cloned().unwrap_or_else(BigInt::zero);
            v.push(a + b);
        }
        let mut p = Poly(v);
        p.trim();
        p
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        let mut p = Poly(v);
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|a| a * c).collect())
    }

    /// GCD of all coefficients, always nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> Poly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Poly(self.0.iter().map(|a| a / &c).collect())
    }

    /// Content-inclusive GCD over Z[q], with positive leading coefficient.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        if self.is_zero() {
            return rhs.positive_lead();
        }
        if rhs.is_zero() {
            return self.positive_lead();
        }
        let content = self.content().gcd(&rhs.content());
        let mut a = self.primitive_part();
        let mut b = rhs.primitive_part();
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.positive_lead().scale(&content)
    }

    fn positive_lead(&self) -> Poly {
        if self.leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Pseudo-remainder of `self` by `rhs` (rhs nonzero).
    fn pseudo_rem(&self, rhs: &Poly) -> Poly {
        let d = rhs.degree();
        let lc = rhs.leading();
        let mut rem = self.clone();
        while !rem.is_zero() && rem.degree() >= d {
            let shift = rem.degree() - d;
            let rl = rem.leading();
            // lc * rem - rl * q^shift * rhs kills the top term.
            let scaled = rem.scale(&lc);
            let mut sub = vec![BigInt::zero(); shift];
            sub.extend(rhs.0.iter().map(|c| c * &rl));
            let mut subp = Poly(sub);
            subp.trim();
            rem = scaled.sub(&subp);
        }
        rem
    }

    /// Exact quotient, or None when `rhs` does not divide exactly over Q[q].
    pub fn exact_div(&self, rhs: &Poly) -> Option<Poly> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if self.degree() < rhs.degree() {
            return None;
        }
        let mut rem: Vec<BigRational> = self.0.iter().map(|c| BigRational::from(c.clone())).collect();
        let div: Vec<BigRational> = rhs.0.iter().map(|c| BigRational::from(c.clone())).collect();
        let dl = div.last().unwrap().clone();
        let dd = rhs.degree();
        let mut quot = vec![BigRational::zero(); self.degree() - dd + 1];
        for top in (dd..rem.len()).rev() {
            let c = rem[top].clone() / dl.clone();
            if !c.is_zero() {
                quot[top - dd] = c.clone();
                for (j, dc) in div.iter().enumerate() {
                    let t = dc.clone() * c.clone();
                    rem[top - dd + j] -= t;
                }
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut out = Vec::with_capacity(quot.len());
        for c in quot {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        let mut p = Poly(out);
        p.trim();
        Some(p)
    }

    /// Coefficient-reversal: q^deg * self(1/q).
    pub fn reversed(&self) -> Poly {
        let mut v = self.0.clone();
        v.reverse();
        let mut p = Poly(v);
        p.trim();
        p
    }

    pub fn eval(&self, point: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * point.clone() + BigRational::from(c.clone());
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::big;

    #[test]
    fn gcd_includes_content() {
        // gcd(2q+2, 4q^2-4) = 2(q+1)
        let a = Poly(vec![big(2), big(2)]);
        let b = Poly(vec![big(-4), big(0), big(4)]);
        assert_eq!(a.gcd(&b), Poly(vec![big(2), big(2)]));
    }

    #[test]
    fn exact_div_rejects_inexact() {
        let a = Poly(vec![big(1), big(1)]);
        let b = Poly(vec![big(1), big(0), big(1)]);
        assert!(b.exact_div(&a).is_none());
        assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
    }
}
