use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeffs::LaurentPoly;
use crate::symgroup::{Permutation, SubsetJ};

use super::elt::HeckeElt;
use super::laurent_rf;

/// One row of the Kazhdan-Lusztig table: x -> p_{x,w} for all x <= w.
///
/// The normalisation is balanced: C_w = T_w + sum p_{x,w} T_x with
/// p_{x,w} in q^-1 Z[q^-1] for x < w and p_{w,w} = 1.
pub type KlRow = BTreeMap<Permutation, LaurentPoly>;

/// Grow-only memo of Kazhdan-Lusztig polynomials for a fixed rank n.
///
/// Rows are filled by the classical length induction
/// C_w = C_s C_{sw} - sum over z of mu(z, sw) C_z (s a left descent of w),
/// where mu(z, v) is the coefficient of q^-1 in p_{z,v}. Concurrent readers
/// are safe; duplicated computation is possible but entries never diverge.
pub struct KlTable {
    n: usize,
    rows: Mutex<HashMap<Permutation, Arc<KlRow>>>,
    mu_rows: Mutex<HashMap<Permutation, Arc<Vec<(Permutation, BigInt)>>>>,
}

impl KlTable {
    pub fn new(n: usize) -> Self {
        KlTable {
            n,
            rows: Mutex::new(HashMap::new()),
            mu_rows: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The full row {p_{x,w}}_x, memoized.
    pub fn row(&self, w: &Permutation) -> Arc<KlRow> {
        assert_eq!(w.n(), self.n, "rank mismatch in KL table");
        if let Some(r) = self.rows.lock().unwrap().get(w) {
            return r.clone();
        }
        let row = self.compute_row(w);
        let arc = Arc::new(row);
        self.rows
            .lock()
            .unwrap()
            .entry(w.clone())
            .or_insert_with(|| arc.clone())
            .clone()
    }

    fn compute_row(&self, w: &Permutation) -> KlRow {
        // Longest element of a Young subgroup: every p_{x,w} is the pure
        // power q^(l(x) - l(w)). Covers the identity and w_0.
        if let Some(j) = young_subgroup_if_longest(w) {
            let lw = w.length() as i64;
            return j
                .subgroup_elements()
                .into_iter()
                .map(|x| {
                    let lx = x.length() as i64;
                    (x, LaurentPoly::q_pow(lx - lw))
                })
                .collect();
        }

        let s = w.left_descents().next().expect("non-identity");
        let v = w.left_mul_s(s);
        let row_v = self.row(&v);

        let mut cand: BTreeMap<Permutation, LaurentPoly> = BTreeMap::new();
        let mut add = |key: Permutation, val: LaurentPoly| {
            if val.is_zero() {
                return;
            }
            match cand.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(val);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let acc = e.get() + &val;
                    if acc.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = acc;
                    }
                }
            }
        };

        // C_s C_v expanded through C_s T_x = T_{sx} + q^{+-1} T_x.
        for (x, p) in row_v.iter() {
            let sx = x.left_mul_s(s);
            add(sx.clone(), p.clone());
            let shift = if sx.length() < x.length() { 1 } else { -1 };
            add(x.clone(), p.shifted(shift));
        }

        // Correction terms: - mu(z, v) C_z for z < v with s z < z.
        for (z, p) in row_v.iter() {
            let mu = p.coeff(-1);
            if mu.is_zero() || z == &v || !z.has_left_descent(s) {
                continue;
            }
            let row_z = self.row(z);
            for (y, pz) in row_z.iter() {
                add(y.clone(), pz.scale(&-mu.clone()));
            }
        }

        debug_assert!(cand.get(w).map_or(false, |p| p.is_one()));
        for (x, p) in &cand {
            assert!(
                x == w || p.in_qinv_zqinv(),
                "KL membership violated at p_{{{}, {}}} = {}",
                x,
                w,
                p
            );
        }
        cand
    }

    /// p_{x,w}, zero when x is not below w.
    pub fn p(&self, x: &Permutation, w: &Permutation) -> LaurentPoly {
        self.row(w).get(x).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// The mu-coefficient: coefficient of q^-1 in p_{z,w}.
    pub fn mu(&self, z: &Permutation, w: &Permutation) -> BigInt {
        self.row(w)
            .get(z)
            .map(|p| p.coeff(-1))
            .unwrap_or_else(BigInt::zero)
    }

    /// Pairs (z, mu(z,w)) with nonzero mu, straight off the memoized row.
    pub fn mu_row(&self, w: &Permutation) -> Arc<Vec<(Permutation, BigInt)>> {
        if let Some(v) = self.mu_rows.lock().unwrap().get(w) {
            return v.clone();
        }
        let v: Vec<(Permutation, BigInt)> = self
            .row(w)
            .iter()
            .filter(|(z, _)| *z != w)
            .filter_map(|(z, p)| {
                let m = p.coeff(-1);
                if m.is_zero() {
                    None
                } else {
                    Some((z.clone(), m))
                }
            })
            .collect();
        let arc = Arc::new(v);
        self.mu_rows
            .lock()
            .unwrap()
            .entry(w.clone())
            .or_insert_with(|| arc.clone())
            .clone()
    }

    /// C_w = T_w + sum p_{x,w} T_x as a standard-basis element.
    pub fn c_elt(&self, w: &Permutation) -> HeckeElt {
        let mut elt = HeckeElt::zero(self.n);
        for (x, p) in self.row(w).iter() {
            elt.add_term(x.clone(), laurent_rf(p));
        }
        elt
    }

    /// C-dagger_w = (-1)^l(w) T_w + sum (-1)^l(x) bar(p_{x,w}) T_x.
    pub fn cdagger_elt(&self, w: &Permutation) -> HeckeElt {
        let mut elt = HeckeElt::zero(self.n);
        for (x, p) in self.row(w).iter() {
            let sign = if x.length() % 2 == 0 { 1 } else { -1 };
            elt.add_term(x.clone(), laurent_rf(&p.bar()).scale_int(sign));
        }
        elt
    }
}

/// When w is the longest element of a Young subgroup W_K, returns K.
fn young_subgroup_if_longest(w: &Permutation) -> Option<SubsetJ> {
    let k = SubsetJ::new(w.n(), w.right_descents().collect::<Vec<_>>()).ok()?;
    if &k.longest_element() == w {
        Some(k)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::super::is_bar_invariant;
    use super::*;
    use crate::coeffs::{big, RatFunc};

    #[test]
    fn c_of_simple_reflection() {
        // C_s = T_s + q^-1
        let table = KlTable::new(2);
        let s = Permutation::s(1, 2);
        let c = table.c_elt(&s);
        assert_eq!(c.coeff(&s), RatFunc::one());
        assert_eq!(c.coeff(&Permutation::identity(2)), RatFunc::q_pow(-1));
        // C-dagger_s = -T_s + q
        let cd = table.cdagger_elt(&s);
        assert_eq!(cd.coeff(&s), RatFunc::from_int(-1));
        assert_eq!(cd.coeff(&Permutation::identity(2)), RatFunc::q_pow(1));
        assert_eq!(table.cdagger_elt(&Permutation::identity(2)), HeckeElt::one(2));
    }

    #[test]
    fn famous_coefficient_in_s4() {
        // coefficient of T_{s1 s3} in C_{s1 s2 s3 s2 s1} is q^-1 + q^-3
        let table = KlTable::new(4);
        let w = Permutation::from_word(4, &[1, 2, 3, 2, 1]).unwrap();
        let x = Permutation::from_word(4, &[1, 3]).unwrap();
        assert_eq!(
            table.p(&x, &w),
            LaurentPoly::from_terms(vec![(-1, big(1)), (-3, big(1))])
        );
    }

    #[test]
    fn parabolic_longest_fast_path() {
        // C_{w_J} for J = {1,3}: q^-2 (T_{s1s3} + q T_{s1} + q T_{s3} + q^2)
        let table = KlTable::new(4);
        let j = SubsetJ::new(4, vec![1, 3]).unwrap();
        let wj = j.longest_element();
        let c = table.c_elt(&wj);
        assert_eq!(c.num_terms(), 4);
        assert_eq!(c.coeff(&Permutation::identity(4)), RatFunc::q_pow(-2));
        assert_eq!(c.coeff(&Permutation::s(1, 4)), RatFunc::q_pow(-1));
        assert_eq!(c.coeff(&Permutation::s(3, 4)), RatFunc::q_pow(-1));
        assert_eq!(c.coeff(&wj), RatFunc::one());
    }

    #[test]
    fn rows_are_bar_invariant_on_s4() {
        let table = KlTable::new(4);
        for w in Permutation::enumerate(4) {
            assert!(is_bar_invariant(&table.c_elt(&w)), "C_{} not bar invariant", w);
            assert!(
                is_bar_invariant(&table.cdagger_elt(&w)),
                "C-dagger_{} not bar invariant",
                w
            );
        }
    }

    #[test]
    fn support_is_bruhat_interval() {
        let table = KlTable::new(4);
        let all = Permutation::enumerate(4);
        for w in &all {
            let row = table.row(w);
            for x in &all {
                assert_eq!(row.contains_key(x), x.bruhat_leq(w), "x={} w={}", x, w);
            }
        }
    }

    #[test]
    fn mu_symmetry_under_inverse() {
        // p_{x,w} = p_{x^-1, w^-1}
        let table = KlTable::new(4);
        for w in Permutation::enumerate(4) {
            let row = table.row(&w);
            for (x, p) in row.iter() {
                assert_eq!(table.p(&x.inverse(), &w.inverse()), *p);
            }
        }
    }

    #[test]
    fn p_shift_property() {
        // p_{sy,x} = q p_{y,x} when s in L(x), s not in L(y)
        let table = KlTable::new(4);
        for x in Permutation::enumerate(4) {
            let row = table.row(&x);
            for s in x.left_descents().collect::<Vec<_>>() {
                for (y, p) in row.iter() {
                    if y.has_left_descent(s) {
                        continue;
                    }
                    let sy = y.left_mul_s(s);
                    assert_eq!(table.p(&sy, &x), p.shifted(1), "s={} y={} x={}", s, y, x);
                }
            }
        }
    }
}
