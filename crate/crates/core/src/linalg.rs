//! Exact incremental echelon forms for sparse vectors, used for rank and
//! membership computations over Q(q) and over Q.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::coeffs::RatFunc;

/// A sparse vector over Q(q), keyed by an ordered index type.
pub type SparseVec<K> = BTreeMap<K, RatFunc>;

/// Incremental row-echelon basis over Q(q). Pivots are the largest keys,
/// each pivot column normalised to 1 and cleared from the other rows.
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current basis; the remainder has no pivot key.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        loop {
            // Largest reducible key; eliminating it only introduces smaller keys.
            let Some(pivot) = v
                .keys()
                .rev()
                .find(|k| self.rows.contains_key(*k))
                .cloned()
            else {
                return v;
            };
            let coeff = v.remove(&pivot).expect("pivot present");
            let row = self.rows.get(&pivot).expect("pivot row present");
            for (k, c) in row {
                if k == &pivot {
                    continue;
                }
                let delta = c * &coeff;
                match v.entry(k.clone()) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        if !delta.is_zero() {
                            e.insert(-delta);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let acc = e.get() - &delta;
                        if acc.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = acc;
                        }
                    }
                }
            }
        }
    }

    /// Inserts a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let mut rem = self.reduce(v);
        let Some((pivot, lead)) = rem.iter().next_back().map(|(k, c)| (k.clone(), c.clone()))
        else {
            return false;
        };
        let inv = lead.inverse().expect("leading coefficient nonzero");
        for c in rem.values_mut() {
            *c = &*c * &inv;
        }
        // Clear the new pivot from existing rows to keep reduction single-pass.
        let updates: Vec<K> = self
            .rows
            .iter()
            .filter(|(_, row)| row.contains_key(&pivot))
            .map(|(k, _)| k.clone())
            .collect();
        for key in updates {
            let mut row = self.rows.remove(&key).expect("present");
            let factor = row.remove(&pivot).expect("present");
            for (k, c) in &rem {
                if k == &pivot {
                    continue;
                }
                let delta = c * &factor;
                match row.entry(k.clone()) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        if !delta.is_zero() {
                            e.insert(-delta);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let acc = e.get() - &delta;
                        if acc.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = acc;
                        }
                    }
                }
            }
            self.rows.insert(key, row);
        }
        self.rows.insert(pivot, rem);
        true
    }

    /// True when `v` lies in the current span.
    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

/// Incremental rank over Q for evaluated vectors.
pub struct RationalEchelon<K: Ord + Clone> {
    rows: BTreeMap<K, BTreeMap<K, BigRational>>,
}

impl<K: Ord + Clone> RationalEchelon<K> {
    pub fn new() -> Self {
        RationalEchelon {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, mut v: BTreeMap<K, BigRational>) -> bool {
        loop {
            v.retain(|_, c| !c.is_zero());
            let Some((pivot, lead)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone()))
            else {
                return false;
            };
            match self.rows.get(&pivot) {
                None => {
                    for c in v.values_mut() {
                        *c = &*c / &lead;
                    }
                    self.rows.insert(pivot, v);
                    return true;
                }
                Some(row) => {
                    v.remove(&pivot);
                    for (k, c) in row {
                        if k == &pivot {
                            continue;
                        }
                        let delta = c * &lead;
                        *v.entry(k.clone()).or_insert_with(BigRational::zero) -= delta;
                    }
                }
            }
        }
    }
}

impl<K: Ord + Clone> Default for RationalEchelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::RatFunc;

    fn v(pairs: &[(u32, i64)]) -> SparseVec<u32> {
        pairs
            .iter()
            .map(|&(k, c)| (k, RatFunc::from_int(c)))
            .collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(0, 1), (1, 2)])));
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        // dependent vector
        assert!(!e.insert(v(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(v(&[(0, 2), (1, 5), (2, 1)])));
        assert!(!e.contains(v(&[(2, 1)])));
        assert!(e.insert(v(&[(2, 1)])));
        assert_eq!(e.rank(), 3);
    }

    #[test]
    fn rational_rank() {
        use num_bigint::BigInt;
        let mut e = RationalEchelon::new();
        let row = |pairs: &[(u32, i64)]| -> BTreeMap<u32, BigRational> {
            pairs
                .iter()
                .map(|&(k, c)| (k, BigRational::from(BigInt::from(c))))
                .collect()
        };
        assert!(e.insert(row(&[(0, 1), (1, 1)])));
        assert!(e.insert(row(&[(0, 1), (1, -1)])));
        assert!(!e.insert(row(&[(0, 5), (1, 3)])));
        assert_eq!(e.rank(), 2);
    }
}
