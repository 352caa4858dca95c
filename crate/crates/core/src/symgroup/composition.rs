use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::coeffs::LaurentPoly;

use super::perm::Permutation;
use super::SymError;

/// A composition mu = (mu_1, ..., mu_d) of n with all parts >= 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymError> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(SymError::NotAPermutation(0));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn d(&self) -> usize {
        self.parts.len()
    }

    /// Partial sums mu_1, mu_1+mu_2, ..., n.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0usize, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Block index (1-based) of a letter under the consecutive-blocks map.
    pub fn block_of(&self, letter: usize) -> usize {
        let mut acc = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            acc += p;
            if letter <= acc {
                return i + 1;
            }
        }
        panic!("letter {} out of range for |mu| = {}", letter, acc);
    }

    /// The generator subset J(mu): remove the proper partial sums from
    /// {1, ..., n-1}.
    pub fn subset_j(&self) -> SubsetJ {
        let n = self.n();
        let cuts: Vec<usize> = self.partial_sums();
        let mut mask = 0u64;
        for i in 1..n {
            if !cuts.contains(&i) {
                mask |= 1 << i;
            }
        }
        SubsetJ { n, mask }
    }

    /// All compositions of n (2^(n-1) of them), lexicographic.
    pub fn enumerate(n: usize) -> Vec<Composition> {
        fn rec(n: usize, acc: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if n == 0 {
                out.push(Composition { parts: acc.clone() });
                return;
            }
            for first in 1..=n {
                acc.push(first);
                rec(n - first, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.parts
                .iter()
                .map(|&p| serde_json::Value::from(p as u64))
                .collect(),
        )
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A set of simple-generator indices J in {1, ..., n-1}, defining the
/// parabolic (Young) subgroup W_J.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SubsetJ {
    n: usize,
    mask: u64,
}

impl SubsetJ {
    pub fn new(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self, SymError> {
        let mut mask = 0u64;
        for i in indices {
            if i < 1 || i >= n {
                return Err(SymError::BadGenerator(i, n));
            }
            mask |= 1 << i;
        }
        Ok(SubsetJ { n, mask })
    }

    pub fn full(n: usize) -> Self {
        SubsetJ {
            n,
            mask: ((1u64 << n) - 1) & !1,
        }
    }

    pub fn empty(n: usize) -> Self {
        SubsetJ { n, mask: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i < self.n && self.mask & (1 << i) != 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n).filter(move |i| self.mask & (1 << i) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn intersect(&self, other: &SubsetJ) -> SubsetJ {
        assert_eq!(self.n, other.n);
        SubsetJ {
            n: self.n,
            mask: self.mask & other.mask,
        }
    }

    pub fn is_subset_of(&self, other: &SubsetJ) -> bool {
        self.mask & !other.mask == 0
    }

    /// Maximal intervals of letters glued by the generators in J; the Young
    /// subgroup W_J is the direct product of symmetric groups on these blocks.
    /// Blocks of size 1 are included, so the ranges partition 1..=n.
    pub fn blocks(&self) -> Vec<std::ops::RangeInclusive<usize>> {
        let mut out = Vec::new();
        let mut start = 1;
        for i in 1..=self.n {
            // letter i and i+1 glued iff generator i in J
            if i == self.n || !self.contains(i) {
                out.push(start..=i);
                start = i + 1;
            }
        }
        out
    }

    /// |W_J| as an exact integer.
    pub fn subgroup_order(&self) -> BigInt {
        let mut acc = BigInt::one();
        for b in self.blocks() {
            let size = b.end() - b.start() + 1;
            for k in 2..=size {
                acc *= BigInt::from(k);
            }
        }
        acc
    }

    /// Enumerates W_J (as elements of S_n), lexicographic in one-line form.
    pub fn subgroup_elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.n)];
        for b in self.blocks() {
            let (lo, hi) = (*b.start(), *b.end());
            if lo == hi {
                continue;
            }
            // all permutations of the block letters, embedded
            let block_perms = block_permutations(self.n, lo, hi);
            let mut next = Vec::with_capacity(out.len() * block_perms.len());
            for w in &out {
                for b in &block_perms {
                    next.push(w.compose(b));
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// Longest element w_J: reverses each block.
    pub fn longest_element(&self) -> Permutation {
        let mut v: Vec<u8> = (1..=self.n as u8).collect();
        for b in self.blocks() {
            v[(*b.start() - 1)..*b.end()].reverse();
        }
        Permutation::from_oneline(v).expect("valid")
    }

    /// The Poincare polynomial W_J(q^2) = sum over W_J of q^(2 l(w)).
    pub fn poincare(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for b in self.blocks() {
            let size = b.end() - b.start() + 1;
            for a in 2..=size {
                // 1 + q^2 + ... + q^(2(a-1))
                let factor = LaurentPoly::from_terms(
                    (0..a).map(|k| (2 * k as i64, BigInt::one())),
                );
                acc = &acc * &factor;
            }
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.indices().map(serde_json::Value::from).collect())
    }
}

fn block_permutations(n: usize, lo: usize, hi: usize) -> Vec<Permutation> {
    let letters: Vec<usize> = (lo..=hi).collect();
    let mut perms = Vec::new();
    let mut idx: Vec<usize> = (0..letters.len()).collect();
    loop {
        let mut v: Vec<u8> = (1..=n as u8).collect();
        for (slot, &which) in idx.iter().enumerate() {
            v[letters[slot] - 1] = letters[which] as u8;
        }
        perms.push(Permutation::from_oneline(v).expect("valid"));
        let k = idx.len();
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| idx[i] < idx[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| idx[j] > idx[i]).expect("exists");
        idx.swap(i, j);
        idx[i + 1..].reverse();
    }
    perms
}

impl fmt::Display for SubsetJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.indices()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::big;

    #[test]
    fn j_of_mu_removes_partial_sums() {
        let mu = Composition::new(vec![2, 2, 2]).unwrap();
        let j = mu.subset_j();
        assert_eq!(j.indices().collect::<Vec<_>>(), vec![1, 3, 5]);
        let mu2 = Composition::new(vec![2, 1, 1]).unwrap();
        assert_eq!(mu2.subset_j().indices().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn longest_elements() {
        // J = {1,3} in S_4 -> 2143
        let j = SubsetJ::new(4, vec![1, 3]).unwrap();
        assert_eq!(j.longest_element().to_string(), "2143");
        assert_eq!(j.longest_element().length(), 2);
        // full S_3 -> 321 of length 3
        let full = SubsetJ::full(3);
        assert_eq!(full.longest_element().to_string(), "321");
        assert_eq!(full.longest_element().length(), 3);
        // J(mu=(2,2,2)) in S_6 -> s1 s3 s5
        let j6 = Composition::new(vec![2, 2, 2]).unwrap().subset_j();
        let w = j6.longest_element();
        assert_eq!(w, Permutation::from_word(6, &[1, 3, 5]).unwrap());
    }

    #[test]
    fn poincare_polynomials() {
        assert!(SubsetJ::empty(4).poincare().is_one());
        // S_2: 1 + q^2
        let s2 = SubsetJ::full(2);
        assert_eq!(
            s2.poincare(),
            LaurentPoly::from_terms(vec![(0, big(1)), (2, big(1))])
        );
        // S_3 by brute force over its 6 elements
        let s3 = SubsetJ::full(3);
        let brute = Permutation::enumerate(3)
            .into_iter()
            .map(|w| LaurentPoly::q_pow(2 * w.length() as i64))
            .fold(LaurentPoly::zero(), |a, b| &a + &b);
        assert_eq!(s3.poincare(), brute);
    }

    #[test]
    fn poincare_divisibility() {
        // W_K(q^2) divides W_J(q^2) for every K inside J (all J in S_5).
        for jmask in 0u64..(1 << 4) {
            let j = SubsetJ::new(5, (1..5).filter(|i| jmask & (1 << (i - 1)) != 0)).unwrap();
            let pj = j.poincare();
            for kmask in 0u64..(1 << 4) {
                if kmask & !jmask != 0 {
                    continue;
                }
                let k = SubsetJ::new(5, (1..5).filter(|i| kmask & (1 << (i - 1)) != 0)).unwrap();
                assert!(
                    pj.exact_div(&k.poincare()).is_some(),
                    "W_K should divide W_J for K={} J={}",
                    k,
                    j
                );
            }
        }
    }

    #[test]
    fn subgroup_enumeration_matches_order() {
        let j = Composition::new(vec![2, 2, 2]).unwrap().subset_j();
        let elems = j.subgroup_elements();
        assert_eq!(BigInt::from(elems.len()), j.subgroup_order());
        assert_eq!(elems.len(), 8);
        // every element keeps blocks set-wise fixed
        for w in &elems {
            for b in j.blocks() {
                for i in b.clone() {
                    assert!(b.contains(&w.apply(i)));
                }
            }
        }
    }

    #[test]
    fn coset_predicates() {
        // identity is minimal everywhere
        let j = SubsetJ::new(4, vec![1, 3]).unwrap();
        let flags = Permutation::identity(4).coset_flags(&j);
        assert!(flags.in_xjj && flags.in_xj && flags.in_xj_inv);
        assert!(!flags.in_xtilde_jj);
        // w_J = s1 s3 has L = R = {1,3} = J, so it is maximal in its coset
        let wj = j.longest_element();
        assert!(wj.coset_flags(&j).in_xtilde_jj);
        // s_2 is a minimal double coset representative for J = {1,3}
        let s2 = Permutation::s(2, 4);
        assert!(s2.coset_flags(&j).in_xjj);
    }

    #[test]
    fn deodhar_closure_property() {
        // For x in X_J and s in J: either s x stays in X_J or s x = x t, t in J.
        for n in 2..=5 {
            for mu in Composition::enumerate(n) {
                let j = mu.subset_j();
                for w in Permutation::enumerate(n) {
                    if !w.coset_flags(&j).in_xj {
                        continue;
                    }
                    for s in j.indices() {
                        let sx = w.left_mul_s(s);
                        if sx.coset_flags(&j).in_xj {
                            continue;
                        }
                        let t = w.inverse().compose(&sx);
                        // t = x^{-1} s x must be a simple generator in J
                        let found = j.indices().any(|i| Permutation::s(i, n) == t);
                        assert!(found, "Deodhar fails at n={} mu={:?} w={} s={}", n, mu, w, s);
                    }
                }
            }
        }
    }
}
