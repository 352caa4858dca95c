use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::composition::SubsetJ;
use super::SymError;

/// A permutation of {1, ..., n} in one-line notation, with cached length
/// (inversion count) and descent sets.
///
/// Composition is right-to-left: `(w * v)(i) = w(v(i))`.
#[derive(Clone)]
pub struct Permutation {
    oneline: Vec<u8>,
    length: u32,
    rdesc: u64,
    ldesc: u64,
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.oneline == other.oneline
    }
}
impl Eq for Permutation {}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on one-line notation; the crate-wide enumeration order.
impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.oneline.cmp(&other.oneline)
    }
}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.oneline.hash(state);
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self::from_oneline((1..=n as u8).collect()).expect("identity is valid")
    }

    /// The simple transposition s_i = (i, i+1), 1-based.
    pub fn s(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i < n, "generator s_{} out of range for n={}", i, n);
        let mut v: Vec<u8> = (1..=n as u8).collect();
        v.swap(i - 1, i);
        Self::from_oneline(v).expect("adjacent transposition is valid")
    }

    pub fn from_oneline(oneline: Vec<u8>) -> Result<Self, SymError> {
        let n = oneline.len();
        if n == 0 || n > 64 {
            return Err(SymError::NotAPermutation(n));
        }
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            let v = v as usize;
            if v < 1 || v > n || seen[v] {
                return Err(SymError::NotAPermutation(n));
            }
            seen[v] = true;
        }
        let mut length = 0u32;
        for i in 0..n {
            for j in (i + 1)..n {
                if oneline[i] > oneline[j] {
                    length += 1;
                }
            }
        }
        let mut rdesc = 0u64;
        for i in 1..n {
            if oneline[i - 1] > oneline[i] {
                rdesc |= 1 << i;
            }
        }
        // Left descents are the right descents of the inverse: i is a left
        // descent iff i+1 appears before... precisely iff pos(i) > pos(i+1).
        let mut pos = vec![0usize; n + 1];
        for (idx, &v) in oneline.iter().enumerate() {
            pos[v as usize] = idx;
        }
        let mut ldesc = 0u64;
        for i in 1..n {
            if pos[i] > pos[i + 1] {
                ldesc |= 1 << i;
            }
        }
        Ok(Permutation {
            oneline,
            length,
            rdesc,
            ldesc,
        })
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[u8] {
        &self.oneline
    }

    /// Image of a point, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.oneline[i - 1] as usize
    }

    /// Coxeter length = inversion count.
    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Right descent set as indices i with w(i) > w(i+1).
    pub fn right_descents(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.rdesc;
        (1..self.n()).filter(move |i| mask & (1 << i) != 0)
    }

    pub fn left_descents(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.ldesc;
        (1..self.n()).filter(move |i| mask & (1 << i) != 0)
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        self.rdesc & (1 << i) != 0
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        self.ldesc & (1 << i) != 0
    }

    pub(crate) fn rdesc_mask(&self) -> u64 {
        self.rdesc
    }

    pub(crate) fn ldesc_mask(&self) -> u64 {
        self.ldesc
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn try_compose(&self, other: &Self) -> Result<Self, SymError> {
        if self.n() != other.n() {
            return Err(SymError::SizeMismatch(self.n(), other.n()));
        }
        let v: Vec<u8> = other
            .oneline
            .iter()
            .map(|&i| self.oneline[i as usize - 1])
            .collect();
        Self::from_oneline(v)
    }

    pub fn compose(&self, other: &Self) -> Self {
        self.try_compose(other).expect("rank mismatch in compose")
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0u8; self.n()];
        for (idx, &val) in self.oneline.iter().enumerate() {
            v[val as usize - 1] = idx as u8 + 1;
        }
        Self::from_oneline(v).expect("inverse is valid")
    }

    /// Left multiplication by s_i, i.e. s_i * w.
    pub fn left_mul_s(&self, i: usize) -> Self {
        let mut v = self.oneline.clone();
        for x in v.iter_mut() {
            if *x as usize == i {
                *x = i as u8 + 1;
            } else if *x as usize == i + 1 {
                *x = i as u8;
            }
        }
        Self::from_oneline(v).expect("valid")
    }

    /// Right multiplication by s_i, i.e. w * s_i.
    pub fn right_mul_s(&self, i: usize) -> Self {
        let mut v = self.oneline.clone();
        v.swap(i - 1, i);
        Self::from_oneline(v).expect("valid")
    }

    /// The deterministic reduced word: repeatedly extract the smallest left
    /// descent. The product s_{i_1} ... s_{i_r} re-evaluates to `self`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while !w.is_identity() {
            let i = w.left_descents().next().expect("non-identity has a descent");
            word.push(i);
            w = w.left_mul_s(i);
        }
        word
    }

    pub fn from_word(n: usize, word: &[usize]) -> Result<Self, SymError> {
        let mut w = Permutation::identity(n);
        for &i in word.iter().rev() {
            if i < 1 || i >= n {
                return Err(SymError::BadGenerator(i, n));
            }
            w = w.left_mul_s(i);
        }
        Ok(w)
    }

    /// Strong Bruhat order via the sorted-prefix (Ehresmann) criterion.
    pub fn try_bruhat_leq(&self, other: &Self) -> Result<bool, SymError> {
        if self.n() != other.n() {
            return Err(SymError::SizeMismatch(self.n(), other.n()));
        }
        if self.length > other.length {
            return Ok(false);
        }
        let n = self.n();
        let mut xs: Vec<u8> = Vec::with_capacity(n);
        let mut ys: Vec<u8> = Vec::with_capacity(n);
        for k in 0..n - 1 {
            let (a, b) = (self.oneline[k], other.oneline[k]);
            let xi = xs.partition_point(|&v| v < a);
            xs.insert(xi, a);
            let yi = ys.partition_point(|&v| v < b);
            ys.insert(yi, b);
            if xs.iter().zip(ys.iter()).any(|(x, y)| x > y) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn bruhat_leq(&self, other: &Self) -> bool {
        self.try_bruhat_leq(other).expect("rank mismatch in bruhat_leq")
    }

    /// All of S_n in lexicographic one-line order.
    pub fn enumerate(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut v: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation::from_oneline(v.clone()).expect("valid"));
            // next lexicographic permutation
            let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("exists");
            v.swap(i, j);
            v[i + 1..].reverse();
        }
        out
    }

    /// Coset-representative predicates for a parabolic subgroup, all read off
    /// the descent sets.
    pub fn coset_flags(&self, j: &SubsetJ) -> CosetFlags {
        let jm = j.mask();
        CosetFlags {
            in_xj: self.rdesc & jm == 0,
            in_xj_inv: self.ldesc & jm == 0,
            in_xjj: (self.rdesc | self.ldesc) & jm == 0,
            in_xtilde_j: self.rdesc & jm == jm,
            in_xtilde_j_inv: self.ldesc & jm == jm,
            in_xtilde_jj: (self.rdesc & self.ldesc) & jm == jm,
        }
    }

    /// Minimal double-coset representative: strips every J-descent on both
    /// sides. Also returns the stripped length `l(self) - l(rmin)`.
    pub fn strip_to_xjj(&self, j: &SubsetJ) -> (Permutation, usize) {
        let jm = j.mask();
        let mut w = self.clone();
        loop {
            if w.ldesc & jm != 0 {
                let i = (1..w.n()).find(|i| w.ldesc & jm & (1 << i) != 0).unwrap();
                w = w.left_mul_s(i);
            } else if w.rdesc & jm != 0 {
                let i = (1..w.n()).find(|i| w.rdesc & jm & (1 << i) != 0).unwrap();
                w = w.right_mul_s(i);
            } else {
                let diff = self.length() - w.length();
                return (w, diff);
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.oneline
                .iter()
                .map(|&v| serde_json::Value::from(v as u64))
                .collect(),
        )
    }
}

/// The six descent-characterised representative predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CosetFlags {
    /// Minimal in its left coset w W_J.
    pub in_xj: bool,
    /// Minimal in its right coset W_J w.
    pub in_xj_inv: bool,
    /// Minimal in its double coset W_J w W_J.
    pub in_xjj: bool,
    /// Maximal in its left coset.
    pub in_xtilde_j: bool,
    /// Maximal in its right coset.
    pub in_xtilde_j_inv: bool,
    /// Maximal in its double coset.
    pub in_xtilde_jj: bool,
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.oneline {
                write!(f, "{}", v)?;
            }
            Ok(())
        } else {
            write!(
                f,
                "[{}]",
                self.oneline
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
