use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;

use crate::coeffs::{LaurentPoly, RatFunc};
use crate::hecke::{HeckeElt, KlTable};
use crate::symgroup::{Composition, Permutation, SubsetJ};

use super::ParaError;

/// One double coset S_mu w S_mu, keyed by its minimal-length representative.
#[derive(Clone, Debug)]
pub struct DoubleCoset {
    /// Minimal-length representative (lies in X_JJ).
    pub rmin: Permutation,
    /// Maximal-length representative w_J w_L rmin w_J.
    pub rplus: Permutation,
    /// L = J intersected with rmin J rmin^-1.
    pub l_subset: SubsetJ,
    /// Cardinality |W_J|^2 / |W_L|.
    pub size: BigInt,
}

/// The double-coset combinatorics of one pair (n, mu), together with the
/// caches this crate shares across computaions: the Kazhdan-Lusztig table,
/// coset element lists and the explicit standard-basis forms e_J T_x e_J.
pub struct CosetSystem {
    mu: Composition,
    j: SubsetJ,
    n: usize,
    table: Arc<KlTable>,
    cosets: Vec<DoubleCoset>,
    by_rmin: BTreeMap<Permutation, usize>,
    by_rplus: BTreeMap<Permutation, usize>,
    poincare_j: LaurentPoly,
    elements_cache: Mutex<HashMap<usize, Arc<Vec<Permutation>>>>,
    efull_cache: Mutex<HashMap<usize, Arc<HeckeElt>>>,
    pub(super) dagger_cache: Mutex<HashMap<usize, Arc<super::ParaElt>>>,
    pub(super) plus_td_cache: Mutex<HashMap<usize, Arc<super::ParaElt>>>,
    pub(super) ec_dagger_cache: Mutex<HashMap<usize, Arc<BTreeMap<Permutation, LaurentPoly>>>>,
    pub(super) action_cache:
        Mutex<HashMap<(bool, usize, usize, bool), Arc<BTreeMap<usize, RatFunc>>>>,
}

impl CosetSystem {
    pub fn new(mu: Composition, table: Arc<KlTable>) -> Self {
        let n = mu.n();
        assert_eq!(n, table.n(), "table rank must match |mu|");
        let j = mu.subset_j();
        let wj = j.longest_element();
        let order_j = j.subgroup_order();

        let mut cosets = Vec::new();
        for w in Permutation::enumerate(n) {
            let flags = w.coset_flags(&j);
            if !flags.in_xjj {
                continue;
            }
            // L = J with rmin J rmin^-1: s_{x(i)} for i in J with
            // x(i+1) = x(i) + 1 and x(i) itself a generator index in J.
            let l_indices: Vec<usize> = j
                .indices()
                .filter(|&i| w.apply(i + 1) == w.apply(i) + 1 && j.contains(w.apply(i)))
                .map(|i| w.apply(i))
                .collect();
            let l_subset = SubsetJ::new(n, l_indices).expect("valid L");
            let wl = l_subset.longest_element();
            let rplus = wj.compose(&wl).compose(&w).compose(&wj);
            let size = &order_j * &order_j / l_subset.subgroup_order();
            cosets.push(DoubleCoset {
                rmin: w,
                rplus,
                l_subset,
                size,
            });
        }
        let by_rmin = cosets
            .iter()
            .enumerate()
            .map(|(i, d)| (d.rmin.clone(), i))
            .collect();
        let by_rplus = cosets
            .iter()
            .enumerate()
            .map(|(i, d)| (d.rplus.clone(), i))
            .collect();
        CosetSystem {
            poincare_j: j.poincare(),
            mu,
            j,
            n,
            table,
            cosets,
            by_rmin,
            by_rplus,
            elements_cache: Mutex::new(HashMap::new()),
            efull_cache: Mutex::new(HashMap::new()),
            dagger_cache: Mutex::new(HashMap::new()),
            plus_td_cache: Mutex::new(HashMap::new()),
            ec_dagger_cache: Mutex::new(HashMap::new()),
            action_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    pub fn j(&self) -> &SubsetJ {
        &self.j
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &KlTable {
        &self.table
    }

    pub fn table_arc(&self) -> Arc<KlTable> {
        self.table.clone()
    }

    /// All double cosets, ordered lexicographically by minimal representative.
    pub fn cosets(&self) -> &[DoubleCoset] {
        &self.cosets
    }

    pub fn num_cosets(&self) -> usize {
        self.cosets.len()
    }

    pub fn coset(&self, idx: usize) -> &DoubleCoset {
        &self.cosets[idx]
    }

    pub fn index_of_rmin(&self, rmin: &Permutation) -> Option<usize> {
        self.by_rmin.get(rmin).copied()
    }

    pub fn index_of_rplus(&self, rplus: &Permutation) -> Option<usize> {
        self.by_rplus.get(rplus).copied()
    }

    /// W_J(q^2).
    pub fn poincare_j(&self) -> &LaurentPoly {
        &self.poincare_j
    }

    /// Coset of an arbitrary permutation, with the unique additive-length
    /// factorisation w = w1 . rmin . w2 (w2 in W_J, w1 in X^J_L).
    pub fn coset_of(&self, w: &Permutation) -> (usize, Permutation, Permutation) {
        assert_eq!(w.n(), self.n);
        // Strip right J-descents to reach the minimal left-coset representative.
        let mut d = w.clone();
        let mut w2 = Permutation::identity(self.n);
        loop {
            let Some(i) = d.right_descents().find(|&i| self.j.contains(i)) else {
                break;
            };
            d = d.right_mul_s(i);
            w2 = Permutation::s(i, self.n).compose(&w2);
        }
        // Strip left J-descents from d to reach rmin; w1 is the quotient.
        let (rmin, _) = d.strip_to_xjj(&self.j);
        let idx = self.index_of_rmin(&rmin).expect("rmin is enumerated");
        let w1 = d.compose(&rmin.inverse());
        debug_assert_eq!(
            w1.length() + rmin.length() + w2.length(),
            w.length(),
            "factorisation must be length-additive"
        );
        debug_assert_eq!(w1.compose(&rmin).compose(&w2), *w);
        (idx, w1, w2)
    }

    /// The elements of a coset, enumerated through the factorisation
    /// {w1 rmin w2}. Equals the Bruhat interval [rmin, rplus].
    pub fn coset_elements(&self, idx: usize) -> Arc<Vec<Permutation>> {
        if let Some(v) = self.elements_cache.lock().unwrap().get(&idx) {
            return v.clone();
        }
        let d = &self.cosets[idx];
        let mut out = Vec::new();
        let x_jl: Vec<Permutation> = self
            .j
            .subgroup_elements()
            .into_iter()
            .filter(|u| u.right_descents().all(|i| !d.l_subset.contains(i)))
            .collect();
        for w1 in &x_jl {
            let w1x = w1.compose(&d.rmin);
            for w2 in self.j.subgroup_elements() {
                out.push(w1x.compose(&w2));
            }
        }
        out.sort();
        debug_assert_eq!(BigInt::from(out.len()), d.size);
        let arc = Arc::new(out);
        self.elements_cache
            .lock()
            .unwrap()
            .entry(idx)
            .or_insert_with(|| arc.clone())
            .clone()
    }

    /// The element e_J T_{rmin(D)} e_J of H(S_n) in explicit standard-basis
    /// form: (W_L(q^2)/W_J(q^2)^2) q^(l(r+)-l(r-)) times the sum of
    /// q^(l(w)-l(r+)) T_w over the coset.
    pub fn e_t_e_full(&self, idx: usize) -> Arc<HeckeElt> {
        if let Some(v) = self.efull_cache.lock().unwrap().get(&idx) {
            return v.clone();
        }
        let d = &self.cosets[idx];
        let wl_poincare = d.l_subset.poincare();
        let scalar = RatFunc::from_laurent(&wl_poincare)
            .checked_div(&RatFunc::from_laurent(&(&self.poincare_j * &self.poincare_j)))
            .expect("Poincare polynomials are nonzero")
            * RatFunc::q_pow(d.rplus.length() as i64 - d.rmin.length() as i64);
        let mut elt = HeckeElt::zero(self.n);
        let top = d.rplus.length() as i64;
        for w in self.coset_elements(idx).iter() {
            elt.add_term(w.clone(), RatFunc::q_pow(w.length() as i64 - top) * scalar.clone());
        }
        let arc = Arc::new(elt);
        self.efull_cache
            .lock()
            .unwrap()
            .entry(idx)
            .or_insert_with(|| arc.clone())
            .clone()
    }

    /// The conversion scalar of the standard basis: T_D equals this times
    /// e_J T_{rmin} e_J.
    pub fn td_scalar(&self, idx: usize) -> RatFunc {
        let d = &self.cosets[idx];
        RatFunc::from_laurent(&(&self.poincare_j * &self.poincare_j))
            .checked_div(&RatFunc::from_laurent(&d.l_subset.poincare()))
            .expect("nonzero")
            * RatFunc::q_pow(d.rmin.length() as i64 - d.rplus.length() as i64)
    }

    /// Index lookup that insists on a minimal representative.
    pub fn require_rmin(&self, w: &Permutation) -> Result<usize, ParaError> {
        self.index_of_rmin(w).ok_or(ParaError::NotMinimalRep)
    }
}
