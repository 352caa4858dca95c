use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coeffs::{LaurentPoly, RatFunc};
use crate::hecke::{CellSide, Cells, KlBasis, KlTable};
use crate::symgroup::Permutation;
use crate::tableaux::{rsk_of_max_rep, rsk_of_min_rep};

use super::coset::CosetSystem;

/// Sparse vector in the C- or C-dagger-coordinates of H(S_n). Coefficients
/// stay in Z[q, q^-1] throughout the sweeps; the 1/W_J(q^2) factors of the
/// idempotents are tracked separately by the callers.
type KlVec = BTreeMap<Permutation, LaurentPoly>;

fn klvec_add(acc: &mut KlVec, key: Permutation, val: LaurentPoly) {
    if val.is_zero() {
        return;
    }
    match acc.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(val);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = &*e.get() + &val;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Left multiplication by T_s in Kazhdan-Lusztig coordinates.
///
/// For the C basis: T_s C_w = q C_w when s descends w, and otherwise
/// C_{sw} - q^-1 C_w + sum of mu(z,w) C_z over z with s in their left
/// descent. The dagger basis mirrors this with q <-> -q^-1 and a sign on
/// the off-diagonal terms.
fn klvec_left_gen(table: &KlTable, basis: KlBasis, s: usize, v: &KlVec) -> KlVec {
    let mut out = KlVec::new();
    for (w, y) in v {
        if w.has_left_descent(s) {
            match basis {
                KlBasis::C => klvec_add(&mut out, w.clone(), y.shifted(1)),
                KlBasis::CDagger => klvec_add(&mut out, w.clone(), -y.shifted(-1)),
            }
        } else {
            let sw = w.left_mul_s(s);
            match basis {
                KlBasis::C => {
                    klvec_add(&mut out, sw, y.clone());
                    klvec_add(&mut out, w.clone(), -y.shifted(-1));
                }
                KlBasis::CDagger => {
                    klvec_add(&mut out, sw, -y.clone());
                    klvec_add(&mut out, w.clone(), y.shifted(1));
                }
            }
            for (z, m) in table.mu_row(w).iter() {
                if !z.has_left_descent(s) {
                    continue;
                }
                let c = y.scale(m);
                match basis {
                    KlBasis::C => klvec_add(&mut out, z.clone(), c),
                    KlBasis::CDagger => klvec_add(&mut out, z.clone(), -c),
                }
            }
        }
    }
    out
}

/// Right multiplication by T_s in Kazhdan-Lusztig coordinates.
fn klvec_right_gen(table: &KlTable, basis: KlBasis, s: usize, v: &KlVec) -> KlVec {
    let mut out = KlVec::new();
    for (w, y) in v {
        if w.has_right_descent(s) {
            match basis {
                KlBasis::C => klvec_add(&mut out, w.clone(), y.shifted(1)),
                KlBasis::CDagger => klvec_add(&mut out, w.clone(), -y.shifted(-1)),
            }
        } else {
            let ws = w.right_mul_s(s);
            match basis {
                KlBasis::C => {
                    klvec_add(&mut out, ws, y.clone());
                    klvec_add(&mut out, w.clone(), -y.shifted(-1));
                }
                KlBasis::CDagger => {
                    klvec_add(&mut out, ws, -y.clone());
                    klvec_add(&mut out, w.clone(), y.shifted(1));
                }
            }
            for (z, m) in table.mu_row(w).iter() {
                if !z.has_right_descent(s) {
                    continue;
                }
                let c = y.scale(m);
                match basis {
                    KlBasis::C => klvec_add(&mut out, z.clone(), c),
                    KlBasis::CDagger => klvec_add(&mut out, z.clone(), -c),
                }
            }
        }
    }
    out
}

/// T_x acting on the left: generators of a reduced word applied innermost
/// first.
fn klvec_left_word(table: &KlTable, basis: KlBasis, x: &Permutation, v: &KlVec) -> KlVec {
    let mut acc = v.clone();
    for s in x.reduced_word().into_iter().rev() {
        acc = klvec_left_gen(table, basis, s, &acc);
    }
    acc
}

fn klvec_right_word(table: &KlTable, basis: KlBasis, x: &Permutation, v: &KlVec) -> KlVec {
    let mut acc = v.clone();
    for s in x.reduced_word() {
        acc = klvec_right_gen(table, basis, s, &acc);
    }
    acc
}

/// W_J(q^2) e_J acting on the left: the sum over u in W_J of q^l(u) T_u.
/// The caller owes a factor 1/W_J(q^2).
fn klvec_e_left_unnormalised(system: &CosetSystem, basis: KlBasis, v: &KlVec) -> KlVec {
    let table = system.table();
    let mut acc = KlVec::new();
    for u in system.j().subgroup_elements() {
        let part = klvec_left_word(table, basis, &u, v);
        let shift = u.length() as i64;
        for (k, c) in part {
            klvec_add(&mut acc, k, c.shifted(shift));
        }
    }
    acc
}

fn klvec_e_right_unnormalised(system: &CosetSystem, basis: KlBasis, v: &KlVec) -> KlVec {
    let table = system.table();
    let mut acc = KlVec::new();
    for u in system.j().subgroup_elements() {
        let part = klvec_right_word(table, basis, &u, v);
        let shift = u.length() as i64;
        for (k, c) in part {
            klvec_add(&mut acc, k, c.shifted(shift));
        }
    }
    acc
}

impl CosetSystem {
    /// W_J(q^2)^2 e_J C-dagger_{rmin(D)} e_J in dagger coordinates, cached.
    fn ec_dagger_unnormalised(&self, idx: usize) -> Arc<KlVec> {
        if let Some(v) = self.ec_dagger_cache.lock().unwrap().get(&idx) {
            return v.clone();
        }
        let mut unit = KlVec::new();
        unit.insert(self.coset(idx).rmin.clone(), LaurentPoly::one());
        let v = klvec_e_left_unnormalised(self, KlBasis::CDagger, &unit);
        let v = klvec_e_right_unnormalised(self, KlBasis::CDagger, &v);
        let arc = Arc::new(v);
        self.ec_dagger_cache
            .lock()
            .unwrap()
            .entry(idx)
            .or_insert_with(|| arc.clone())
            .clone()
    }

    /// Coefficients of m_M B_D (or B_D m_M) in the chosen parabolic KL
    /// basis, where m_M = e_J T_{rmin(M)} e_J is the spanning-set multiplier.
    pub fn kl_action(
        &self,
        basis: KlBasis,
        multiplier: usize,
        target: usize,
        left: bool,
    ) -> Arc<BTreeMap<usize, RatFunc>> {
        let key = (basis == KlBasis::C, multiplier, target, left);
        if let Some(v) = self.action_cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let out = self.kl_action_uncached(basis, multiplier, target, left);
        let arc = Arc::new(out);
        self.action_cache
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| arc.clone())
            .clone()
    }

    fn kl_action_uncached(
        &self,
        basis: KlBasis,
        multiplier: usize,
        target: usize,
        left: bool,
    ) -> BTreeMap<usize, RatFunc> {
        let table = self.table();
        let x = &self.coset(multiplier).rmin;
        let poincare = RatFunc::from_laurent(self.poincare_j());
        match basis {
            KlBasis::CDagger => {
                // m B_D = e (T_x (e C+_{rmin} e)) e; the final two-sided
                // sandwich in dagger coordinates keeps exactly the X_JJ keys.
                let ec = self.ec_dagger_unnormalised(target);
                let moved = if left {
                    klvec_left_word(table, KlBasis::CDagger, x, &ec)
                } else {
                    klvec_right_word(table, KlBasis::CDagger, x, &ec)
                };
                let scalar = (&poincare * &poincare).inverse().expect("nonzero");
                let mut out = BTreeMap::new();
                for (w, c) in moved {
                    if let Some(i) = self.index_of_rmin(&w) {
                        out.insert(i, &RatFunc::from_laurent(&c) * &scalar);
                    }
                }
                out
            }
            KlBasis::C => {
                // m C_{r+} = e (T_x C_{r+}); the result lies in H^mu, so its
                // C-coordinates are supported on maximal representatives.
                let mut unit = KlVec::new();
                unit.insert(self.coset(target).rplus.clone(), LaurentPoly::one());
                let moved = if left {
                    let y = klvec_left_word(table, KlBasis::C, x, &unit);
                    klvec_e_left_unnormalised(self, KlBasis::C, &y)
                } else {
                    let y = klvec_right_word(table, KlBasis::C, x, &unit);
                    klvec_e_right_unnormalised(self, KlBasis::C, &y)
                };
                let scalar = poincare.inverse().expect("nonzero");
                let mut out = BTreeMap::new();
                for (w, c) in moved {
                    match self.index_of_rplus(&w) {
                        Some(i) => {
                            out.insert(i, &RatFunc::from_laurent(&c) * &scalar);
                        }
                        None => panic!(
                            "projection left a C-coordinate outside the maximal reps at {}",
                            w
                        ),
                    }
                }
                out
            }
        }
    }
}

/// Cells of the double-coset set computed algebraically: arrows come from
/// multiplication by the full spanning set {e_J T_{rmin(D)} e_J}.
pub fn para_cells(system: &CosetSystem, basis: KlBasis, side: CellSide) -> Cells<usize> {
    let n = system.num_cosets();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for target in 0..n {
        let mut hits: Vec<usize> = Vec::new();
        for m in 0..n {
            if side != CellSide::Right {
                hits.extend(system.kl_action(basis, m, target, true).keys().copied());
            }
            if side != CellSide::Left {
                hits.extend(system.kl_action(basis, m, target, false).keys().copied());
            }
        }
        hits.sort_unstable();
        hits.dedup();
        succ[target] = hits;
    }
    Cells::from_arrows((0..n).collect(), |i| succ[i].clone())
}

/// RSK-predicted cells: group by recording tableau (left), insertion tableau
/// (right), or shape (two-sided), using the correspondence matching the
/// basis.
pub fn predicted_cells(system: &CosetSystem, basis: KlBasis, side: CellSide) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for idx in 0..system.num_cosets() {
        let d = system.coset(idx);
        let (p, q) = match basis {
            KlBasis::CDagger => rsk_of_min_rep(&d.rmin, system.mu()),
            KlBasis::C => rsk_of_max_rep(&d.rplus, system.mu()),
        };
        let key = match side {
            CellSide::Left => format!("Q:{}", q),
            CellSide::Right => format!("P:{}", p),
            CellSide::TwoSided => format!("sh:{}", p.shape()),
        };
        groups.entry(key).or_default().push(idx);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    for g in &mut out {
        g.sort_unstable();
    }
    out.sort();
    out
}

/// A cell module: the action of every spanning-set multiplier on the cell
/// basis, modulo the strictly-lower ideal of the cell preorder.
pub struct CellModule {
    /// Coset indices of the cell basis, in enumeration order.
    pub basis: Vec<usize>,
    /// For each multiplier coset index: the matrix [c_{i,j}] with
    /// m B_{basis[j]} = sum_i c_{i,j} B_{basis[i]} modulo lower terms.
    pub matrices: Vec<Vec<Vec<RatFunc>>>,
}

impl CellModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Left cell module for a cell of `para_cells(.., side = Left)`.
pub fn cell_module(
    system: &CosetSystem,
    basis: KlBasis,
    cells: &Cells<usize>,
    cell: usize,
) -> CellModule {
    let members: Vec<usize> = cells.cell_members(cell);
    let pos: BTreeMap<usize, usize> = members.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let dim = members.len();
    let mut matrices = Vec::with_capacity(system.num_cosets());
    for m in 0..system.num_cosets() {
        let mut mat = vec![vec![RatFunc::zero(); dim]; dim];
        for (j, &d) in members.iter().enumerate() {
            let act = system.kl_action(basis, m, d, true);
            for (&target, c) in act.iter() {
                if let Some(&i) = pos.get(&target) {
                    mat[i][j] = c.clone();
                } else {
                    // everything else must fall strictly below the cell
                    let tc = cells.cell_of_index(target);
                    assert!(
                        cells.leq(tc, cell) && tc != cell,
                        "action leaves the lower ideal: coset {} from cell {}",
                        target,
                        cell
                    );
                }
            }
        }
        matrices.push(mat);
    }
    CellModule {
        basis: members,
        matrices,
    }
}
