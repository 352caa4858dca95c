use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coeffs::{CoeffError, RatFunc};
use crate::linalg::{Echelon, RationalEchelon, SparseVec};
use crate::parahecke::{CosetSystem, ParaBasis, ParaElt};
use crate::symgroup::{Composition, Permutation};
use crate::tableaux::{mu_ord, shape_of, Partition};

use super::generators::{tilde_w_hook, x_element, y_element};
use super::KernelError;

/// Instance data of one kernel: the composition, the row bound N, and the
/// hook partition that cuts out the kernel shapes.
#[derive(Debug, Clone)]
pub struct KernelSpec {
    pub mu: Composition,
    pub n_rows: usize,
    pub hook: Partition,
}

impl KernelSpec {
    pub fn new(mu: Composition, n_rows: usize) -> Result<Self, KernelError> {
        let d = mu.d();
        if d <= n_rows {
            return Err(KernelError::EmptyKernel { d, n: n_rows });
        }
        let hook =
            Partition::hook(n_rows + 1, mu.n()).expect("d > N forces n >= N + 1");
        debug_assert!(hook.dominates(&mu_ord(&mu)));
        Ok(KernelSpec { mu, n_rows, hook })
    }
}

/// Coset indices of the kernel basis: all dagger basis elements whose shape
/// has strictly more than N rows, equivalently lies below the hook.
pub fn ideal_basis(system: &CosetSystem, n_rows: usize) -> Vec<usize> {
    let out: Vec<usize> = (0..system.num_cosets())
        .filter(|&idx| {
            let shape = shape_of(&system.coset(idx).rmin);
            let below = shape.rows() > n_rows;
            debug_assert_eq!(
                below,
                Partition::hook(n_rows + 1, system.n())
                    .map_or(false, |h| h.dominates(&shape))
            );
            below
        })
        .collect();
    out
}

/// How generation ranks are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMode {
    /// Exact echelon over Q(q).
    Exact,
    /// Evaluation at three rational points with exact spot confirmation.
    Eval,
    /// Exact when the coset count is at most 60, else evaluation.
    Auto,
}

/// Result of the conjecture battery on one (mu, N) instance.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub mu: Composition,
    pub n_rows: usize,
    pub ideal_dim: usize,
    pub xy_equal: bool,
    pub bar_invariant_x: bool,
    pub x_in_ideal: bool,
    pub x_generates: bool,
    pub y_generates: bool,
    pub rank_mode: &'static str,
    pub elapsed_ms: u128,
    /// Filled only when the centrality probe was requested.
    pub centrality_observed: Option<bool>,
}

impl ConjectureReport {
    /// Every property the paper proves or the artifact guarantees holds.
    pub fn all_verified(&self) -> bool {
        self.xy_equal
            && self.bar_invariant_x
            && self.x_in_ideal
            && self.x_generates
            && self.y_generates
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        m.insert("mu".into(), self.mu.to_json());
        m.insert("N".into(), serde_json::Value::from(self.n_rows as u64));
        m.insert(
            "idealDim".into(),
            serde_json::Value::from(self.ideal_dim as u64),
        );
        m.insert("xyEqual".into(), serde_json::Value::Bool(self.xy_equal));
        m.insert(
            "barInvariantX".into(),
            serde_json::Value::Bool(self.bar_invariant_x),
        );
        m.insert(
            "xGenerates".into(),
            serde_json::Value::Bool(self.x_generates),
        );
        m.insert(
            "yGenerates".into(),
            serde_json::Value::Bool(self.y_generates),
        );
        m.insert(
            "rankMode".into(),
            serde_json::Value::String(self.rank_mode.into()),
        );
        m.insert(
            "elapsedMs".into(),
            serde_json::Value::from(self.elapsed_ms as u64),
        );
        if let Some(c) = self.centrality_observed {
            m.insert("centralityObserved".into(), serde_json::Value::Bool(c));
        }
        serde_json::Value::Object(m)
    }
}

/// Runs the full battery on one instance with d = N+1: computes X and Y,
/// compares them in the dagger Kazhdan-Lusztig basis, checks bar-invariance
/// of X, membership of X in the kernel span, and whether each generates the
/// kernel as a two-sided ideal (sandwiching with the full spanning set).
pub fn check_conjectures(
    system: &CosetSystem,
    n_rows: usize,
    mode: RankMode,
    seed: u64,
    probe_centrality: bool,
) -> Result<ConjectureReport, KernelError> {
    let start = Instant::now();
    let d = system.mu().d();
    if d != n_rows + 1 {
        return Err(KernelError::WrongDepth { d, n: n_rows });
    }
    let ideal = ideal_basis(system, n_rows);
    let ideal_dim = ideal.len();

    let y = y_element(system, n_rows)?;
    let x = x_element(system, n_rows)?;

    // Exact comparison in the dagger basis: Y is the hook basis element.
    let x_dagger = system.from_tmin(&x, ParaBasis::KLDagger);
    let hook_rep = tilde_w_hook(system.mu(), n_rows)?;
    let mut y_dagger = ParaElt::zero(system.mu().clone(), ParaBasis::KLDagger);
    y_dagger.add_term(hook_rep, RatFunc::one());
    let xy_equal = x_dagger == y_dagger;
    debug_assert_eq!(xy_equal, x == y);

    let bar_invariant_x = x.bar(system) == x;

    // Exact kernel span in TMin coordinates.
    let mut ideal_echelon: Echelon<Permutation> = Echelon::new();
    for &idx in &ideal {
        let v = para_to_vec(&system.kl_basis_dagger(idx));
        let fresh = ideal_echelon.insert(v);
        assert!(fresh, "dagger basis elements are independent");
    }
    let x_in_ideal = ideal_echelon.contains(para_to_vec(&x));

    let effective = match mode {
        RankMode::Exact => RankMode::Exact,
        RankMode::Eval => RankMode::Eval,
        RankMode::Auto => {
            if system.num_cosets() <= 60 {
                RankMode::Exact
            } else {
                RankMode::Eval
            }
        }
    };

    let y_generates = generates(system, &y, ideal_dim, &ideal_echelon, effective, seed)?;
    let x_generates = if xy_equal {
        y_generates
    } else {
        generates(system, &x, ideal_dim, &ideal_echelon, effective, seed)?
    };

    let centrality_observed = if probe_centrality {
        Some(super::centrality_probe(system, &x))
    } else {
        None
    };

    Ok(ConjectureReport {
        mu: system.mu().clone(),
        n_rows,
        ideal_dim,
        xy_equal,
        bar_invariant_x,
        x_in_ideal,
        x_generates,
        y_generates,
        rank_mode: match effective {
            RankMode::Exact => "exact",
            RankMode::Eval => "eval",
            RankMode::Auto => unreachable!(),
        },
        elapsed_ms: start.elapsed().as_millis(),
        centrality_observed,
    })
}

fn para_to_vec(elt: &ParaElt) -> SparseVec<Permutation> {
    elt.terms().map(|(k, c)| (k.clone(), c.clone())).collect()
}

/// Does span{ m_u z m_v } over the full spanning set reach the whole kernel?
/// The span is automatically a two-sided ideal (the multipliers span the
/// algebra), so its rank against the kernel dimension decides generation.
/// Pairs are swept in increasing length order with early exit.
fn generates(
    system: &CosetSystem,
    z: &ParaElt,
    ideal_dim: usize,
    ideal_echelon: &Echelon<Permutation>,
    mode: RankMode,
    seed: u64,
) -> Result<bool, KernelError> {
    if ideal_dim == 0 {
        return Ok(z.is_zero());
    }
    let n_cosets = system.num_cosets();
    let mut order: Vec<usize> = (0..n_cosets).collect();
    order.sort_by_key(|&i| system.coset(i).rmin.length());

    match mode {
        RankMode::Exact | RankMode::Auto => {
            let mut rank: Echelon<Permutation> = Echelon::new();
            let z_full = z.full_form(system);
            for &v in &order {
                // G_v = z * m_v, then its full form feeds the u sweep.
                let gv =
                    ParaElt::project(system, &z_full.right_mul_t(&system.coset(v).rmin));
                if gv.is_zero() {
                    continue;
                }
                let gv_full = gv.full_form(system);
                for &u in &order {
                    let prod = ParaElt::project(
                        system,
                        &gv_full.left_mul_t(&system.coset(u).rmin),
                    );
                    let vec = para_to_vec(&prod);
                    assert!(
                        ideal_echelon.contains(vec.clone()),
                        "sandwiched product escaped the kernel span"
                    );
                    rank.insert(vec);
                    if rank.rank() == ideal_dim {
                        return Ok(true);
                    }
                }
            }
            Ok(false)
        }
        RankMode::Eval => {
            let points = eval_points(system, seed, 3)?;
            let mut echelons: Vec<RationalEchelon<Permutation>> =
                points.iter().map(|_| RationalEchelon::new()).collect();
            let z_full = z.full_form(system);
            let mut confirmed = 0usize;
            for &v in &order {
                let gv =
                    ParaElt::project(system, &z_full.right_mul_t(&system.coset(v).rmin));
                if gv.is_zero() {
                    continue;
                }
                let gv_full = gv.full_form(system);
                for &u in &order {
                    let prod = ParaElt::project(
                        system,
                        &gv_full.left_mul_t(&system.coset(u).rmin),
                    );
                    // exact confirmation on a subsample of products
                    if confirmed < 3 {
                        assert!(
                            ideal_echelon.contains(para_to_vec(&prod)),
                            "sandwiched product escaped the kernel span"
                        );
                        confirmed += 1;
                    }
                    for (ech, point) in echelons.iter_mut().zip(points.iter()) {
                        let vec = eval_vec(&prod, point)?;
                        ech.insert(vec);
                    }
                    let ranks: Vec<usize> = echelons.iter().map(|e| e.rank()).collect();
                    if ranks.iter().all(|&r| r == ideal_dim) {
                        return Ok(true);
                    }
                }
            }
            let ranks: Vec<usize> = echelons.iter().map(|e| e.rank()).collect();
            if ranks.windows(2).any(|w| w[0] != w[1]) {
                return Err(KernelError::InconsistentRanks);
            }
            Ok(false)
        }
    }
}

fn eval_vec(
    elt: &ParaElt,
    point: &BigRational,
) -> Result<BTreeMap<Permutation, BigRational>, KernelError> {
    let mut out = BTreeMap::new();
    for (k, c) in elt.terms() {
        match c.eval(point) {
            Ok(v) => {
                out.insert(k.clone(), v);
            }
            Err(CoeffError::Pole) => return Err(KernelError::InconsistentRanks),
            Err(_) => unreachable!(),
        }
    }
    Ok(out)
}

/// Evaluation points: the three fixed rationals 7/3, 11/5, 13/7, then
/// seeded resampling. Candidates where q^2 would be a root of unity of
/// order 2..n are rejected (over the rationals only q = 0 and the poles of
/// the coefficient denominators matter, but the guard documents the
/// semisimplicity assumption).
fn eval_points(
    system: &CosetSystem,
    seed: u64,
    count: usize,
) -> Result<Vec<BigRational>, KernelError> {
    let fixed = [(7i64, 3i64), (11, 5), (13, 7)];
    let mut state = seed | 1;
    let mut out = Vec::new();
    let mut k = 0usize;
    while out.len() < count {
        let (num, den) = if k < fixed.len() {
            fixed[k]
        } else {
            // xorshift for reproducible resampling
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let num = (state % 83) as i64 + 2;
            let den = ((state >> 16) % 79) as i64 + 3;
            (num, den)
        };
        k += 1;
        let point = BigRational::new(BigInt::from(num), BigInt::from(den));
        if point_admissible(system.n(), &point) {
            out.push(point);
        }
    }
    Ok(out)
}

/// q is admissible when q^2 is not a root of unity of order 2..n; for a
/// rational q this only excludes q = 0 (q^2 = 1 has order 1 and is allowed).
fn point_admissible(n: usize, q: &BigRational) -> bool {
    use num_traits::{One, Zero};
    if q.is_zero() {
        return false;
    }
    let q2 = q * q;
    if q2.is_one() {
        return true;
    }
    let mut power = q2.clone();
    for _ in 2..=n {
        power *= &q2;
        if power.is_one() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::hecke::KlTable;
    use crate::tableaux::kostka;

    fn system(parts: &[usize]) -> CosetSystem {
        let mu = Composition::new(parts.to_vec()).unwrap();
        let n = mu.n();
        CosetSystem::new(mu, Arc::new(KlTable::new(n)))
    }

    #[test]
    fn ideal_dimensions() {
        // mu=(2,2,2), N=2: shapes (4,1,1),(3,2,1),(2,2,2) with Kostka 1,2,1
        let sys = system(&[2, 2, 2]);
        let basis = ideal_basis(&sys, 2);
        assert_eq!(basis.len(), 6);
        // mu=(2,1,1), N=2: only (2,1,1) contributes
        let sys2 = system(&[2, 1, 1]);
        assert_eq!(ideal_basis(&sys2, 2).len(), 1);
        // N >= d: empty
        assert_eq!(ideal_basis(&sys2, 3).len(), 0);
        // mu=(2,2), N=1: shapes (3,1),(2,2) with Kostka 1,1
        let sys3 = system(&[2, 2]);
        assert_eq!(ideal_basis(&sys3, 1).len(), 2);
    }

    #[test]
    fn ideal_dim_matches_kostka_sum() {
        for parts in [vec![2, 2], vec![2, 1, 1], vec![1, 2, 1], vec![2, 2, 1]] {
            let sys = system(&parts);
            let mu = sys.mu().clone();
            for n_rows in 1..mu.d() {
                let by_filter = ideal_basis(&sys, n_rows).len();
                let hook = Partition::hook(n_rows + 1, mu.n()).unwrap();
                let by_kostka: usize = Partition::enumerate(mu.n())
                    .iter()
                    .filter(|l| hook.dominates(l))
                    .map(|l| {
                        let k = kostka(l, &mu);
                        k * k
                    })
                    .sum();
                assert_eq!(by_filter, by_kostka, "mu={:?} N={}", parts, n_rows);
            }
        }
    }

    #[test]
    fn kernel_spec_validation() {
        let mu = Composition::new(vec![2, 2]).unwrap();
        assert!(KernelSpec::new(mu.clone(), 1).is_ok());
        assert!(matches!(
            KernelSpec::new(mu, 2),
            Err(KernelError::EmptyKernel { .. })
        ));
    }

    #[test]
    fn conjecture_battery_small_instances() {
        for (parts, n_rows, dim) in [
            (vec![2, 2], 1, 2usize),
            (vec![3, 1], 1, 1),
            (vec![1, 2, 1], 2, 1),
            (vec![2, 1, 1], 2, 1),
        ] {
            let sys = system(&parts);
            let report = check_conjectures(&sys, n_rows, RankMode::Exact, 0, true).unwrap();
            assert_eq!(report.ideal_dim, dim, "mu={:?}", parts);
            assert!(report.all_verified(), "mu={:?}: {:?}", parts, report);
            assert_eq!(report.rank_mode, "exact");
        }
    }

    #[test]
    fn eval_mode_agrees_with_exact() {
        let sys = system(&[2, 2]);
        let exact = check_conjectures(&sys, 1, RankMode::Exact, 7, false).unwrap();
        let eval = check_conjectures(&sys, 1, RankMode::Eval, 7, false).unwrap();
        assert_eq!(exact.x_generates, eval.x_generates);
        assert_eq!(exact.y_generates, eval.y_generates);
        assert_eq!(eval.rank_mode, "eval");
    }

    #[test]
    fn wrong_depth_is_rejected() {
        let sys = system(&[2, 2, 2]);
        assert!(matches!(
            check_conjectures(&sys, 1, RankMode::Exact, 0, false),
            Err(KernelError::WrongDepth { .. })
        ));
    }

    #[test]
    fn admissible_points() {
        use num_traits::Zero;
        assert!(!point_admissible(4, &BigRational::zero()));
        assert!(point_admissible(4, &BigRational::new(1.into(), 1.into())));
        assert!(point_admissible(6, &BigRational::new(7.into(), 3.into())));
    }
}
