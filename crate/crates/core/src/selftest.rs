//! Replays every example in this crate's verification corpus that is pinned
//! to a published table or formula, and reports one pass/fail line each.
//! The CLI `selftest` command prints the lines and exits nonzero on any
//! mismatch.

use std::sync::Arc;

use crate::coeffs::{big, LaurentPoly, RatFunc};
use crate::hecke::{
    q_antisymmetriser, q_symmetriser, sn_cells, CellSide, HeckeElt, KlBasis, KlTable,
};
use crate::parahecke::{cell_module, para_cells, predicted_cells, CosetSystem, ParaElt};
use crate::schurweyl::{check_conjectures, tilde_w_hook, tilde_w_mu, x_element, RankMode};
use crate::symgroup::{Composition, Permutation, SubsetJ};
use crate::tableaux::{
    kostka, rs, rsk_of_max_rep, rsk_of_min_rep, shape_of, Partition, SemiStdTableau, StdTableau,
};

/// One replayed example.
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(out: &mut Vec<CheckResult>, name: &'static str, pass: bool, detail: String) {
    out.push(CheckResult { name, pass, detail });
}

fn lp(pairs: &[(i64, i64)]) -> RatFunc {
    RatFunc::from_laurent(&LaurentPoly::from_terms(
        pairs.iter().map(|&(e, c)| (e, big(c))),
    ))
}

fn word(n: usize, w: &[usize]) -> Permutation {
    Permutation::from_word(n, w).expect("valid word")
}

fn mu(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("valid composition")
}

fn system(parts: &[usize]) -> CosetSystem {
    let m = mu(parts);
    let n = m.n();
    CosetSystem::new(m, Arc::new(KlTable::new(n)))
}

/// Runs the whole battery. Every entry must pass.
pub fn run() -> Vec<CheckResult> {
    let mut out = Vec::new();

    // --- coefficient ring -------------------------------------------------
    check(
        &mut out,
        "bar of q^-1+q^-3 is q+q^3",
        lp(&[(-1, 1), (-3, 1)]).bar() == lp(&[(1, 1), (3, 1)]),
        String::new(),
    );

    // --- symmetric group --------------------------------------------------
    {
        let s1 = Permutation::s(1, 3);
        let s2 = Permutation::s(2, 3);
        check(
            &mut out,
            "s1 s2 has one-line 231",
            s1.compose(&s2).to_string() == "231",
            s1.compose(&s2).to_string(),
        );
        let x = word(4, &[1, 3]);
        let y = word(4, &[1, 2, 3, 2, 1]);
        check(&mut out, "s1s3 <= s1s2s3s2s1 in S_4", x.bruhat_leq(&y), String::new());
        let j = SubsetJ::new(4, vec![1, 3]).unwrap();
        check(
            &mut out,
            "s2 is a minimal double coset representative for J={1,3}",
            Permutation::s(2, 4).coset_flags(&j).in_xjj,
            String::new(),
        );
        let j6 = mu(&[2, 2, 2]).subset_j();
        check(
            &mut out,
            "longest element of S_2xS_2xS_2 is s1s3s5",
            j6.longest_element() == word(6, &[1, 3, 5]),
            j6.longest_element().to_string(),
        );
        let w3 = Permutation::from_oneline(vec![1, 5, 3, 4, 2, 6]).unwrap();
        check(
            &mut out,
            "153426 has a reduced word of length 5 multiplying back",
            w3.reduced_word().len() == 5
                && Permutation::from_word(6, &w3.reduced_word()).unwrap() == w3,
            String::new(),
        );
    }

    // --- Hecke algebra ----------------------------------------------------
    {
        let t1 = HeckeElt::t(Permutation::s(1, 2));
        let hook = RatFunc::q_pow(1) - RatFunc::q_pow(-1);
        let expect = t1.scale(&hook).add(&HeckeElt::one(2));
        check(&mut out, "T_s^2 = (q-q^-1)T_s + 1", t1.mul(&t1) == expect, String::new());

        let table4 = KlTable::new(4);
        let p = table4.p(&word(4, &[1, 3]), &word(4, &[1, 2, 3, 2, 1]));
        check(
            &mut out,
            "p_{s1s3, s1s2s3s2s1} = q^-1 + q^-3",
            p == LaurentPoly::from_terms(vec![(-1, big(1)), (-3, big(1))]),
            p.to_string(),
        );

        let table2 = KlTable::new(2);
        let cd = table2.cdagger_elt(&Permutation::s(1, 2));
        check(
            &mut out,
            "C-dagger_s = -T_s + q",
            cd.coeff(&Permutation::s(1, 2)) == RatFunc::from_int(-1)
                && cd.coeff(&Permutation::identity(2)) == RatFunc::q_pow(1),
            String::new(),
        );

        // T_s C-dagger_w = -q^-1 C-dagger_w for s in L(w), all of S_4
        let mut absorb = true;
        for w in Permutation::enumerate(4) {
            let cd = table4.cdagger_elt(&w);
            for s in w.left_descents() {
                let lhs = cd.left_mul_t(&Permutation::s(s, 4));
                if lhs != cd.scale(&RatFunc::q_pow(-1)).neg() {
                    absorb = false;
                }
            }
            let c = table4.c_elt(&w);
            for s in w.left_descents() {
                if HeckeElt::t(Permutation::s(s, 4)).mul(&c) != c.scale(&RatFunc::q_pow(1)) {
                    absorb = false;
                }
            }
        }
        check(
            &mut out,
            "absorption identities on S_4 for both bases",
            absorb,
            String::new(),
        );

        let e211 = q_symmetriser(&mu(&[2, 1, 1]).subset_j());
        check(&mut out, "iota fixes e_J for mu=(2,1,1)", e211.iota() == e211, String::new());

        let anti = q_antisymmetriser(3, 1, 3).unwrap();
        let coeffs_ok = anti.coeff(&Permutation::identity(3)) == RatFunc::q_pow(3)
            && anti.coeff(&word(3, &[1])) == RatFunc::q_pow(2).scale_int(-1)
            && anti.coeff(&word(3, &[2])) == RatFunc::q_pow(2).scale_int(-1)
            && anti.coeff(&word(3, &[1, 2])) == RatFunc::q_pow(1)
            && anti.coeff(&word(3, &[2, 1])) == RatFunc::q_pow(1)
            && anti.coeff(&word(3, &[1, 2, 1])) == RatFunc::from_int(-1);
        check(
            &mut out,
            "antisymmetriser on 3 letters has coefficients q^3,-q^2,-q^2,q,q,-1",
            coeffs_ok && anti.num_terms() == 6,
            String::new(),
        );

        // two-sided order on S_4 matches dominance of RS shapes
        let cells = sn_cells(&table4, KlBasis::C, CellSide::TwoSided);
        let mut order_ok = true;
        let elems: Vec<Permutation> = Permutation::enumerate(4);
        for a in &elems {
            for b in &elems {
                let ca = cells.cell_index_of(a).unwrap();
                let cb = cells.cell_index_of(b).unwrap();
                let alg = cells.leq(ca, cb);
                let dom = shape_of(b).dominates(&shape_of(a));
                if alg != dom {
                    order_ok = false;
                }
            }
        }
        check(
            &mut out,
            "two-sided order on S_4 is dominance of shapes",
            order_ok,
            String::new(),
        );
    }

    // --- parabolic algebra ------------------------------------------------
    {
        let sys22 = system(&[2, 2]);
        check(
            &mut out,
            "mu=(2,2) has three double cosets",
            sys22.num_cosets() == 3,
            format!("{}", sys22.num_cosets()),
        );

        let sys211 = system(&[2, 1, 1]);
        let reps: Vec<Permutation> = [
            vec![],
            vec![2],
            vec![3],
            vec![2, 3],
            vec![3, 2],
            vec![2, 3, 2],
            vec![2, 1, 3, 2],
        ]
        .iter()
        .map(|w| word(4, w))
        .collect();
        let mut found = reps
            .iter()
            .all(|r| sys211.index_of_rmin(r).is_some());
        found &= sys211.num_cosets() == 7;
        check(&mut out, "mu=(2,1,1) has the seven stated minimal reps", found, String::new());

        let d7 = sys211.index_of_rmin(&word(4, &[2, 1, 3, 2])).unwrap();
        check(
            &mut out,
            "rplus of the top (2,1,1) coset is s1s2s1s3s2s1",
            sys211.coset(d7).rplus == word(4, &[1, 2, 1, 3, 2, 1]),
            sys211.coset(d7).rplus.to_string(),
        );

        // Example: the three plus-basis expansions for mu=(2,2)
        let at = |rp: &[usize]| sys22.index_of_rplus(&word(4, rp)).unwrap();
        let b1 = sys22.kl_basis_plus(at(&[1, 3]));
        let b2 = sys22.kl_basis_plus(at(&[1, 2, 3, 2, 1]));
        let b3 = sys22.kl_basis_plus(at(&[1, 2, 1, 3, 2, 1]));
        let rmin_of = |idx: usize| sys22.coset(idx).rmin.clone();
        let plus_ok = b1.num_terms() == 1
            && b2.num_terms() == 2
            && b2.coeff(&rmin_of(at(&[1, 3]))) == lp(&[(-1, 1), (-3, 1)])
            && b3.num_terms() == 3
            && b3.coeff(&rmin_of(at(&[1, 2, 3, 2, 1]))) == lp(&[(-1, 1)])
            && b3.coeff(&rmin_of(at(&[1, 3]))) == lp(&[(-4, 1)]);
        check(&mut out, "plus basis expansions for mu=(2,2)", plus_ok, String::new());

        // dagger basis expansions for mu=(2,2)
        let e = Permutation::identity(4);
        let s2 = Permutation::s(2, 4);
        let top = Permutation::from_oneline(vec![3, 4, 1, 2]).unwrap();
        let d0 = (*sys22.kl_basis_dagger(sys22.index_of_rmin(&e).unwrap())).clone();
        let d1 = (*sys22.kl_basis_dagger(sys22.index_of_rmin(&s2).unwrap())).clone();
        let d2 = (*sys22.kl_basis_dagger(sys22.index_of_rmin(&top).unwrap())).clone();
        let dagger_ok = d0.num_terms() == 1
            && d0.coeff(&e).is_one()
            && d1.coeff(&s2) == RatFunc::from_int(-1)
            && d1.coeff(&e) == lp(&[(1, 1)])
            && d2.coeff(&top).is_one()
            && d2.coeff(&s2) == lp(&[(1, -1), (3, -1)])
            && d2.coeff(&e) == lp(&[(2, 1)]);
        check(&mut out, "dagger basis expansions for mu=(2,2)", dagger_ok, String::new());

        // seven-term dagger expansion for mu=(1,2,1)
        let sys121 = system(&[1, 2, 1]);
        let w = word(4, &[1, 2, 3, 2, 1]);
        let b = sys121.kl_basis_dagger(sys121.index_of_rmin(&w).unwrap());
        let seven_ok = b.num_terms() == 7
            && b.coeff(&w) == RatFunc::from_int(-1)
            && b.coeff(&word(4, &[1, 3])) == lp(&[(1, 1), (3, -1)])
            && b.coeff(&Permutation::identity(4)) == lp(&[(3, 1)]);
        check(
            &mut out,
            "mu=(1,2,1) dagger expansion carries (q-q^3) on e T_13 e",
            seven_ok,
            String::new(),
        );

        // cell partition table for mu=(2,1,1), both bases
        let find = |w: &[usize]| sys211.index_of_rmin(&word(4, w)).unwrap();
        let d = [
            find(&[]),
            find(&[2]),
            find(&[3]),
            find(&[2, 3]),
            find(&[3, 2]),
            find(&[2, 3, 2]),
            find(&[2, 1, 3, 2]),
        ];
        let plus_cells = para_cells(&sys211, KlBasis::C, CellSide::Left).partition();
        let mut expect_plus: Vec<Vec<usize>> = vec![
            vec![d[6]],
            vec![d[1].min(d[4]), d[1].max(d[4])],
            vec![d[3].min(d[5]), d[3].max(d[5])],
            vec![d[2]],
            vec![d[0]],
        ];
        expect_plus.sort();
        let dagger_cells = para_cells(&sys211, KlBasis::CDagger, CellSide::Left).partition();
        let mut expect_dagger: Vec<Vec<usize>> = vec![
            vec![d[0]],
            vec![d[1].min(d[4]), d[1].max(d[4])],
            vec![d[2].min(d[3]), d[2].max(d[3])],
            vec![d[6]],
            vec![d[5]],
        ];
        expect_dagger.sort();
        check(
            &mut out,
            "mu=(2,1,1) cell partition, first basis",
            plus_cells == expect_plus,
            String::new(),
        );
        check(
            &mut out,
            "mu=(2,1,1) cell partition, second basis",
            dagger_cells == expect_dagger,
            String::new(),
        );

        // trivial one-dimensional representation  and mu-sorted eigenline
        let report = crate::schurweyl::one_dim_checks(&sys22);
        check(
            &mut out,
            "one-dimensional representations for mu=(2,2)",
            report.trivial_rep_ok && report.eigen_ok,
            String::new(),
        );
    }

    // --- tableaux -----------------------------------------------------------
    {
        let w231 = Permutation::from_oneline(vec![2, 3, 1]).unwrap();
        let (p, q) = rs(&w231);
        check(
            &mut out,
            "RS of 231 is ([[1,3],[2]], [[1,2],[3]])",
            p.rows() == [vec![1, 3], vec![2]] && q.rows() == [vec![1, 2], vec![3]],
            String::new(),
        );

        let m222 = mu(&[2, 2, 2]);
        let t = StdTableau::new(vec![vec![1, 2, 3, 5], vec![4, 6]]).unwrap();
        let s = t.bar_map(&m222);
        check(
            &mut out,
            "relabelling 1235/46 under (2,2,2) gives 1123/23",
            s.map_or(false, |s| s.rows() == [vec![1, 1, 2, 3], vec![2, 3]]),
            String::new(),
        );

        let m211 = mu(&[2, 1, 1]);
        let rmin = Permutation::from_oneline(vec![1, 3, 4, 2]).unwrap();
        let (pp, qq) = rsk_of_min_rep(&rmin, &m211);
        check(
            &mut out,
            "rsk_min of the (2,1,1) coset D4",
            pp.rows() == [vec![1, 1, 3], vec![2]] && qq.rows() == [vec![1, 1, 2], vec![3]],
            String::new(),
        );
        let rplus = Permutation::from_oneline(vec![3, 2, 4, 1]).unwrap();
        let (pt, qt) = rsk_of_max_rep(&rplus, &m211);
        check(
            &mut out,
            "rsk_max of the (2,1,1) coset D4",
            pt.rows() == [vec![1, 1, 2], vec![3]] && qt.rows() == [vec![1, 1, 3], vec![2]],
            String::new(),
        );

        check(
            &mut out,
            "Kostka((3,1),(2,1,1)) = 2",
            kostka(&Partition::new(vec![3, 1]).unwrap(), &m211) == 2,
            String::new(),
        );

        // cellular index resolves the table pair to D4
        let sys211 = system(&[2, 1, 1]);
        let s4 = SemiStdTableau::new(vec![vec![1, 1, 3], vec![2]], &m211).unwrap();
        let t4 = SemiStdTableau::new(vec![vec![1, 1, 2], vec![3]], &m211).unwrap();
        let resolved = sys211
            .cellular_index(&s4, &t4, KlBasis::CDagger)
            .map(|(idx, _)| sys211.coset(idx).rmin.clone());
        check(
            &mut out,
            "cellular index of ([[1,1,3],[2]],[[1,1,2],[3]]) is D4",
            resolved.map_or(false, |r| r == rmin),
            String::new(),
        );
    }

    // --- Bratteli dimensions and the kernel ---------------------------------
    {
        let sys222 = system(&[2, 2, 2]);
        check(
            &mut out,
            "mu=(2,2,2) has 21 double cosets",
            sys222.num_cosets() == 21,
            format!("{}", sys222.num_cosets()),
        );
        let cells = para_cells(&sys222, KlBasis::CDagger, CellSide::Left);
        // dims grouped by shape in the display order (rows, then first part
        // descending): (6),(5,1),(4,2),(3,3),(4,1,1),(3,2,1),(2,2,2)
        let mut by_shape: std::collections::BTreeMap<(usize, Vec<i64>), usize> =
            std::collections::BTreeMap::new();
        for c in 0..cells.num_cells() {
            let module = cell_module(&sys222, KlBasis::CDagger, &cells, c);
            let shape = shape_of(&sys222.coset(module.basis[0]).rmin);
            let key = (
                shape.rows(),
                shape.parts().iter().map(|&p| -(p as i64)).collect::<Vec<_>>(),
            );
            let prev = by_shape.insert(key, module.dim());
            // left cells of equal shape have equal dimension
            if let Some(p) = prev {
                assert_eq!(p, module.dim());
            }
        }
        let dims: Vec<usize> = by_shape.values().copied().collect();
        check(
            &mut out,
            "mu=(2,2,2) cell module dimensions are (1,2,3,1,1,2,1)",
            dims == vec![1, 2, 3, 1, 1, 2, 1],
            format!("{:?}", dims),
        );

        check(
            &mut out,
            "tilde w for hooks: 1324, 153426, 17354628",
            tilde_w_hook(&mu(&[2, 2]), 1).unwrap().to_string() == "1324"
                && tilde_w_hook(&mu(&[2, 2, 2]), 2).unwrap().to_string() == "153426"
                && tilde_w_hook(&mu(&[2, 2, 2, 2]), 3).unwrap().to_string() == "17354628",
            String::new(),
        );

        check(
            &mut out,
            "tilde w_mu for (3,2,2) is 1674523",
            tilde_w_mu(&mu(&[3, 2, 2])).to_string() == "1674523",
            String::new(),
        );

        // X for mu=(2,2): q e - e T_{s2} e, equal to Y
        let sys22 = system(&[2, 2]);
        let x22 = x_element(&sys22, 1).unwrap();
        let mut expect = ParaElt::zero(sys22.mu().clone(), crate::parahecke::ParaBasis::TMin);
        expect.add_term(Permutation::identity(4), RatFunc::q_pow(1));
        expect.add_term(Permutation::s(2, 4), RatFunc::from_int(-1));
        check(&mut out, "X for mu=(2,2) is q e - e T_{s2} e", x22 == expect, String::new());

        // X coefficients for mu=(2,2,2): q^3 on e, -q^2 twice, leading -1
        let x222 = x_element(&sys222, 2).unwrap();
        let hook_rep = Permutation::from_oneline(vec![1, 5, 3, 4, 2, 6]).unwrap();
        let x222_ok = x222.coeff(&Permutation::identity(6)) == RatFunc::q_pow(3)
            && x222.coeff(&Permutation::s(2, 6)) == RatFunc::q_pow(2).scale_int(-1)
            && x222.coeff(&Permutation::s(4, 6)) == RatFunc::q_pow(2).scale_int(-1)
            && x222.coeff(&hook_rep) == RatFunc::from_int(-1);
        check(
            &mut out,
            "X coefficients for mu=(2,2,2) match the fused picture",
            x222_ok,
            String::new(),
        );

        // conjecture battery on (2,2,2), N=2
        let report = check_conjectures(&sys222, 2, RankMode::Exact, 0, false).unwrap();
        check(
            &mut out,
            "conjecture instance mu=(2,2,2), N=2: equal, invariant, dim 6, generates",
            report.ideal_dim == 6 && report.all_verified(),
            format!("{:?}", report),
        );
    }

    out
}

/// True when every replayed example passed.
pub fn all_pass(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.pass)
}

#[cfg(test)]
mod tests {
    #[test]
    fn selftest_battery_passes() {
        let results = super::run();
        for r in &results {
            assert!(r.pass, "selftest failed: {} {}", r.name, r.detail);
        }
        assert!(results.len() >= 25);
    }
}
