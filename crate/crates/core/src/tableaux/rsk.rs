use crate::symgroup::{Composition, Permutation};

use super::rs::{rs, rs_inverse};
use super::tableau::{SemiStdTableau, StdTableau};

/// The semistandard RSK pair of a double coset read off its minimal
/// representative: relabel both RS tableaux through the weight map.
///
/// Well-defined exactly for minimal double-coset representatives, whose RS
/// tableaux have descents disjoint from J(mu).
pub fn rsk_of_min_rep(rmin: &Permutation, mu: &Composition) -> (SemiStdTableau, SemiStdTableau) {
    let (p, q) = rs(rmin);
    let pp = p.bar_map(mu).expect("minimal rep has J-disjoint left descents");
    let qq = q.bar_map(mu).expect("minimal rep has J-disjoint right descents");
    (pp, qq)
}

/// The second correspondence, read off the maximal representative: transpose
/// the RS tableaux, then relabel.
pub fn rsk_of_max_rep(rplus: &Permutation, mu: &Composition) -> (SemiStdTableau, SemiStdTableau) {
    let (p, q) = rs(rplus);
    let pp = p
        .transpose()
        .bar_map(mu)
        .expect("maximal rep transposes to J-disjoint descents");
    let qq = q
        .transpose()
        .bar_map(mu)
        .expect("maximal rep transposes to J-disjoint descents");
    (pp, qq)
}

/// Inverse of [`rsk_of_min_rep`]: standard lifts followed by inverse RS.
pub fn rsk_min_inverse(
    p: &SemiStdTableau,
    q: &SemiStdTableau,
    mu: &Composition,
) -> Permutation {
    rs_inverse(&p.standard_lift(mu), &q.standard_lift(mu))
}

/// Inverse of [`rsk_of_max_rep`].
pub fn rsk_max_inverse(
    p: &SemiStdTableau,
    q: &SemiStdTableau,
    mu: &Composition,
) -> Permutation {
    rs_inverse(
        &p.standard_lift(mu).transpose(),
        &q.standard_lift(mu).transpose(),
    )
}

/// Knuth's two-line-array description of the correspondence, used as an
/// independent oracle: relabel both lines of the two-line notation of the
/// minimal representative, then insert with the semistandard bumping rule,
/// recording the top line.
pub fn knuth_rsk(rmin: &Permutation, mu: &Composition) -> (SemiStdTableau, SemiStdTableau) {
    let n = rmin.n();
    let pairs: Vec<(usize, usize)> = (1..=n)
        .map(|i| (mu.block_of(i), mu.block_of(rmin.apply(i))))
        .collect();
    debug_assert!(pairs.windows(2).all(|w| w[0] <= w[1]), "lex-sorted biword");

    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (top, bottom) in pairs {
        let mut x = bottom;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![top]);
                break;
            }
            match p[row].iter().position(|&v| v > x) {
                None => {
                    p[row].push(x);
                    q[row].push(top);
                    break;
                }
                Some(j) => {
                    std::mem::swap(&mut p[row][j], &mut x);
                    row += 1;
                }
            }
        }
    }
    let pt = SemiStdTableau::new(p, mu).expect("insertion tableau is semistandard");
    let qt = SemiStdTableau::new(q, mu).expect("recording tableau is semistandard");
    (pt, qt)
}

/// Shape of a permutation under RS.
pub fn shape_of(w: &Permutation) -> super::Partition {
    rs(w).0.shape()
}

/// The unique standard tableau of the given shape whose descents avoid
/// J(mu), when it exists (i.e. when the Kostka number is 1 this is the lift
/// of the unique semistandard tableau).
pub fn unique_semistandard(
    shape: &super::Partition,
    mu: &Composition,
) -> Option<SemiStdTableau> {
    let mut all = SemiStdTableau::enumerate(shape, mu);
    if all.len() == 1 {
        all.pop()
    } else {
        None
    }
}

/// Convenience: full RS data of a standard lift pair.
pub fn lift_pair(
    p: &SemiStdTableau,
    q: &SemiStdTableau,
    mu: &Composition,
) -> (StdTableau, StdTableau) {
    (p.standard_lift(mu), q.standard_lift(mu))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn example_min_rep() {
        // mu = (2,1,1), rmin = s2 s3 = 1342: (P,Q) = ([[1,1,3],[2]], [[1,1,2],[3]])
        let m = mu(&[2, 1, 1]);
        let w = Permutation::from_oneline(vec![1, 3, 4, 2]).unwrap();
        let (p, q) = rsk_of_min_rep(&w, &m);
        assert_eq!(p.rows(), &[vec![1, 1, 3], vec![2]]);
        assert_eq!(q.rows(), &[vec![1, 1, 2], vec![3]]);
        assert_eq!(rsk_min_inverse(&p, &q, &m), w);
    }

    #[test]
    fn example_max_rep() {
        // mu = (2,1,1), rplus = s1 s2 s3 s1 = 3241:
        // (P~, Q~) = ([[1,1,2],[3]], [[1,1,3],[2]])
        let m = mu(&[2, 1, 1]);
        let w = Permutation::from_oneline(vec![3, 2, 4, 1]).unwrap();
        let (p, q) = rsk_of_max_rep(&w, &m);
        assert_eq!(p.rows(), &[vec![1, 1, 2], vec![3]]);
        assert_eq!(q.rows(), &[vec![1, 1, 3], vec![2]]);
        assert_eq!(rsk_max_inverse(&p, &q, &m), w);
    }

    #[test]
    fn identity_coset_gives_single_rows() {
        let m = mu(&[3, 2]);
        let w = Permutation::identity(5);
        let (p, q) = rsk_of_min_rep(&w, &m);
        assert_eq!(p.rows(), &[vec![1, 1, 1, 2, 2]]);
        assert_eq!(p, q);
    }
}
