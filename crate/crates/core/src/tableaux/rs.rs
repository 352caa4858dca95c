use crate::symgroup::Permutation;

use super::tableau::StdTableau;

/// The Robinson-Schensted correspondence by row insertion of the one-line
/// word w(1), ..., w(n). Returns the insertion tableau P and the recording
/// tableau Q.
pub fn rs(w: &Permutation) -> (StdTableau, StdTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for step in 1..=w.n() {
        let mut x = w.apply(step);
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step]);
                break;
            }
            // bump the leftmost entry strictly greater than x
            match p[row].iter().position(|&v| v > x) {
                None => {
                    p[row].push(x);
                    q[row].push(step);
                    break;
                }
                Some(j) => {
                    std::mem::swap(&mut p[row][j], &mut x);
                    row += 1;
                }
            }
        }
    }
    (
        StdTableau::from_rows_unchecked(p),
        StdTableau::from_rows_unchecked(q),
    )
}

/// Inverse RS: reconstructs the permutation from a pair of standard tableaux
/// of the same shape by reverse bumping in decreasing recording order.
pub fn rs_inverse(p: &StdTableau, q: &StdTableau) -> Permutation {
    assert_eq!(p.shape(), q.shape(), "tableau shapes must agree");
    let n = p.size();
    let mut rows: Vec<Vec<usize>> = p.rows().to_vec();
    let mut qpos = vec![(0usize, 0usize); n + 1];
    for (i, r) in q.rows().iter().enumerate() {
        for (j, &v) in r.iter().enumerate() {
            qpos[v] = (i, j);
        }
    }
    let mut oneline = vec![0u8; n];
    for step in (1..=n).rev() {
        let (mut row, col) = qpos[step];
        let mut x = rows[row].remove(col);
        while row > 0 {
            row -= 1;
            // reverse-bump: the rightmost entry strictly smaller than x
            let j = rows[row]
                .iter()
                .rposition(|&v| v < x)
                .expect("reverse bump target exists");
            std::mem::swap(&mut rows[row][j], &mut x);
        }
        oneline[step - 1] = x as u8;
    }
    Permutation::from_oneline(oneline).expect("inverse RS yields a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_convention_example() {
        // s1 s2 = 231 maps to P = [[1,3],[2]], Q = [[1,2],[3]]
        let w = Permutation::from_oneline(vec![2, 3, 1]).unwrap();
        let (p, q) = rs(&w);
        assert_eq!(p.rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(q.rows(), &[vec![1, 2], vec![3]]);
    }

    #[test]
    fn identity_gives_single_rows() {
        let w = Permutation::identity(5);
        let (p, q) = rs(&w);
        assert_eq!(p.rows(), &[vec![1, 2, 3, 4, 5]]);
        assert_eq!(p, q);
    }

    #[test]
    fn round_trip_on_all_of_s5() {
        for w in Permutation::enumerate(5) {
            let (p, q) = rs(&w);
            assert_eq!(p.shape(), q.shape());
            assert_eq!(rs_inverse(&p, &q), w);
        }
    }

    #[test]
    fn descent_compatibility() {
        // left descents of w match descents of P, right descents match Q
        for w in Permutation::enumerate(5) {
            let (p, q) = rs(&w);
            let ld: Vec<usize> = w.left_descents().collect();
            let rd: Vec<usize> = w.right_descents().collect();
            assert_eq!(p.descents(), ld, "P descents for {}", w);
            assert_eq!(q.descents(), rd, "Q descents for {}", w);
        }
    }

    #[test]
    fn inverse_swaps_tableaux() {
        for w in Permutation::enumerate(5) {
            let (p, q) = rs(&w);
            let (pi, qi) = rs(&w.inverse());
            assert_eq!(pi, q);
            assert_eq!(qi, p);
        }
    }
}
