use std::fmt;

use crate::symgroup::Composition;

use super::{Partition, TableauError};

/// A standard Young tableau: entries 1..n each once, rows and columns
/// strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StdTableau {
    rows: Vec<Vec<usize>>,
}

impl StdTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let t = StdTableau { rows };
        let n = t.size();
        let mut seen = vec![false; n + 1];
        for r in &t.rows {
            if r.is_empty() || r.windows(2).any(|w| w[0] >= w[1]) {
                return Err(TableauError::NotStandard);
            }
            for &v in r {
                if v < 1 || v > n || seen[v] {
                    return Err(TableauError::NotStandard);
                }
                seen[v] = true;
            }
        }
        for i in 1..t.rows.len() {
            if t.rows[i].len() > t.rows[i - 1].len() {
                return Err(TableauError::NotStandard);
            }
            for c in 0..t.rows[i].len() {
                if t.rows[i][c] <= t.rows[i - 1][c] {
                    return Err(TableauError::NotStandard);
                }
            }
        }
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        StdTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("valid shape")
    }

    /// Row index (0-based) holding a given entry.
    fn row_of(&self, entry: usize) -> usize {
        self.rows
            .iter()
            .position(|r| r.contains(&entry))
            .expect("entry present")
    }

    /// The descent set: i such that i+1 sits in a strictly lower row.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.size())
            .filter(|&i| self.row_of(i + 1) > self.row_of(i))
            .collect()
    }

    pub fn transpose(&self) -> StdTableau {
        let shape = self.shape().transpose();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
        for (i, r) in self.rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                rows[j][i] = v;
            }
        }
        StdTableau { rows }
    }

    /// Entrywise relabelling through the consecutive-blocks map of `mu`.
    /// Succeeds when the relabelled filling is semistandard; descents
    /// disjoint from J(mu) guarantee this (the converse can fail: a tableau
    /// with a J-descent occasionally still relabels to a semistandard one,
    /// but it is then not the distinguished preimage of [`SemiStdTableau::standard_lift`]).
    pub fn bar_map(&self, mu: &Composition) -> Result<SemiStdTableau, TableauError> {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&v| mu.block_of(v)).collect())
            .collect();
        SemiStdTableau::new(rows, mu).map_err(|_| TableauError::NotSemistandard)
    }

    pub fn to_json(&self) -> serde_json::Value {
        rows_json(&self.rows)
    }
}

/// A semistandard Young tableau of fixed weight: rows weakly increase,
/// columns strictly increase, entry i appears weight_i times.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SemiStdTableau {
    rows: Vec<Vec<usize>>,
}

impl SemiStdTableau {
    pub fn new(rows: Vec<Vec<usize>>, weight: &Composition) -> Result<Self, TableauError> {
        let t = SemiStdTableau { rows };
        let mut counts = vec![0usize; weight.d() + 1];
        for r in &t.rows {
            if r.is_empty() || r.windows(2).any(|w| w[0] > w[1]) {
                return Err(TableauError::NotSemistandard);
            }
            for &v in r {
                if v < 1 || v > weight.d() {
                    return Err(TableauError::NotSemistandard);
                }
                counts[v] += 1;
            }
        }
        for i in 1..t.rows.len() {
            if t.rows[i].len() > t.rows[i - 1].len() {
                return Err(TableauError::NotSemistandard);
            }
            for c in 0..t.rows[i].len() {
                if t.rows[i][c] <= t.rows[i - 1][c] {
                    return Err(TableauError::NotSemistandard);
                }
            }
        }
        for (i, &w) in weight.parts().iter().enumerate() {
            if counts[i + 1] != w {
                return Err(TableauError::NotSemistandard);
            }
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("valid shape")
    }

    /// The unique standard preimage of the relabelling map with descents
    /// disjoint from J(mu): within each block the entries are placed left to
    /// right by column.
    pub fn standard_lift(&self, mu: &Composition) -> StdTableau {
        let sums = mu.partial_sums();
        let start = |block: usize| if block == 1 { 1 } else { sums[block - 2] + 1 };
        // For each block value, collect (column, row) of its boxes; a valid
        // semistandard tableau has at most one box per column, and numbering
        // them by increasing column keeps rows and columns strict.
        let mut rows: Vec<Vec<usize>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        for block in 1..=mu.d() {
            let mut boxes: Vec<(usize, usize)> = Vec::new();
            for (i, r) in self.rows.iter().enumerate() {
                for (j, &v) in r.iter().enumerate() {
                    if v == block {
                        boxes.push((j, i));
                    }
                }
            }
            boxes.sort();
            for (offset, (j, i)) in boxes.into_iter().enumerate() {
                rows[i][j] = start(block) + offset;
            }
        }
        let t = StdTableau::new(rows).expect("lift of a semistandard tableau is standard");
        debug_assert!(t.bar_map(mu).map_or(false, |s| s == *self));
        t
    }

    /// All semistandard tableaux of given shape and weight, by backtracking
    /// row by row.
    pub fn enumerate(shape: &Partition, weight: &Composition) -> Vec<SemiStdTableau> {
        if shape.size() != weight.n() {
            return Vec::new();
        }
        let parts = shape.parts().to_vec();
        let d = weight.d();
        let mut remaining: Vec<usize> = weight.parts().to_vec();
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut out = Vec::new();

        fn fill_cell(
            parts: &[usize],
            d: usize,
            remaining: &mut Vec<usize>,
            rows: &mut Vec<Vec<usize>>,
            r: usize,
            c: usize,
            out: &mut Vec<SemiStdTableau>,
        ) {
            if r == parts.len() {
                out.push(SemiStdTableau { rows: rows.clone() });
                return;
            }
            if c == parts[r] {
                fill_cell(parts, d, remaining, rows, r + 1, 0, out);
                return;
            }
            if c == 0 {
                rows.push(Vec::new());
            }
            let row_min = if c == 0 { 1 } else { rows[r][c - 1] };
            let col_min = if r == 0 { 0 } else { rows[r - 1][c] };
            let lo = row_min.max(col_min + 1).max(1);
            for v in lo..=d {
                if remaining[v - 1] == 0 {
                    continue;
                }
                remaining[v - 1] -= 1;
                rows[r].push(v);
                fill_cell(parts, d, remaining, rows, r, c + 1, out);
                rows[r].pop();
                remaining[v - 1] += 1;
            }
            if c == 0 {
                rows.pop();
            }
        }

        fill_cell(&parts, d, &mut remaining, &mut rows, 0, 0, &mut out);
        out.sort();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        rows_json(&self.rows)
    }
}

fn rows_json(rows: &[Vec<usize>]) -> serde_json::Value {
    serde_json::Value::Array(
        rows.iter()
            .map(|r| {
                serde_json::Value::Array(r.iter().map(|&v| serde_json::Value::from(v as u64)).collect())
            })
            .collect(),
    )
}

fn rows_string(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(""))
        .collect::<Vec<_>>()
        .join("/")
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", rows_string(&self.rows))
    }
}

impl fmt::Display for SemiStdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", rows_string(&self.rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descents() {
        let t = StdTableau::new(vec![vec![1, 2, 4], vec![3]]).unwrap();
        assert_eq!(t.descents(), vec![2]);
        let u = StdTableau::new(vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(u.descents(), vec![1, 3]);
    }

    #[test]
    fn bar_map_example() {
        // [[1,2,3,5],[4,6]] with mu = (2,2,2) -> [[1,1,2,3],[2,3]]
        let mu = Composition::new(vec![2, 2, 2]).unwrap();
        let t = StdTableau::new(vec![vec![1, 2, 3, 5], vec![4, 6]]).unwrap();
        let s = t.bar_map(&mu).unwrap();
        assert_eq!(s.rows(), &[vec![1, 1, 2, 3], vec![2, 3]]);
        // t has descents {3,5} meeting J = {1,3,5}, so it is not the
        // distinguished preimage; the lift is the descent-disjoint one.
        let lift = s.standard_lift(&mu);
        assert_eq!(lift.rows(), &[vec![1, 2, 4, 6], vec![3, 5]]);
        let j = mu.subset_j();
        assert!(lift.descents().iter().all(|&i| !j.contains(i)));
        assert_eq!(lift.bar_map(&mu).unwrap(), s);
    }

    #[test]
    fn bar_map_fails_on_j_descent() {
        // descent {1} meets J((2,2)) = {1,3}
        let mu = Composition::new(vec![2, 2]).unwrap();
        let t = StdTableau::new(vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(t.bar_map(&mu), Err(TableauError::NotSemistandard));
        // single row always succeeds
        let row = StdTableau::new(vec![vec![1, 2, 3, 4]]).unwrap();
        assert!(row.bar_map(&mu).is_ok());
    }

    #[test]
    fn lift_round_trips_exhaustively() {
        // over all standard tableaux of size <= 6: J-disjoint descents
        // guarantee a semistandard relabelling, and the lift inverts the map
        // exactly on that range.
        for n in 1..=6usize {
            for mu in Composition::enumerate(n) {
                let j = mu.subset_j();
                for shape in Partition::enumerate(n) {
                    for t in enumerate_standard(&shape) {
                        let disjoint = t.descents().iter().all(|&i| !j.contains(i));
                        match t.bar_map(&mu) {
                            Ok(s) => {
                                if disjoint {
                                    assert_eq!(s.standard_lift(&mu), t);
                                } else {
                                    // an incidental preimage; the lift still
                                    // lands on the distinguished one
                                    assert_ne!(s.standard_lift(&mu), t);
                                    assert_eq!(s.standard_lift(&mu).bar_map(&mu).unwrap(), s);
                                }
                            }
                            Err(_) => assert!(!disjoint, "J-disjoint tableau failed to relabel"),
                        }
                    }
                }
            }
        }
    }

    /// Brute-force enumeration of standard tableaux of a shape.
    pub(crate) fn enumerate_standard(shape: &Partition) -> Vec<StdTableau> {
        let n = shape.size();
        let parts = shape.parts().to_vec();
        let mut rows: Vec<Vec<usize>> = parts.iter().map(|_| Vec::new()).collect();
        let mut out = Vec::new();
        fn place(
            next: usize,
            n: usize,
            parts: &[usize],
            rows: &mut Vec<Vec<usize>>,
            out: &mut Vec<StdTableau>,
        ) {
            if next > n {
                out.push(StdTableau::from_rows_unchecked(rows.clone()));
                return;
            }
            for r in 0..parts.len() {
                let c = rows[r].len();
                if c >= parts[r] {
                    continue;
                }
                if r > 0 && rows[r - 1].len() <= c {
                    continue;
                }
                rows[r].push(next);
                place(next + 1, n, parts, rows, out);
                rows[r].pop();
            }
        }
        place(1, n, &parts, &mut rows, &mut out);
        out
    }

    #[test]
    fn semistandard_enumeration_shapes() {
        let mu = Composition::new(vec![2, 1, 1]).unwrap();
        let l = Partition::new(vec![3, 1]).unwrap();
        let tabs = SemiStdTableau::enumerate(&l, &mu);
        assert_eq!(tabs.len(), 2);
        assert_eq!(tabs[0].rows(), &[vec![1, 1, 2], vec![3]]);
        assert_eq!(tabs[1].rows(), &[vec![1, 1, 3], vec![2]]);
    }

    #[test]
    fn standard_count_hook_length_check() {
        // |STab((3,2))| = 5, |STab((2,2,1))| = 5, |STab((2,2))| = 2
        assert_eq!(enumerate_standard(&Partition::new(vec![3, 2]).unwrap()).len(), 5);
        assert_eq!(
            enumerate_standard(&Partition::new(vec![2, 2, 1]).unwrap()).len(),
            5
        );
        assert_eq!(enumerate_standard(&Partition::new(vec![2, 2]).unwrap()).len(), 2);
    }
}
