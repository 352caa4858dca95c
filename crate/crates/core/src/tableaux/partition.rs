use std::fmt;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p == 0) {
            return None;
        }
        Some(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition { parts: vec![] };
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: `self >= other` iff every prefix sum of `self` is at
    /// least the corresponding prefix sum of `other`. Requires equal sizes.
    pub fn dominates(&self, other: &Partition) -> bool {
        assert_eq!(self.size(), other.size(), "dominance needs equal sizes");
        let k = self.parts.len().max(other.parts.len());
        let mut a = 0usize;
        let mut b = 0usize;
        for i in 0..k {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// The hook (n - N, 1, ..., 1) with N+1 rows.
    pub fn hook(rows: usize, size: usize) -> Option<Partition> {
        if rows == 0 || size < rows || (rows > 1 && size - rows + 1 < 1) {
            return None;
        }
        let mut parts = vec![1; rows];
        parts[0] = size - rows + 1;
        if parts.len() > 1 && parts[0] < parts[1] {
            return None;
        }
        Some(Partition { parts })
    }

    /// All partitions of n, in lexicographically decreasing order.
    pub fn enumerate(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, cap: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: acc.clone() });
                return;
            }
            for next in (1..=cap.min(rest)).rev() {
                acc.push(next);
                rec(rest - next, next, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
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

impl fmt::Display for Partition {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominance_basics() {
        let a = Partition::new(vec![3, 1]).unwrap();
        let b = Partition::new(vec![2, 2]).unwrap();
        let c = Partition::new(vec![2, 1, 1]).unwrap();
        assert!(a.dominates(&a));
        assert!(a.dominates(&b) && !b.dominates(&a));
        assert!(b.dominates(&c));
        // incomparable pair in size 6
        let d = Partition::new(vec![3, 3]).unwrap();
        let e = Partition::new(vec![4, 1, 1]).unwrap();
        assert!(!d.dominates(&e) && !e.dominates(&d));
    }

    #[test]
    fn transpose_reverses_dominance() {
        for l in Partition::enumerate(6) {
            for m in Partition::enumerate(6) {
                assert_eq!(l.dominates(&m), m.transpose().dominates(&l.transpose()));
            }
            assert_eq!(l.transpose().transpose(), l);
        }
    }

    #[test]
    fn hooks() {
        assert_eq!(Partition::hook(3, 6).unwrap().parts(), &[4, 1, 1]);
        assert_eq!(Partition::hook(1, 4).unwrap().parts(), &[4]);
        assert_eq!(Partition::hook(4, 4).unwrap().parts(), &[1, 1, 1, 1]);
        assert!(Partition::hook(5, 4).is_none());
    }

    #[test]
    fn more_rows_than_n_iff_below_hook() {
        // lambda has > N rows iff lambda <= Hook_{N+1,n}
        for n in 2..=7 {
            for nn in 1..n {
                let hook = Partition::hook(nn + 1, n).unwrap();
                for l in Partition::enumerate(n) {
                    assert_eq!(l.rows() > nn, hook.dominates(&l), "l={} N={}", l, nn);
                }
            }
        }
    }
}
