use std::collections::HashMap;

use crate::symgroup::Permutation;

use super::kl::KlTable;
use super::KlBasis;

/// Which multiplication side generates the preorder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellSide {
    Left,
    Right,
    TwoSided,
}

impl CellSide {
    pub fn tag(&self) -> &'static str {
        match self {
            CellSide::Left => "L",
            CellSide::Right => "R",
            CellSide::TwoSided => "LR",
        }
    }
}

/// A partition into cells together with the induced partial order on cells.
///
/// `leq(a, b)` means cell `a` lies below cell `b` in the preorder, i.e. the
/// basis elements of `a` are reachable from those of `b` by left/right
/// multiplication arrows.
#[derive(Debug, Clone)]
pub struct Cells<T> {
    elements: Vec<T>,
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
    reach: Vec<Vec<bool>>,
}

impl<T: Clone + Ord> Cells<T> {
    /// Builds from arrows `i -> j` meaning "j is reachable from i in one
    /// step" (so j's cell ends up below i's).
    pub fn from_arrows(elements: Vec<T>, succ: impl Fn(usize) -> Vec<usize>) -> Self {
        let n = elements.len();
        let adj: Vec<Vec<usize>> = (0..n).map(&succ).collect();
        let (mut comp_of, comp_count) = tarjan_scc(n, &adj);

        // Renumber components canonically by their smallest element index.
        let mut min_elt = vec![usize::MAX; comp_count];
        for i in 0..n {
            min_elt[comp_of[i]] = min_elt[comp_of[i]].min(i);
        }
        let mut order: Vec<usize> = (0..comp_count).collect();
        order.sort_by_key(|&c| min_elt[c]);
        let mut rename = vec![0usize; comp_count];
        for (new, &old) in order.iter().enumerate() {
            rename[old] = new;
        }
        for c in comp_of.iter_mut() {
            *c = rename[*c];
        }

        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); comp_count];
        for i in 0..n {
            cells[comp_of[i]].push(i);
        }
        for cell in &mut cells {
            cell.sort();
        }

        // Condensation reachability: reach[a][b] = cell b reachable from a.
        let mut cadj: Vec<Vec<usize>> = vec![Vec::new(); comp_count];
        for i in 0..n {
            for &j in &adj[i] {
                if comp_of[i] != comp_of[j] {
                    cadj[comp_of[i]].push(comp_of[j]);
                }
            }
        }
        let mut reach = vec![vec![false; comp_count]; comp_count];
        for c in 0..comp_count {
            let mut stack = vec![c];
            while let Some(x) = stack.pop() {
                if reach[c][x] {
                    continue;
                }
                reach[c][x] = true;
                stack.extend(cadj[x].iter().copied());
            }
        }

        Cells {
            elements,
            cells,
            cell_of: comp_of,
            reach,
        }
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    /// Cells as sorted element lists, in canonical order.
    pub fn cell_members(&self, cell: usize) -> Vec<T> {
        self.cells[cell]
            .iter()
            .map(|&i| self.elements[i].clone())
            .collect()
    }

    pub fn cell_sets(&self) -> Vec<Vec<T>> {
        (0..self.num_cells()).map(|c| self.cell_members(c)).collect()
    }

    pub fn cell_index_of(&self, elt: &T) -> Option<usize> {
        self.elements
            .iter()
            .position(|e| e == elt)
            .map(|i| self.cell_of[i])
    }

    pub fn cell_of_index(&self, idx: usize) -> usize {
        self.cell_of[idx]
    }

    /// `lower` is below `upper` in the cell order.
    pub fn leq(&self, lower: usize, upper: usize) -> bool {
        self.reach[upper][lower]
    }

    /// The partition as a canonical set of sets, for equality testing
    /// against independently computed partitions.
    pub fn partition(&self) -> Vec<Vec<T>> {
        let mut sets = self.cell_sets();
        sets.sort();
        sets
    }
}

fn tarjan_scc(n: usize, adj: &[Vec<usize>]) -> (Vec<usize>, usize) {
    // Iterative Tarjan to survive deep graphs.
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut comp_of = vec![usize::MAX; n];
    let mut counter = 0usize;
    let mut comp_count = 0usize;

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        while !call.is_empty() {
            let (v, ei) = *call.last().unwrap();
            if ei == 0 {
                index[v] = counter;
                low[v] = counter;
                counter += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if ei < adj[v].len() {
                call.last_mut().unwrap().1 += 1;
                let w = adj[v][ei];
                if index[w] == usize::MAX {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp_of[w] = comp_count;
                        if w == v {
                            break;
                        }
                    }
                    comp_count += 1;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
            }
        }
    }
    (comp_of, comp_count)
}

/// Left/right/two-sided cells of S_n from the Kazhdan-Lusztig basis
/// multiplication preorder.
///
/// Arrows come from multiplication by the generators' basis elements: for
/// s outside the (left) descent set of w, C_s C_w hits C_{sw} and every C_z
/// with mu(z, w) nonzero and s in the descent set of z. The dagger basis has
/// the same structure constants (the dagger involution maps one basis onto
/// the other), so both `basis` choices produce identical partitions.
pub fn sn_cells(table: &KlTable, _basis: KlBasis, side: CellSide) -> Cells<Permutation> {
    let n = table.n();
    let elements = Permutation::enumerate(n);
    let index: HashMap<Permutation, usize> =
        elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();

    let succ = |i: usize| -> Vec<usize> {
        let w = &elements[i];
        let mut out = Vec::new();
        let mu_row = table.mu_row(w);
        if side != CellSide::Right {
            for s in 1..n {
                if w.has_left_descent(s) {
                    continue;
                }
                out.push(index[&w.left_mul_s(s)]);
            }
            for (z, _) in mu_row.iter() {
                if z.ldesc_mask() & !w.ldesc_mask() != 0 {
                    out.push(index[z]);
                }
            }
        }
        if side != CellSide::Left {
            for s in 1..n {
                if w.has_right_descent(s) {
                    continue;
                }
                out.push(index[&w.right_mul_s(s)]);
            }
            for (z, _) in mu_row.iter() {
                if z.rdesc_mask() & !w.rdesc_mask() != 0 {
                    out.push(index[z]);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    };

    Cells::from_arrows(elements.clone(), succ)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, word: &[usize]) -> Permutation {
        Permutation::from_word(n, word).unwrap()
    }

    #[test]
    fn left_cells_of_s3() {
        let table = KlTable::new(3);
        let cells = sn_cells(&table, KlBasis::C, CellSide::Left);
        let expect: Vec<Vec<Permutation>> = vec![
            vec![Permutation::identity(3)],
            vec![p(3, &[1]), p(3, &[2, 1])],
            vec![p(3, &[2]), p(3, &[1, 2])],
            vec![p(3, &[1, 2, 1])],
        ];
        let mut expect_sorted: Vec<Vec<Permutation>> = expect
            .into_iter()
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        expect_sorted.sort();
        assert_eq!(cells.partition(), expect_sorted);
    }

    #[test]
    fn identity_is_alone_two_sided() {
        let table = KlTable::new(4);
        let cells = sn_cells(&table, KlBasis::C, CellSide::TwoSided);
        let e = Permutation::identity(4);
        let c = cells.cell_index_of(&e).unwrap();
        assert_eq!(cells.cell_members(c), vec![e]);
    }

    #[test]
    fn descent_monotonicity_along_left_order() {
        // w below w' in the left order forces R(w') inside R(w).
        let table = KlTable::new(4);
        let cells = sn_cells(&table, KlBasis::C, CellSide::Left);
        let elems = cells.elements().to_vec();
        for (i, w) in elems.iter().enumerate() {
            for (j, w2) in elems.iter().enumerate() {
                let (ci, cj) = (cells.cell_of_index(i), cells.cell_of_index(j));
                if cells.leq(ci, cj) {
                    // w (in cell ci) is below w2 (in cell cj)
                    assert_eq!(
                        w2.rdesc_mask() & !w.rdesc_mask(),
                        0,
                        "descent sets do not nest: {} below {}",
                        w,
                        w2
                    );
                }
            }
        }
    }
}
