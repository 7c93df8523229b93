//! Rectangular 0/1 matrices, bigraphs and total balance.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::cycles::shortest_hole;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZeroOneMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FixedBitSet>,
}

impl ZeroOneMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ZeroOneMatrix {
            rows,
            cols,
            data: vec![FixedBitSet::with_capacity(cols); rows],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = ZeroOneMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.data[i].insert(j);
                }
            }
        }
        m
    }

    /// The adjacency matrix of `d`.
    pub fn of_digraph(d: &Digraph) -> Self {
        ZeroOneMatrix::from_fn(d.order(), d.order(), |u, v| d.has_arc(u, v))
    }

    pub fn identity(n: usize) -> Self {
        ZeroOneMatrix::from_fn(n, n, |i, j| i == j)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].contains(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn row(&self, i: usize) -> &FixedBitSet {
        &self.data[i]
    }

    pub fn transpose(&self) -> Self {
        ZeroOneMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        ZeroOneMatrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    /// Square, size at least 3, and its bigraph is a single cycle.
    pub fn is_cycle_matrix(&self) -> bool {
        let n = self.rows;
        if n != self.cols || n < 3 {
            return false;
        }
        let col_sums_two = (0..n).all(|j| (0..n).filter(|&i| self.get(i, j)).count() == 2);
        if !col_sums_two || !(0..n).all(|i| self.data[i].count_ones(..) == 2) {
            return false;
        }
        // 2-regular; connected iff walking from row 0 visits every row.
        let mut seen_rows = 1;
        let (mut r, mut c) = (0, self.data[0].minimum().expect("two ones"));
        loop {
            let next_r = (0..n).find(|&i| i != r && self.get(i, c)).expect("two ones");
            if next_r == 0 {
                break;
            }
            seen_rows += 1;
            c = self.data[next_r].ones().find(|&j| j != c).expect("two ones");
            r = next_r;
        }
        seen_rows == n
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            s.extend((0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }));
            s.push('\n');
        }
        s
    }
}

/// Reds index rows of `m`, blues index its columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bigraph {
    m: ZeroOneMatrix,
    cols: Vec<FixedBitSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Red(usize),
    Blue(usize),
}

impl Bigraph {
    pub fn new(m: ZeroOneMatrix) -> Self {
        let t = m.transpose();
        Bigraph { cols: t.data, m }
    }

    pub fn red_count(&self) -> usize {
        self.m.rows
    }

    pub fn blue_count(&self) -> usize {
        self.m.cols
    }

    pub fn biadjacency(&self) -> &ZeroOneMatrix {
        &self.m
    }

    pub fn has_edge(&self, red: usize, blue: usize) -> bool {
        self.m.get(red, blue)
    }

    /// Undirected graph on reds `0..r` followed by blues `r..r+b`.
    pub fn to_graph(&self) -> Digraph {
        let r = self.red_count();
        let mut g = Digraph::empty(r + self.blue_count());
        for i in 0..r {
            for j in self.m.row(i).ones() {
                g.add_edge(i, r + j);
            }
        }
        g
    }
}

/// `B(D)`: a red and a blue copy of each vertex, with `u_red v_blue` per arc `uv`.
pub fn split_bigraph(d: &Digraph) -> Bigraph {
    Bigraph::new(ZeroOneMatrix::of_digraph(d))
}

fn chain(mut sets: Vec<FixedBitSet>) -> bool {
    sets.sort_by_key(|s| s.count_ones(..));
    sets.windows(2).all(|w| w[0].is_subset(&w[1]))
}

/// Simple-vertex elimination. Returns the elimination order when the bigraph
/// is chordal bipartite. Isolated vertices go first; otherwise the lowest
/// `(colour, id)` simple vertex, reds before blues.
pub fn is_chordal_bipartite(b: &Bigraph) -> Option<Vec<Side>> {
    let (r, c) = (b.red_count(), b.blue_count());
    let mut reds = FixedBitSet::with_capacity(r);
    reds.insert_range(..);
    let mut blues = FixedBitSet::with_capacity(c);
    blues.insert_range(..);
    let mut order = Vec::with_capacity(r + c);

    let red_simple = |i: usize, reds: &FixedBitSet, blues: &FixedBitSet| {
        chain(
            b.m.row(i)
                .intersection(blues)
                .map(|j| b.cols[j].intersection(reds).collect())
                .collect(),
        )
    };
    let blue_simple = |j: usize, reds: &FixedBitSet, blues: &FixedBitSet| {
        chain(
            b.cols[j]
                .intersection(reds)
                .map(|i| b.m.row(i).intersection(blues).collect())
                .collect(),
        )
    };

    while order.len() < r + c {
        let isolated = reds
            .ones()
            .find(|&i| b.m.row(i).is_disjoint(&blues))
            .map(Side::Red)
            .or_else(|| blues.ones().find(|&j| b.cols[j].is_disjoint(&reds)).map(Side::Blue));
        let pick = isolated
            .or_else(|| reds.ones().find(|&i| red_simple(i, &reds, &blues)).map(Side::Red))
            .or_else(|| blues.ones().find(|&j| blue_simple(j, &reds, &blues)).map(Side::Blue))?;
        match pick {
            Side::Red(i) => reds.set(i, false),
            Side::Blue(j) => blues.set(j, false),
        }
        order.push(pick);
    }
    Some(order)
}

pub fn is_totally_balanced(m: &ZeroOneMatrix) -> bool {
    is_chordal_bipartite(&Bigraph::new(m.clone())).is_some()
}

pub const DEFAULT_CYCLE_LIMIT: usize = 16;

/// Rows and columns of a cycle submatrix, found as a shortest chordless cycle
/// of length at least 6 in the bigraph. Refuses matrices with more than
/// `size_limit` rows or columns.
pub fn find_cycle_submatrix(
    m: &ZeroOneMatrix,
    size_limit: usize,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let size = m.rows.max(m.cols);
    if size > size_limit {
        return Err(Error::LimitExceeded {
            what: "cycle submatrix search",
            size,
            limit: size_limit,
        });
    }
    Ok(cycle_submatrix(m))
}

pub(crate) fn cycle_submatrix(m: &ZeroOneMatrix) -> Option<(Vec<usize>, Vec<usize>)> {
    let g = Bigraph::new(m.clone()).to_graph();
    let adj: Vec<FixedBitSet> = (0..g.order()).map(|v| g.out_row(v).clone()).collect();
    let mut all = FixedBitSet::with_capacity(g.order());
    all.insert_range(..);
    let hole = shortest_hole(&adj, &all, 6)?;
    let mut rows: Vec<usize> = hole.iter().copied().filter(|&v| v < m.rows).collect();
    let mut cols: Vec<usize> = hole.iter().filter(|&&v| v >= m.rows).map(|&v| v - m.rows).collect();
    rows.sort_unstable();
    cols.sort_unstable();
    Some((rows, cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle3() -> ZeroOneMatrix {
        ZeroOneMatrix::from_fn(3, 3, |i, j| j == i || j == (i + 1) % 3)
    }

    fn full_bigraph(r: usize, c: usize) -> Bigraph {
        Bigraph::new(ZeroOneMatrix::from_fn(r, c, |_, _| true))
    }

    #[test]
    fn split_examples() {
        let lp = Digraph::build(1, &[(0, 0)]).unwrap();
        let b = split_bigraph(&lp);
        assert!(b.has_edge(0, 0));
        let c3 = Digraph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let m = split_bigraph(&c3).biadjacency().clone();
        assert_eq!(m, ZeroOneMatrix::from_fn(3, 3, |i, j| j == (i + 1) % 3));
        let rc3 = Digraph::build(3, &[(0, 1), (1, 2), (2, 0), (0, 0), (1, 1), (2, 2)]).unwrap();
        assert!(split_bigraph(&rc3).biadjacency().is_cycle_matrix());
    }

    #[test]
    fn chordal_bipartite_examples() {
        assert!(is_chordal_bipartite(&full_bigraph(2, 2)).is_some());
        assert!(is_chordal_bipartite(&Bigraph::new(cycle3())).is_none());
        assert!(is_chordal_bipartite(&Bigraph::new(ZeroOneMatrix::zeros(3, 2))).is_some());
    }

    #[test]
    fn elimination_prefers_isolated_then_reds() {
        let m = ZeroOneMatrix::from_fn(2, 2, |i, j| i == 0 && j == 0);
        let order = is_chordal_bipartite(&Bigraph::new(m)).unwrap();
        assert_eq!(order[0], Side::Red(1));
        assert_eq!(order[1], Side::Blue(1));
        assert_eq!(order[2], Side::Red(0));
    }

    #[test]
    fn totally_balanced_examples() {
        assert!(!is_totally_balanced(&cycle3()));
        let perm = ZeroOneMatrix::from_fn(4, 4, |i, j| j == (i + 2) % 4);
        assert!(is_totally_balanced(&perm));
    }

    #[test]
    fn cycle_submatrix_examples() {
        assert_eq!(
            find_cycle_submatrix(&cycle3(), 16).unwrap(),
            Some((vec![0, 1, 2], vec![0, 1, 2]))
        );
        assert_eq!(find_cycle_submatrix(&ZeroOneMatrix::identity(5), 16).unwrap(), None);
        assert!(find_cycle_submatrix(&ZeroOneMatrix::identity(17), 16).is_err());
    }

    #[test]
    fn cycle_matrix_shape() {
        assert!(cycle3().is_cycle_matrix());
        // two disjoint 2x2 blocks of ones: two ones per line, but not one cycle
        let blocks = ZeroOneMatrix::from_fn(4, 4, |i, j| i / 2 == j / 2);
        assert!(!blocks.is_cycle_matrix());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix(max: usize) -> impl Strategy<Value = ZeroOneMatrix> {
            (1..=max, 1..=max).prop_flat_map(|(r, c)| {
                proptest::collection::vec(any::<bool>(), r * c)
                    .prop_map(move |bits| ZeroOneMatrix::from_fn(r, c, |i, j| bits[i * c + j]))
            })
        }

        proptest! {
            #[test]
            fn unbalanced_iff_cycle_submatrix(m in matrix(6)) {
                let found = find_cycle_submatrix(&m, 16).unwrap();
                prop_assert_eq!(!is_totally_balanced(&m), found.is_some());
                if let Some((r, c)) = found {
                    prop_assert!(m.submatrix(&r, &c).is_cycle_matrix());
                }
            }
        }
    }
}
