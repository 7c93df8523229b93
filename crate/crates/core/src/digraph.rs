//! Dense digraphs with loops, vertex orderings and the Γ scan.
//!
//! A [`Digraph`] is its adjacency matrix: row `u` is a bitset of out-neighbours
//! and the diagonal records loops. Symmetry, reflexivity and the tournament
//! property are always computed, never stored.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = usize::BITS as usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    rows: Vec<FixedBitSet>,
}

impl Digraph {
    /// Arcless, loopless digraph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a digraph from an arc list. `(v, v)` adds a loop; repeated arcs are harmless.
    pub fn build(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::empty(n);
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            d.rows[u].insert(v);
        }
        Ok(d)
    }

    /// Builds a symmetric digraph from undirected edges (`(v, v)` is a loop).
    pub fn build_symmetric(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            d.rows[u].insert(v);
            d.rows[v].insert(u);
        }
        Ok(d)
    }

    pub fn from_fn(n: usize, mut arc: impl FnMut(usize, usize) -> bool) -> Self {
        let mut d = Digraph::empty(n);
        for u in 0..n {
            for v in 0..n {
                if arc(u, v) {
                    d.rows[u].insert(v);
                }
            }
        }
        d
    }

    /// Square boolean matrix; every row must have length `rows.len()`.
    pub fn from_matrix(rows: &[Vec<bool>]) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("row has {} entries, expected {}", r.len(), n),
                });
            }
        }
        Ok(Digraph::from_fn(n, |u, v| rows[u][v]))
    }

    pub(crate) fn add_arc(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
    }

    pub(crate) fn remove_arc(&mut self, u: usize, v: usize) {
        self.rows[u].set(v, false);
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn has_loop(&self, v: usize) -> bool {
        self.rows[v].contains(v)
    }

    /// Out-neighbourhood of `v` as a bitset (contains `v` iff `v` has a loop).
    #[inline]
    pub fn out_row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn out_nbrs(&self, v: usize) -> Vec<usize> {
        self.rows[v].ones().collect()
    }

    pub fn in_nbrs(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.rows[u].contains(v)).collect()
    }

    /// In-neighbourhood of `v` as a bitset.
    pub fn in_row(&self, v: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.n);
        for u in 0..self.n {
            if self.rows[u].contains(v) {
                s.insert(u);
            }
        }
        s
    }

    /// Neighbourhood in a symmetric digraph; includes `v` exactly when `v` is reflexive.
    pub fn neighbours(&self, v: usize) -> Result<Vec<usize>> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(self.out_nbrs(v))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| self.rows[u].ones().all(|v| self.rows[v].contains(u)))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|v| self.has_loop(v))
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n).all(|v| !self.has_loop(v))
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.has_loop(v)).collect()
    }

    /// Number of non-loop arcs.
    pub fn arc_count(&self) -> usize {
        (0..self.n)
            .map(|u| self.rows[u].count_ones(..) - usize::from(self.has_loop(u)))
            .sum()
    }

    /// All arcs `(u, v)` in row-major order, loops included.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.rows[u].ones().map(move |v| (u, v)))
    }

    pub fn transpose(&self) -> Digraph {
        Digraph::from_fn(self.n, |u, v| self.has_arc(v, u))
    }

    /// Copy with every loop removed.
    pub fn without_loops(&self) -> Digraph {
        let mut d = self.clone();
        for v in 0..self.n {
            d.rows[v].set(v, false);
        }
        d
    }

    /// Copy with loops exactly on `loops`.
    pub fn with_loops(&self, loops: &[usize]) -> Digraph {
        let mut d = self.without_loops();
        for &v in loops {
            d.rows[v].insert(v);
        }
        d
    }

    /// Induced subgraph on `s`, relabelled in ascending original order.
    /// The second component maps old ids to new ids.
    pub fn induced(&self, s: &[usize]) -> (Digraph, Vec<Option<usize>>) {
        let mut keep: Vec<usize> = s.iter().copied().filter(|&v| v < self.n).collect();
        keep.sort_unstable();
        keep.dedup();
        let mut map = vec![None; self.n];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = Some(i);
        }
        let sub = Digraph::from_fn(keep.len(), |a, b| self.has_arc(keep[a], keep[b]));
        (sub, map)
    }

    /// Induced subgraph whose vertex `i` is `verts[i]` (order preserved, no dedup).
    pub fn induced_ordered(&self, verts: &[usize]) -> Digraph {
        Digraph::from_fn(verts.len(), |a, b| self.has_arc(verts[a], verts[b]))
    }

    /// The digraph whose vertex `i` is the old vertex `ord[i]`; its adjacency
    /// matrix is the simultaneous permutation of ours.
    pub fn permuted(&self, ord: &VertexOrdering) -> Digraph {
        self.induced_ordered(ord.as_slice())
    }

    /// Relabels old vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        let mut inv = vec![0; self.n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        Digraph::from_fn(self.n, |a, b| self.has_arc(inv[a], inv[b]))
    }

    /// Adjacency matrix as `0`/`1` rows.
    pub fn to_matrix_rows(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_arc(u, v)).collect())
            .collect()
    }

    /// First Γ submatrix of the simultaneously permuted matrix, scanning
    /// `(row_lo, row_hi, col_lo, col_hi)` lexicographically.
    ///
    /// Panics if `ord` has a different length than the digraph.
    pub fn gamma_witness(&self, ord: &VertexOrdering) -> Option<GammaWitness> {
        assert_eq!(ord.len(), self.n, "ordering length differs from vertex count");
        let rows = permuted_rows(self, ord.as_slice());
        first_gamma(&rows)
    }

    pub fn is_gamma_free(&self, ord: &VertexOrdering) -> bool {
        self.gamma_witness(ord).is_none()
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Digraph(n = {})", self.n)?;
        for u in 0..self.n {
            let line: String = (0..self.n)
                .map(|v| if self.has_arc(u, v) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Rows of the permuted matrix, indexed by position, as word vectors.
pub(crate) fn permuted_rows(d: &Digraph, ord: &[usize]) -> Vec<Vec<usize>> {
    let n = ord.len();
    let words = n.div_ceil(WORD).max(1);
    ord.iter()
        .map(|&u| {
            let mut row = vec![0usize; words];
            for (pos, &v) in ord.iter().enumerate() {
                if d.has_arc(u, v) {
                    row[pos / WORD] |= 1 << (pos % WORD);
                }
            }
            row
        })
        .collect()
}

/// Lexicographically first Γ in a square matrix given as word rows.
pub(crate) fn first_gamma(rows: &[Vec<usize>]) -> Option<GammaWitness> {
    for lo in 0..rows.len() {
        for hi in lo + 1..rows.len() {
            if let Some((c, d)) = gamma_columns(&rows[lo], &rows[hi]) {
                return Some(GammaWitness {
                    row_lo: lo,
                    row_hi: hi,
                    col_lo: c,
                    col_hi: d,
                });
            }
        }
    }
    None
}

/// Smallest `(c, d)` with `c < d`, `c` in both rows and `d` in `upper` only.
#[inline]
pub(crate) fn gamma_columns(upper: &[usize], lower: &[usize]) -> Option<(usize, usize)> {
    let mut common_min = None;
    for (w, (&a, &b)) in upper.iter().zip(lower).enumerate() {
        let common = a & b;
        if common != 0 {
            common_min = Some(w * WORD + common.trailing_zeros() as usize);
            break;
        }
    }
    let c = common_min?;
    let start = c + 1;
    for w in start / WORD..upper.len() {
        let mut diff = upper[w] & !lower[w];
        if w == start / WORD {
            let shift = start % WORD;
            diff &= usize::MAX.checked_shl(shift as u32).unwrap_or(0);
        }
        if diff != 0 {
            return Some((c, w * WORD + diff.trailing_zeros() as usize));
        }
    }
    None
}

/// A permutation of `0..n`; position `i` holds the `i`-th vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexOrdering(Vec<usize>);

impl VertexOrdering {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(Error::InvalidOrdering { n });
            }
            seen[v] = true;
        }
        Ok(VertexOrdering(order))
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// `positions()[v]` is the index of `v` in the ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        VertexOrdering(v)
    }
}

impl TryFrom<Vec<usize>> for VertexOrdering {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        VertexOrdering::new(v)
    }
}

impl From<VertexOrdering> for Vec<usize> {
    fn from(o: VertexOrdering) -> Self {
        o.0
    }
}

/// Positions (in an ordering) of a Γ submatrix: ones at `(row_lo, col_lo)`,
/// `(row_lo, col_hi)`, `(row_hi, col_lo)` and a zero at `(row_hi, col_hi)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaWitness {
    pub row_lo: usize,
    pub row_hi: usize,
    pub col_lo: usize,
    pub col_hi: usize,
}

impl fmt::Display for GammaWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Γ at rows {},{} and columns {},{}",
            self.row_lo, self.row_hi, self.col_lo, self.col_hi
        )
    }
}
