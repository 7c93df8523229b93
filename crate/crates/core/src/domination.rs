//! General domination over a strong ordering.
//!
//! Neighbourhoods are open, except that a loop makes a vertex its own
//! neighbour. The greedy labels vertices `C`, `D` and `N`; the `C` vertices have
//! pairwise disjoint neighbourhoods and `|C| = |D|`, so the pair certifies its
//! own optimality.

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, VertexOrdering};
use crate::error::{Error, Result};

/// Labels received by one vertex. `n` is idempotent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labels {
    pub c: u32,
    pub d: u32,
    pub n: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationResult {
    /// Dominating set, in the order chosen.
    pub d: Vec<usize>,
    /// Vertices with pairwise disjoint neighbourhoods, in the order chosen.
    pub c: Vec<usize>,
    pub labels: Vec<Labels>,
}

impl DominationResult {
    pub fn size(&self) -> usize {
        self.d.len()
    }
}

/// Adjacency lists of a symmetric graph with loops, for inputs too large for a
/// dense matrix. Stored compressed: the list of `v` is
/// `targets[offsets[v]..offsets[v + 1]]`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseGraph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl SparseGraph {
    fn from_arcs(n: usize, mut arcs: Vec<(usize, usize)>) -> Self {
        arcs.sort_unstable();
        arcs.dedup();
        let mut offsets = vec![0; n + 1];
        for &(u, _) in &arcs {
            offsets[u + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        SparseGraph {
            offsets,
            targets: arcs.into_iter().map(|(_, v)| v).collect(),
        }
    }

    /// Each edge `{u, v}` is stored in both lists; `u == v` is a loop.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut arcs = Vec::with_capacity(2 * edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            arcs.push((u, v));
            if u != v {
                arcs.push((v, u));
            }
        }
        Ok(SparseGraph::from_arcs(n, arcs))
    }

    pub fn from_digraph(g: &Digraph) -> Result<Self> {
        if !g.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(SparseGraph::from_arcs(g.order(), g.arcs().collect()))
    }

    pub fn order(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn nbrs(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree_sum(&self) -> usize {
        self.targets.len()
    }
}

fn undominatable(g: &SparseGraph) -> Result<()> {
    let empty: Vec<usize> = (0..g.order()).filter(|&v| g.nbrs(v).is_empty()).collect();
    if empty.is_empty() {
        Ok(())
    } else {
        Err(Error::Undominatable(empty))
    }
}

fn greedy(g: &SparseGraph, ord: &VertexOrdering) -> DominationResult {
    let n = g.order();
    let pos = ord.positions();
    let mut labels = vec![Labels::default(); n];
    let (mut d, mut c) = (Vec::new(), Vec::new());
    for &x in ord.as_slice() {
        if labels[x].n {
            continue;
        }
        let y = *g.nbrs(x).iter().max_by_key(|&&u| pos[u]).expect("checked non-empty");
        labels[x].c += 1;
        labels[y].d += 1;
        c.push(x);
        d.push(y);
        for &z in g.nbrs(y) {
            labels[z].n = true;
        }
        debug_assert!(labels[x].n, "x is a neighbour of its own last neighbour");
    }
    DominationResult { d, c, labels }
}

/// Checks domination, disjointness of the `C` neighbourhoods and `|C| = |D|`.
pub fn check_duality(g: &SparseGraph, r: &DominationResult) -> Result<()> {
    let n = g.order();
    let mut in_d = vec![false; n];
    for &y in &r.d {
        in_d[y] = true;
    }
    if let Some(v) = (0..n).find(|&v| !g.nbrs(v).iter().any(|&u| in_d[u])) {
        return Err(Error::DualityGap(format!("vertex {v} is not dominated")));
    }
    let mut owner = vec![usize::MAX; n];
    for &x in &r.c {
        for &z in g.nbrs(x) {
            if owner[z] != usize::MAX {
                return Err(Error::DualityGap(format!(
                    "vertices {} and {x} share neighbour {z}",
                    owner[z]
                )));
            }
            owner[z] = x;
        }
    }
    if r.c.len() != r.d.len() {
        return Err(Error::DualityGap(format!("|C| = {} but |D| = {}", r.c.len(), r.d.len())));
    }
    Ok(())
}

/// Minimum general dominating set of a strongly chordal symmetric digraph.
pub fn general_dominate(g: &Digraph, ord: &VertexOrdering) -> Result<DominationResult> {
    let sparse = SparseGraph::from_digraph(g)?;
    if ord.len() != g.order() {
        return Err(Error::InvalidOrdering { n: g.order() });
    }
    if let Some(w) = g.gamma_witness(ord) {
        return Err(Error::NotStrongOrdering(w));
    }
    undominatable(&sparse)?;
    let r = greedy(&sparse, ord);
    debug_assert!(check_duality(&sparse, &r).is_ok());
    Ok(r)
}

/// Linear-time variant for sparse graphs. The ordering is not scanned for Γ;
/// instead the output is checked against [`check_duality`], which proves
/// optimality whenever it passes.
pub fn general_dominate_sparse(g: &SparseGraph, ord: &VertexOrdering) -> Result<DominationResult> {
    if ord.len() != g.order() {
        return Err(Error::InvalidOrdering { n: g.order() });
    }
    undominatable(g)?;
    let r = greedy(g, ord);
    check_duality(g, &r)?;
    Ok(r)
}

pub const ORACLE_LIMIT: usize = 20;

fn masks(g: &Digraph, what: &'static str) -> Result<Vec<u32>> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.order();
    if n > ORACLE_LIMIT {
        return Err(Error::LimitExceeded { what, size: n, limit: ORACLE_LIMIT });
    }
    Ok((0..n)
        .map(|v| g.out_row(v).ones().fold(0u32, |m, u| m | 1 << u))
        .collect())
}

/// Smallest general dominating set by enumeration in order of size; `None`
/// when some vertex has an empty neighbourhood.
pub fn brute_force_min_domination(g: &Digraph) -> Result<Option<(usize, Vec<usize>)>> {
    let nb = masks(g, "domination oracle")?;
    let n = nb.len();
    if nb.contains(&0) {
        return Ok(None);
    }
    let dominates = |set: u32| (0..n).all(|v| nb[v] & set != 0);
    for size in 0..=n {
        let mut found = None;
        for_each_subset(n, size, &mut |set| {
            if found.is_none() && dominates(set) {
                found = Some(set);
            }
        });
        if let Some(set) = found {
            let verts = (0..n).filter(|&v| set >> v & 1 == 1).collect();
            return Ok(Some((size, verts)));
        }
    }
    unreachable!("the full vertex set dominates when no neighbourhood is empty")
}

/// Subsets of `0..n` with `size` elements in lexicographic order of their members.
fn for_each_subset(n: usize, size: usize, f: &mut impl FnMut(u32)) {
    fn go(start: usize, n: usize, left: usize, acc: u32, f: &mut impl FnMut(u32)) {
        if left == 0 {
            f(acc);
            return;
        }
        for v in start..=n - left {
            go(v + 1, n, left - 1, acc | 1 << v, f);
        }
    }
    if size <= n {
        go(0, n, size, 0, f);
    }
}

/// Largest set of vertices with pairwise disjoint neighbourhoods. Vertices with
/// empty neighbourhoods are counted too, as they conflict with nothing.
pub fn max_disjoint_neighbourhoods_oracle(g: &Digraph) -> Result<usize> {
    let nb = masks(g, "disjoint-neighbourhood oracle")?;
    fn go(v: usize, nb: &[u32], used: u32, count: usize, best: &mut usize) {
        if count + (nb.len() - v) <= *best {
            return;
        }
        if v == nb.len() {
            *best = count;
            return;
        }
        if nb[v] & used == 0 {
            go(v + 1, nb, used | nb[v], count + 1, best);
        }
        go(v + 1, nb, used, count, best);
    }
    let mut best = 0;
    go(0, &nb, 0, 0, &mut best);
    Ok(best)
}
