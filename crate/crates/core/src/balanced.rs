//! Balanced digraphs: every arc climbs exactly one level.
//!
//! The verdict comes from the level test: a balanced digraph is strongly
//! chordal exactly when every bigraph `G_i` between consecutive levels is
//! chordal bipartite. A failing level yields an induced fence. For accepted
//! inputs the strong ordering is built by exact constrained-elimination search
//! on each weak component and then verified.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::cycles::shortest_hole;
use crate::digraph::{Digraph, VertexOrdering};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::matrix::{is_chordal_bipartite, Bigraph, ZeroOneMatrix};
use crate::recognition::{search_strong_ordering, SearchOutcome};
use crate::walks::Walk;

pub const DEFAULT_SEARCH_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelPartition {
    /// Level of each vertex; the minimum within each weak component is 1.
    pub level: Vec<usize>,
    /// Weak component index of each vertex, numbered by smallest member.
    pub component: Vec<usize>,
}

impl LevelPartition {
    pub fn component_count(&self) -> usize {
        self.component.iter().copied().max().map_or(0, |c| c + 1)
    }

    /// Vertices of component `c` at level `l`, ascending.
    pub fn part(&self, c: usize, l: usize) -> Vec<usize> {
        (0..self.level.len())
            .filter(|&v| self.component[v] == c && self.level[v] == l)
            .collect()
    }

    pub fn max_level(&self, c: usize) -> usize {
        (0..self.level.len())
            .filter(|&v| self.component[v] == c)
            .map(|v| self.level[v])
            .max()
            .unwrap_or(0)
    }
}

/// Level assignment with `level(v) = level(u) + 1` for every arc `u -> v`, or
/// `None` when some cycle has unequal forward and backward arcs (loops included).
pub fn level_partition(d: &Digraph) -> Option<LevelPartition> {
    let n = d.order();
    let t = d.transpose();
    let mut pot: Vec<Option<i64>> = vec![None; n];
    let mut component = vec![usize::MAX; n];
    let mut ncomp = 0;
    for s in 0..n {
        if pot[s].is_some() {
            continue;
        }
        pot[s] = Some(0);
        component[s] = ncomp;
        let mut members = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let pu = pot[u].expect("visited");
            let forward = d.out_row(u).ones().map(|v| (v, pu + 1));
            let backward = t.out_row(u).ones().map(|v| (v, pu - 1));
            for (v, want) in forward.chain(backward).collect::<Vec<_>>() {
                match pot[v] {
                    None => {
                        pot[v] = Some(want);
                        component[v] = ncomp;
                        members.push(v);
                        queue.push_back(v);
                    }
                    Some(p) if p != want => return None,
                    Some(_) => {}
                }
            }
        }
        let min = members.iter().map(|&v| pot[v].expect("visited")).min().expect("non-empty");
        for &v in &members {
            pot[v] = Some(pot[v].expect("visited") - min + 1);
        }
        ncomp += 1;
    }
    Some(LevelPartition {
        level: pot.into_iter().map(|p| p.expect("all visited") as usize).collect(),
        component,
    })
}

/// The block bigraph `G_i`: rows are `upper`, columns are `lower`.
fn block(d: &Digraph, upper: &[usize], lower: &[usize]) -> Bigraph {
    Bigraph::new(ZeroOneMatrix::from_fn(upper.len(), lower.len(), |a, b| {
        d.has_arc(upper[a], lower[b])
    }))
}

/// First failing level pair, returned as an induced fence (cycle order).
fn failing_level(d: &Digraph, p: &LevelPartition) -> Option<Vec<usize>> {
    for c in 0..p.component_count() {
        for l in 1..p.max_level(c) {
            let (upper, lower) = (p.part(c, l), p.part(c, l + 1));
            let b = block(d, &upper, &lower);
            if is_chordal_bipartite(&b).is_some() {
                continue;
            }
            let g = b.to_graph();
            let adj: Vec<FixedBitSet> = (0..g.order()).map(|v| g.out_row(v).clone()).collect();
            let mut all = FixedBitSet::with_capacity(g.order());
            all.insert_range(..);
            let hole = shortest_hole(&adj, &all, 6).expect("non-chordal bigraph has a long hole");
            let r = upper.len();
            return Some(
                hole.into_iter()
                    .map(|v| if v < r { upper[v] } else { lower[v - r] })
                    .collect(),
            );
        }
    }
    None
}

/// Rotates a fence cycle so that it starts at its smallest source vertex and
/// matches the generator's labelling (even positions are sources).
fn fence_embedding(d: &Digraph, cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    let start = (0..len)
        .filter(|&i| d.has_arc(cycle[i], cycle[(i + 1) % len]))
        .min_by_key(|&i| cycle[i])
        .expect("fence has sources");
    (0..len).map(|j| cycle[(start + j) % len]).collect()
}

fn fence_certificate(d: &Digraph, cycle: &[usize]) -> Certificate {
    Certificate::Obstruction {
        spec: FamilySpec::Fence { len: cycle.len() },
        embedding: fence_embedding(d, cycle),
    }
}

/// Level-test verdict without constructing an ordering.
pub fn is_strongly_chordal_balanced(d: &Digraph) -> Result<bool> {
    let p = level_partition(d).ok_or(Error::NotBalanced)?;
    Ok(failing_level(d, &p).is_none())
}

/// Decides a balanced digraph with default search budget.
pub fn strongly_chordal_balanced(d: &Digraph) -> Result<Certificate> {
    strongly_chordal_balanced_with(d, DEFAULT_SEARCH_BUDGET)
}

/// Rejections carry a fence. An accepted digraph whose ordering search runs
/// out of `budget` nodes in some component yields `LimitExceeded`; use
/// [`is_strongly_chordal_balanced`] for the verdict alone.
pub fn strongly_chordal_balanced_with(d: &Digraph, budget: usize) -> Result<Certificate> {
    let p = level_partition(d).ok_or(Error::NotBalanced)?;
    if let Some(cycle) = failing_level(d, &p) {
        return Ok(fence_certificate(d, &cycle));
    }
    let mut order = Vec::with_capacity(d.order());
    for c in 0..p.component_count() {
        let verts: Vec<usize> = (0..d.order()).filter(|&v| p.component[v] == c).collect();
        let sub = d.induced_ordered(&verts);
        match search_strong_ordering(&sub, budget) {
            SearchOutcome::Found(o) => order.extend(o.as_slice().iter().map(|&i| verts[i])),
            SearchOutcome::Impossible => {
                return Ok(Certificate::Unwitnessed {
                    reason: format!(
                        "every level bigraph is chordal but component {c} has no strong ordering; \
                         this contradicts the level test and indicates a defect"
                    ),
                })
            }
            SearchOutcome::BudgetExhausted => {
                return Err(Error::LimitExceeded {
                    what: "strong ordering search",
                    size: verts.len(),
                    limit: budget,
                })
            }
        }
    }
    let ordering = VertexOrdering::new(order).expect("components partition the vertices");
    debug_assert!(d.gamma_witness(&ordering).is_none());
    Ok(Certificate::StrongOrdering(ordering))
}

/// Positions of a Γ in a level-sorted ordering, checked to fall inside one
/// block: rows at level `l`, columns at level `l + 1`, same component.
pub fn gamma_within_one_block(d: &Digraph, p: &LevelPartition, ord: &VertexOrdering) -> bool {
    match d.gamma_witness(ord) {
        None => true,
        Some(w) => {
            let o = ord.as_slice();
            let (a, b, c, e) = (o[w.row_lo], o[w.row_hi], o[w.col_lo], o[w.col_hi]);
            let same_comp = [b, c, e].iter().all(|&v| p.component[v] == p.component[a]);
            same_comp
                && p.level[a] == p.level[b]
                && p.level[c] == p.level[a] + 1
                && p.level[e] == p.level[a] + 1
        }
    }
}

/// An induced fence as a closed walk, if any.
///
/// Balanced digraphs are searched level by level (a fence alternates between
/// two consecutive levels). Other digraphs go through a depth-first search
/// over induced alternating paths.
pub fn find_fence(d: &Digraph) -> Option<Walk> {
    let cycle = match level_partition(d) {
        Some(p) => failing_level(d, &p).map(|c| fence_embedding(d, &c)),
        None => alternating_hole(d),
    }?;
    Some(Walk::closed_from(&cycle))
}

fn alternating_hole(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.order();
    let one_way = |u: usize, v: usize| d.has_arc(u, v) && !d.has_arc(v, u);
    let touches = |u: usize, v: usize| d.has_arc(u, v) || d.has_arc(v, u);
    let mut best: Option<Vec<usize>> = None;

    // Path p_0 .. p_m with p_0 the smallest vertex and a source; even positions are sources.
    fn extend(
        d: &Digraph,
        path: &mut Vec<usize>,
        best: &mut Option<Vec<usize>>,
        one_way: &dyn Fn(usize, usize) -> bool,
        touches: &dyn Fn(usize, usize) -> bool,
    ) {
        let m = path.len();
        if best.as_ref().is_some_and(|b| m >= b.len()) {
            return;
        }
        let last = path[m - 1];
        let s = path[0];
        for x in s + 1..d.order() {
            if d.has_loop(x) || path.contains(&x) {
                continue;
            }
            let linked = if m % 2 == 1 { one_way(last, x) } else { one_way(x, last) };
            if !linked {
                continue;
            }
            let inner_clear = path[1..m.max(2) - 1].iter().all(|&y| !touches(x, y));
            if !inner_clear {
                continue;
            }
            let closes = (m + 1).is_multiple_of(2) && m + 1 >= 6 && one_way(s, x);
            if closes {
                let mut cyc = path.clone();
                cyc.push(x);
                if best.as_ref().is_none_or(|b| cyc.len() < b.len()) {
                    *best = Some(cyc);
                }
                continue;
            }
            if m > 1 && touches(x, s) {
                continue;
            }
            path.push(x);
            extend(d, path, best, one_way, touches);
            path.pop();
        }
    }

    for s in 0..n {
        if d.has_loop(s) {
            continue;
        }
        let mut path = vec![s];
        extend(d, &mut path, &mut best, &one_way, &touches);
    }
    best
}

/// `D_G`: every edge of the bigraph oriented from red to blue. Reds are
/// `0..r`, blues follow.
pub fn orient_bigraph(b: &Bigraph) -> Digraph {
    let r = b.red_count();
    let mut d = Digraph::empty(r + b.blue_count());
    for i in 0..r {
        for j in b.biadjacency().row(i).ones() {
            d.add_arc(i, r + j);
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilyId;

    #[test]
    fn level_examples() {
        let p = Digraph::build(3, &[(0, 1), (2, 1)]).unwrap();
        assert_eq!(level_partition(&p).unwrap().level, vec![1, 2, 1]);
        let c3 = Digraph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(level_partition(&c3).is_none());
        let fence = FamilySpec::Fence { len: 6 }.generate().unwrap();
        assert_eq!(level_partition(&fence).unwrap().level, vec![1, 2, 1, 2, 1, 2]);
        let lp = Digraph::build(1, &[(0, 0)]).unwrap();
        assert!(level_partition(&lp).is_none());
    }

    #[test]
    fn components_normalise_separately() {
        let d = Digraph::build(4, &[(0, 1), (2, 3)]).unwrap();
        let p = level_partition(&d).unwrap();
        assert_eq!(p.level, vec![1, 2, 1, 2]);
        assert_eq!(p.component, vec![0, 0, 1, 1]);
    }

    #[test]
    fn oriented_paths_are_accepted() {
        for mask in 0u32..16 {
            let arcs: Vec<(usize, usize)> = (0..4)
                .map(|i| if mask >> i & 1 == 1 { (i, i + 1) } else { (i + 1, i) })
                .collect();
            let d = Digraph::build(5, &arcs).unwrap();
            let cert = strongly_chordal_balanced(&d).unwrap();
            assert!(cert.accepts() && cert.verify(&d));
        }
    }

    #[test]
    fn fences_are_rejected() {
        let fence = FamilySpec::Fence { len: 6 }.generate().unwrap();
        match strongly_chordal_balanced(&fence).unwrap() {
            Certificate::Obstruction { spec, embedding } => {
                assert_eq!(spec.id(), FamilyId::Fence);
                assert_eq!(fence.induced_ordered(&embedding), fence);
            }
            other => panic!("{other:?}"),
        }
        let c6 = Bigraph::new(ZeroOneMatrix::from_fn(3, 3, |i, j| j == i || j == (i + 1) % 3));
        let dg = orient_bigraph(&c6);
        assert!(matches!(strongly_chordal_balanced(&dg).unwrap(), Certificate::Obstruction { .. }));
    }

    #[test]
    fn unbalanced_input_is_an_error() {
        let c3 = Digraph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(strongly_chordal_balanced(&c3), Err(Error::NotBalanced));
    }

    #[test]
    fn find_fence_examples() {
        let fence = FamilySpec::Fence { len: 6 }.generate().unwrap();
        let w = find_fence(&fence).unwrap();
        assert_eq!(w.len(), 6);
        let tree = Digraph::build(4, &[(0, 1), (2, 1), (2, 3)]).unwrap();
        assert_eq!(find_fence(&tree), None);
    }

    #[test]
    fn long_chord_leaves_a_shorter_fence() {
        // A chord 0 -> 5 on the 8-fence creates an induced 6-fence 0,5,4,3,2,1.
        let mut d = FamilySpec::Fence { len: 8 }.generate().unwrap();
        d.add_arc(0, 5);
        let w = find_fence(&d).unwrap();
        assert_eq!(w.len(), 6);
        let verts = &w.vertices[..6];
        assert_eq!(d.induced_ordered(verts), FamilySpec::Fence { len: 6 }.generate().unwrap());
    }

    #[test]
    fn fence_search_without_levels() {
        // A 6-fence plus a directed triangle elsewhere is not balanced.
        let mut d = FamilySpec::Fence { len: 6 }.generate().unwrap();
        let mut e = Digraph::empty(9);
        for (u, v) in d.arcs() {
            e.add_arc(u, v);
        }
        e.add_arc(6, 7);
        e.add_arc(7, 8);
        e.add_arc(8, 6);
        d = e;
        assert!(level_partition(&d).is_none());
        let w = find_fence(&d).unwrap();
        assert_eq!(w.len(), 6);
    }
}
