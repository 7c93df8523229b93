//! Walks, strong chords and the search for even closed walks without one.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// A walk `v_0 v_1 ... v_k`. A closed walk repeats `v_0` as its last entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Walk {
    pub vertices: Vec<usize>,
    pub closed: bool,
}

impl Walk {
    pub fn open(vertices: Vec<usize>) -> Self {
        Walk {
            vertices,
            closed: false,
        }
    }

    /// Closes `cycle` by appending its first vertex.
    pub fn closed_from(cycle: &[usize]) -> Self {
        let mut vertices = cycle.to_vec();
        if let Some(&first) = cycle.first() {
            vertices.push(first);
        }
        Walk {
            vertices,
            closed: true,
        }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Checks adjacency of consecutive entries (arcs either way count for
    /// symmetric hosts) and closure.
    pub fn validate(&self, g: &Digraph) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::InvalidWalk("walk has no vertices".into()));
        }
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= g.order()) {
            return Err(Error::InvalidWalk(format!("vertex {v} is not in the graph")));
        }
        for w in self.vertices.windows(2) {
            if !g.has_arc(w[0], w[1]) {
                return Err(Error::InvalidWalk(format!("{} and {} are not adjacent", w[0], w[1])));
            }
        }
        if self.closed && self.vertices.first() != self.vertices.last() {
            return Err(Error::InvalidWalk("closed walk must end where it starts".into()));
        }
        Ok(())
    }
}

/// Whether the walk has an edge (possibly a loop) between positions whose
/// index difference is odd and not ±1; taken modulo the length for closed walks.
pub fn has_strong_chord(g: &Digraph, w: &Walk) -> Result<bool> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    w.validate(g)?;
    let k = w.len();
    let v = &w.vertices;
    let positions = if w.closed { k } else { k + 1 };
    for i in 0..positions {
        for j in i + 1..positions {
            let strong = if w.closed {
                let d = (j - i) % k;
                d % 2 == 1 && d != 1 && d != k - 1
            } else {
                let d = j - i;
                d % 2 == 1 && d != 1
            };
            if strong && g.has_arc(v[i], v[j]) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Some even closed walk of length in `6..=max_len` without a strong chord.
///
/// Walks are enumerated depth-first with their minimum vertex first, pruning
/// any prefix that already contains a strong chord; rotation invariance of
/// chords makes the minimum-first restriction harmless. Sound at every bound;
/// whether `2n` always suffices is not known.
pub fn find_bad_walk(g: &Digraph, max_len: usize) -> Result<Option<Walk>> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.order();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.out_nbrs(v)).collect();
    for k in (6..=max_len).step_by(2) {
        for s in 0..n {
            let mut walk = vec![s];
            if extend(g, &nbrs, k, &mut walk) {
                walk.push(s);
                return Ok(Some(Walk {
                    vertices: walk,
                    closed: true,
                }));
            }
        }
    }
    Ok(None)
}

fn extend(g: &Digraph, nbrs: &[Vec<usize>], k: usize, walk: &mut Vec<usize>) -> bool {
    let m = walk.len();
    let s = walk[0];
    if m == k {
        return g.has_arc(walk[k - 1], s);
    }
    let last = walk[m - 1];
    for &x in &nbrs[last] {
        if x < s {
            continue;
        }
        // positions i < m with odd gap ≥ 3; the pair (0, k-1) is the closing edge.
        let chorded = (0..m)
            .filter(|&i| (m - i) % 2 == 1 && m - i >= 3 && !(i == 0 && m == k - 1))
            .any(|i| g.has_arc(walk[i], x));
        if chorded {
            continue;
        }
        walk.push(x);
        if extend(g, nbrs, k, walk) {
            return true;
        }
        walk.pop();
    }
    false
}
