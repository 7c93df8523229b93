//! Chordless cycles and shortest paths in undirected graphs given as bitset rows.
//! Loops in the rows are ignored.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

pub(crate) type Rows = [FixedBitSet];

fn adjacent(adj: &Rows, u: usize, v: usize) -> bool {
    u != v && adj[u].contains(v)
}

/// Shortest path from `a` to `b` using only vertices in `allowed`.
pub(crate) fn shortest_path(
    adj: &Rows,
    allowed: &FixedBitSet,
    a: usize,
    b: usize,
) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            let mut path = vec![b];
            let mut cur = b;
            while cur != a {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in adj[x].ones() {
            if y != x && allowed.contains(y) && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// A shortest chordless cycle of length at least `min_len` (4 or 6) inside
/// `allowed`. With `min_len = 6` the graph on `allowed` must be bipartite.
/// Ties go to the first vertex triple found.
pub(crate) fn shortest_hole(adj: &Rows, allowed: &FixedBitSet, min_len: usize) -> Option<Vec<usize>> {
    debug_assert!(min_len == 4 || min_len == 6);
    let mut best: Option<Vec<usize>> = None;
    for v in allowed.ones() {
        let nbrs: Vec<usize> = adj[v].ones().filter(|&x| x != v && allowed.contains(x)).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if adjacent(adj, a, b) {
                    continue;
                }
                let mut room = allowed.clone();
                room.set(v, false);
                for x in adj[v].ones() {
                    if x != a && x != b {
                        room.set(x, false);
                    }
                }
                if min_len == 6 {
                    for x in adj[a].intersection(&adj[b]) {
                        room.set(x, false);
                    }
                }
                if let Some(path) = shortest_path(adj, &room, a, b) {
                    let len = path.len() + 1;
                    if len >= min_len && best.as_ref().is_none_or(|h| len < h.len()) {
                        let mut hole = vec![v];
                        hole.extend(path);
                        best = Some(hole);
                    }
                }
            }
        }
    }
    best
}

/// A shortest odd cycle (hence chordless) inside `allowed`.
pub(crate) fn shortest_odd_cycle(adj: &Rows, allowed: &FixedBitSet) -> Option<Vec<usize>> {
    let mut best: Option<(usize, usize, usize, usize)> = None; // (len, root, x, y)
    for r in allowed.ones() {
        let dist = bfs(adj, allowed, r).0;
        for x in allowed.ones() {
            for y in adj[x].ones() {
                if x < y && allowed.contains(y) && dist[x] != usize::MAX && dist[x] == dist[y] {
                    let len = 2 * dist[x] + 1;
                    if best.is_none_or(|b| len < b.0) {
                        best = Some((len, r, x, y));
                    }
                }
            }
        }
    }
    let (_, r, x, y) = best?;
    let parent = bfs(adj, allowed, r).1;
    let walk_up = |mut z: usize| {
        let mut p = vec![z];
        while z != r {
            z = parent[z];
            p.push(z);
        }
        p
    };
    let mut cycle = walk_up(x);
    cycle.reverse();
    let right = walk_up(y);
    cycle.extend(&right[..right.len() - 1]);
    debug_assert_eq!(cycle.len() % 2, 1);
    Some(cycle)
}

fn bfs(adj: &Rows, allowed: &FixedBitSet, r: usize) -> (Vec<usize>, Vec<usize>) {
    let n = adj.len();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[r] = 0;
    parent[r] = r;
    let mut queue = VecDeque::from([r]);
    while let Some(x) = queue.pop_front() {
        for y in adj[x].ones() {
            if y != x && allowed.contains(y) && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    (dist, parent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(n: usize, edges: &[(usize, usize)]) -> Vec<FixedBitSet> {
        let mut r = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            r[u].insert(v);
            r[v].insert(u);
        }
        r
    }

    fn all(n: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(n);
        s.insert_range(..);
        s
    }

    #[test]
    fn holes() {
        let c6 = rows(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(shortest_hole(&c6, &all(6), 6).unwrap().len(), 6);
        assert_eq!(shortest_hole(&c6, &all(6), 4).unwrap().len(), 6);
        let mut with_chord = c6.clone();
        with_chord[0].insert(3);
        with_chord[3].insert(0);
        assert_eq!(shortest_hole(&with_chord, &all(6), 4).unwrap().len(), 4);
        assert_eq!(shortest_hole(&with_chord, &all(6), 6), None);
        let k4 = rows(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(shortest_hole(&k4, &all(4), 4), None);
    }

    #[test]
    fn odd_cycles() {
        let c5 = rows(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)]);
        let c = shortest_odd_cycle(&c5, &all(7)).unwrap();
        assert_eq!(c.len(), 5);
        for i in 0..5 {
            assert!(c5[c[i]].contains(c[(i + 1) % 5]));
        }
        let c4 = rows(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(shortest_odd_cycle(&c4, &all(4)), None);
    }
}
