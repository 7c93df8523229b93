//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use strongchordal::domination::SparseGraph;
use strongchordal::{Digraph, VertexOrdering};

/// Symmetric digraph whose upper-triangle entries (loops included) are the bits of `mask`.
pub fn sym_from_mask(n: usize, mask: u64) -> Digraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Digraph::build_symmetric(n, &edges).unwrap()
}

pub fn sym_bits(n: usize) -> u32 {
    (n * (n + 1) / 2) as u32
}

/// Tournament with `u -> v` (u < v) when the pair's bit is set, loops from `loops`.
pub fn tournament_from_mask(n: usize, mask: u64, loops: u64) -> Digraph {
    let mut bit = 0;
    let mut fwd = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            fwd[u][v] = mask >> bit & 1 == 1;
            bit += 1;
        }
    }
    Digraph::from_fn(n, |u, v| {
        if u == v {
            loops >> u & 1 == 1
        } else if u < v {
            fwd[u][v]
        } else {
            !fwd[v][u]
        }
    })
}

pub fn random_sym(rng: &mut impl Rng, n: usize) -> Digraph {
    let p: f64 = rng.gen_range(0.15..0.85);
    let bits = sym_bits(n);
    let mut mask = 0u64;
    for b in 0..bits {
        if rng.gen_bool(p) {
            mask |= 1 << b;
        }
    }
    sym_from_mask(n, mask)
}

/// Random levels, arcs only from one level to the next. About half the
/// instances start from a planted alternating 6- or 8-cycle between two levels.
pub fn random_balanced(rng: &mut impl Rng, n: usize) -> Digraph {
    let depth = rng.gen_range(2..=3);
    let mut level: Vec<usize> = (0..n).map(|_| rng.gen_range(0..depth)).collect();
    let mut planted = vec![vec![false; n]; n];
    let len = if n >= 8 && rng.gen_bool(0.5) { 8 } else { 6 };
    if n >= len && rng.gen_bool(0.5) {
        let mut verts: Vec<usize> = (0..n).collect();
        for i in 0..len {
            let j = rng.gen_range(i..n);
            verts.swap(i, j);
        }
        let top = rng.gen_range(0..depth - 1);
        for (i, &v) in verts[..len].iter().enumerate() {
            level[v] = top + i % 2;
        }
        for i in 0..len {
            let (a, b) = (verts[i], verts[(i + 1) % len]);
            if level[a] < level[b] {
                planted[a][b] = true;
            } else {
                planted[b][a] = true;
            }
        }
    }
    let p: f64 = rng.gen_range(0.1..0.9);
    Digraph::from_fn(n, |u, v| level[v] == level[u] + 1 && (planted[u][v] || rng.gen_bool(p)))
}

/// Random labelled tree with each edge oriented at random.
pub fn random_oriented_tree(rng: &mut impl Rng, n: usize) -> Digraph {
    let mut arcs = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
    }
    Digraph::build(n, &arcs).unwrap()
}

/// Random intervals with small overlap, as a reflexive graph, plus the
/// right-endpoint ordering.
pub fn interval_graph(rng: &mut impl Rng, n: usize) -> (SparseGraph, VertexOrdering) {
    let span = (n as u64) * 10;
    let iv: Vec<(u64, u64)> = (0..n)
        .map(|_| {
            let l = rng.gen_range(0..span);
            (l, l + rng.gen_range(1..100))
        })
        .collect();
    let mut by_left: Vec<usize> = (0..n).collect();
    by_left.sort_by_key(|&v| iv[v]);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|v| (v, v)).collect();
    let mut active: Vec<usize> = Vec::new();
    for &v in &by_left {
        active.retain(|&u| iv[u].1 >= iv[v].0);
        edges.extend(active.iter().map(|&u| (u, v)));
        active.push(v);
    }
    let mut ord: Vec<usize> = (0..n).collect();
    ord.sort_by_key(|&v| (iv[v].1, v));
    (SparseGraph::from_edges(n, &edges).unwrap(), VertexOrdering::new(ord).unwrap())
}

/// Random reflexive tree (each vertex attached to an earlier one), ordered
/// deepest first.
pub fn reflexive_tree(rng: &mut impl Rng, n: usize) -> (SparseGraph, VertexOrdering) {
    let mut depth = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = (0..n).map(|v| (v, v)).collect();
    for v in 1..n {
        let u = rng.gen_range(v.saturating_sub(50)..v);
        depth[v] = depth[u] + 1;
        edges.push((u, v));
    }
    let mut ord: Vec<usize> = (0..n).collect();
    ord.sort_by_key(|&v| (std::cmp::Reverse(depth[v]), v));
    (SparseGraph::from_edges(n, &edges).unwrap(), VertexOrdering::new(ord).unwrap())
}

/// Matrix of `d`, rows as bit masks.
fn rows(d: &Digraph) -> Vec<u32> {
    (0..d.order())
        .map(|u| (0..d.order()).filter(|&v| d.has_arc(u, v)).fold(0, |m, v| m | 1 << v))
        .collect()
}

/// Γ-free ordering by a plain permutation search that re-checks every
/// quadruple completed by each new position. Shares no code with the library.
pub fn naive_strong_ordering(d: &Digraph) -> Option<Vec<usize>> {
    fn go(m: &[u32], perm: &mut Vec<usize>, used: u32) -> bool {
        let n = m.len();
        if perm.len() == n {
            return true;
        }
        for x in 0..n {
            if used >> x & 1 == 1 {
                continue;
            }
            perm.push(x);
            let p = perm.len() - 1;
            let a = |i: usize, j: usize| m[perm[i]] >> perm[j] & 1 == 1;
            let mut ok = true;
            'q: for i in 0..=p {
                for j in i + 1..=p {
                    for k in 0..=p {
                        for l in k + 1..=p {
                            if (j == p || l == p) && a(i, k) && a(i, l) && a(j, k) && !a(j, l) {
                                ok = false;
                                break 'q;
                            }
                        }
                    }
                }
            }
            if ok && go(m, perm, used | 1 << x) {
                return true;
            }
            perm.pop();
        }
        false
    }
    let m = rows(d);
    let mut perm = Vec::new();
    go(&m, &mut perm, 0).then_some(perm)
}

pub fn naive_strongly_chordal(d: &Digraph) -> bool {
    naive_strong_ordering(d).is_some()
}

/// Smallest set meeting every neighbourhood `nb[v]` (bit masks), by increasing size.
pub fn min_hitting(nb: &[u32]) -> Option<usize> {
    let n = nb.len();
    if nb.contains(&0) {
        return None;
    }
    (0..=n).find(|&k| {
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .any(|s| nb.iter().all(|&m| m & s != 0))
    })
}

/// Closed neighbourhoods of the underlying simple graph.
pub fn closed_nbhds(g: &Digraph) -> Vec<u32> {
    rows(g).iter().enumerate().map(|(v, &m)| m | 1 << v).collect()
}

/// Open neighbourhoods of the underlying simple graph.
pub fn open_nbhds(g: &Digraph) -> Vec<u32> {
    rows(g).iter().enumerate().map(|(v, &m)| m & !(1 << v)).collect()
}

/// Permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !cur.contains(&x) {
                cur.push(x);
                go(n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

pub mod strategies {
    use proptest::prelude::*;
    use strongchordal::Digraph;

    pub fn digraph(min_n: usize, max_n: usize) -> impl Strategy<Value = Digraph> {
        (min_n..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n)
                .prop_map(move |bits| Digraph::from_fn(n, |u, v| bits[u * n + v]))
        })
    }

    pub fn symmetric(min_n: usize, max_n: usize) -> impl Strategy<Value = Digraph> {
        (min_n..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n)
                .prop_map(move |bits| Digraph::from_fn(n, |u, v| bits[u.min(v) * n + u.max(v)]))
        })
    }

    /// A digraph with a random permutation of its vertices.
    pub fn with_perm(d: impl Strategy<Value = Digraph>) -> impl Strategy<Value = (Digraph, Vec<usize>)> {
        d.prop_flat_map(|d| {
            let n = d.order();
            (Just(d), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    }
}
