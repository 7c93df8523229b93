//! Generators and membership tests for the forbidden families and the
//! tournament shapes used throughout the crate.
//!
//! Symmetric families (vertices `0..n` around a cycle unless noted):
//!
//! | id | shape |
//! |----|-------|
//! | F1 | reflexive cycle, `n ≥ 4` |
//! | F2 | irreflexive cycle, `n ≥ 3`, `n ≠ 4` |
//! | F3 | cycle, `n ≥ 5`, one loop at 0 |
//! | F4 | cycle, `n ≥ 5`, loops at 0 and `n-1` |
//! | F5 | even cycle, `n ≥ 6`, loop at 0, fan at 0 |
//! | F6 | cycle, loops at 0 and `n-1`, fan at 0 |
//! | F7 | cycle, loops at 0 and `n-1`, fans at 0 and `n-1` |
//! | F8 | weak trampoline on `2k` vertices |
//! | F9 | path of length `≥ 2`, loops at both ends |
//!
//! The fan at 0 is the chords `0i` for even `i` in `2..=n-2`; the fan at `n-1`
//! is the chords `(n-1)(n-j)` for odd `j` with `n-j` in `1..=n-3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::isomorphism::is_isomorphic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    T0,
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    RefTriangle,
    Fence,
    TT,
    TTStar,
    TTBlowup,
}

impl FamilyId {
    pub const ALL: [FamilyId; 21] = [
        FamilyId::F1,
        FamilyId::F2,
        FamilyId::F3,
        FamilyId::F4,
        FamilyId::F5,
        FamilyId::F6,
        FamilyId::F7,
        FamilyId::F8,
        FamilyId::F9,
        FamilyId::T0,
        FamilyId::T1,
        FamilyId::T2,
        FamilyId::T3,
        FamilyId::T4,
        FamilyId::T5,
        FamilyId::T6,
        FamilyId::RefTriangle,
        FamilyId::Fence,
        FamilyId::TT,
        FamilyId::TTStar,
        FamilyId::TTBlowup,
    ];

    /// The symmetric obstruction families.
    pub const SYMMETRIC: [FamilyId; 9] = [
        FamilyId::F1,
        FamilyId::F2,
        FamilyId::F3,
        FamilyId::F4,
        FamilyId::F5,
        FamilyId::F6,
        FamilyId::F7,
        FamilyId::F8,
        FamilyId::F9,
    ];

    /// Minimal tournament obstructions.
    pub const TOURNAMENT: [FamilyId; 8] = [
        FamilyId::T0,
        FamilyId::T1,
        FamilyId::T2,
        FamilyId::T3,
        FamilyId::T4,
        FamilyId::T5,
        FamilyId::T6,
        FamilyId::RefTriangle,
    ];

    fn t_index(self) -> Option<u8> {
        match self {
            FamilyId::T1 => Some(1),
            FamilyId::T2 => Some(2),
            FamilyId::T3 => Some(3),
            FamilyId::T4 => Some(4),
            FamilyId::T5 => Some(5),
            FamilyId::T6 => Some(6),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidFamily(format!("unknown family {s:?}")))
    }
}

/// A family member with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum FamilySpec {
    F1 { len: usize },
    F2 { len: usize },
    F3 { len: usize },
    F4 { len: usize },
    F5 { len: usize },
    F6 { len: usize },
    F7 { len: usize },
    /// Core `x_0..x_{k-1}` is `0..k`, rim `y_i = k + i` sees `x_i` and `x_{i+1}`.
    /// Rim vertices in `unlooped` lose their loops; `matching` pairs rim indices
    /// inside `unlooped`.
    F8 {
        k: usize,
        unlooped: Vec<usize>,
        matching: Vec<(usize, usize)>,
    },
    /// Path `0 - 1 - ... - len`.
    F9 { len: usize },
    T0,
    /// Tournament `T_index` (1..=6) with loops on an acyclic set that creates no
    /// `T_0`. Looped `T_1` must loop vertex 4, or loop both or neither of 0, 1
    /// and likewise of 2, 3.
    T { index: u8, loops: Vec<usize> },
    RefTriangle,
    Fence { len: usize },
    /// Transitive tournament, `u -> v` for `u < v`.
    TT { n: usize, loops: Vec<usize> },
    /// Transitive tournament with the source-to-sink arc reversed.
    TTStar { n: usize, loops: Vec<usize> },
    /// `TT_n` with its `i`-th vertex (1-based) blown up into `TT*_k`.
    TTBlowup {
        n: usize,
        i: usize,
        k: usize,
        loops: Vec<usize>,
    },
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn fan_at_zero(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=n.saturating_sub(2)).step_by(2).map(|i| (0, i))
}

fn fan_at_last(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (3..n).step_by(2).map(move |j| (n - 1, n - j))
}

const T_ARCS: [&[(usize, usize)]; 6] = [
    &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 0), (4, 1)],
    &[(0, 1), (0, 4), (1, 2), (1, 4), (2, 0), (2, 4), (3, 0), (3, 1), (3, 2), (4, 3)],
    &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3), (2, 4), (3, 0), (4, 1)],
    &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4), (4, 0), (4, 2)],
    &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 3), (3, 1), (3, 4), (4, 0), (4, 2)],
    &[
        (0, 5),
        (1, 0),
        (2, 0),
        (2, 1),
        (2, 4),
        (2, 5),
        (3, 0),
        (3, 1),
        (3, 2),
        (3, 5),
        (4, 0),
        (4, 1),
        (4, 3),
        (4, 5),
        (5, 1),
    ],
];

fn t0() -> Digraph {
    Digraph::build(
        4,
        &[(0, 0), (3, 3), (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 0)],
    )
    .expect("fixed arcs")
}

fn check_loops(n: usize, loops: &[usize]) -> Result<()> {
    match loops.iter().find(|&&v| v >= n) {
        Some(v) => Err(bad(format!("loop vertex {v} outside 0..{n}"))),
        None => Ok(()),
    }
}

/// True when the vertices in `set` span no directed cycle (loops aside).
pub fn is_acyclic_set(d: &Digraph, set: &[usize]) -> bool {
    let (sub, _) = d.induced(set);
    let sub = sub.without_loops();
    let n = sub.order();
    let mut indeg: Vec<usize> = (0..n).map(|v| sub.in_nbrs(v).len()).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for w in sub.out_nbrs(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    seen == n
}

/// An induced copy of `T_0`, as a 4-vertex subset in ascending order.
pub fn find_t0(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.order();
    let pattern = t0();
    let loops = d.loops();
    if loops.len() < 2 {
        return None;
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for e in c + 1..n {
                    let s = [a, b, c, e];
                    if s.iter().filter(|&&v| d.has_loop(v)).count() == 2
                        && is_isomorphic(&d.induced(&s).0, &pattern)
                    {
                        return Some(s.to_vec());
                    }
                }
            }
        }
    }
    None
}

fn transitive(n: usize) -> Digraph {
    Digraph::from_fn(n, |u, v| u < v)
}

impl FamilySpec {
    pub fn id(&self) -> FamilyId {
        match self {
            FamilySpec::F1 { .. } => FamilyId::F1,
            FamilySpec::F2 { .. } => FamilyId::F2,
            FamilySpec::F3 { .. } => FamilyId::F3,
            FamilySpec::F4 { .. } => FamilyId::F4,
            FamilySpec::F5 { .. } => FamilyId::F5,
            FamilySpec::F6 { .. } => FamilyId::F6,
            FamilySpec::F7 { .. } => FamilyId::F7,
            FamilySpec::F8 { .. } => FamilyId::F8,
            FamilySpec::F9 { .. } => FamilyId::F9,
            FamilySpec::T0 => FamilyId::T0,
            FamilySpec::T { index, .. } => match index {
                1 => FamilyId::T1,
                2 => FamilyId::T2,
                3 => FamilyId::T3,
                4 => FamilyId::T4,
                5 => FamilyId::T5,
                _ => FamilyId::T6,
            },
            FamilySpec::RefTriangle => FamilyId::RefTriangle,
            FamilySpec::Fence { .. } => FamilyId::Fence,
            FamilySpec::TT { .. } => FamilyId::TT,
            FamilySpec::TTStar { .. } => FamilyId::TTStar,
            FamilySpec::TTBlowup { .. } => FamilyId::TTBlowup,
        }
    }

    /// Plain `T_i` without loops.
    pub fn t(index: u8) -> Self {
        FamilySpec::T {
            index,
            loops: Vec::new(),
        }
    }

    /// The canonical labelled member.
    pub fn generate(&self) -> Result<Digraph> {
        match self {
            FamilySpec::F1 { len } => {
                if *len < 4 {
                    return Err(bad("F1 needs cycle length at least 4"));
                }
                let mut e = cycle_edges(*len);
                e.extend((0..*len).map(|v| (v, v)));
                Digraph::build_symmetric(*len, &e)
            }
            FamilySpec::F2 { len } => {
                if *len < 3 || *len == 4 {
                    return Err(bad("F2 needs cycle length at least 3 and not 4"));
                }
                Digraph::build_symmetric(*len, &cycle_edges(*len))
            }
            FamilySpec::F3 { len } => {
                if *len < 5 {
                    return Err(bad("F3 needs cycle length at least 5"));
                }
                let mut e = cycle_edges(*len);
                e.push((0, 0));
                Digraph::build_symmetric(*len, &e)
            }
            FamilySpec::F4 { len } => {
                if *len < 5 {
                    return Err(bad("F4 needs cycle length at least 5"));
                }
                let mut e = cycle_edges(*len);
                e.extend([(0, 0), (len - 1, len - 1)]);
                Digraph::build_symmetric(*len, &e)
            }
            FamilySpec::F5 { len } => {
                if *len < 6 || len % 2 == 1 {
                    return Err(bad("F5 needs an even cycle length at least 6"));
                }
                let mut e = cycle_edges(*len);
                e.push((0, 0));
                e.extend(fan_at_zero(*len));
                Digraph::build_symmetric(*len, &e)
            }
            FamilySpec::F6 { len } => {
                if *len < 5 {
                    return Err(bad("F6 needs cycle length at least 5"));
                }
                let mut e = cycle_edges(*len);
                e.extend([(0, 0), (len - 1, len - 1)]);
                e.extend(fan_at_zero(*len));
                Digraph::build_symmetric(*len, &e)
            }
            FamilySpec::F7 { len } => {
                if *len < 5 {
                    return Err(bad("F7 needs cycle length at least 5"));
                }
                let mut e = cycle_edges(*len);
                e.extend([(0, 0), (len - 1, len - 1)]);
                e.extend(fan_at_zero(*len));
                e.extend(fan_at_last(*len));
                Digraph::build_symmetric(*len, &e)
            }
            FamilySpec::F8 {
                k,
                unlooped,
                matching,
            } => weak_trampoline(*k, unlooped, matching),
            FamilySpec::F9 { len } => {
                if *len < 2 {
                    return Err(bad("F9 needs path length at least 2"));
                }
                let mut e: Vec<(usize, usize)> = (0..*len).map(|i| (i, i + 1)).collect();
                e.extend([(0, 0), (*len, *len)]);
                Digraph::build_symmetric(len + 1, &e)
            }
            FamilySpec::T0 => Ok(t0()),
            FamilySpec::T { index, loops } => {
                if !(1..=6).contains(index) {
                    return Err(bad("tournament index must be in 1..=6"));
                }
                let arcs = T_ARCS[usize::from(*index) - 1];
                let n = if *index == 6 { 6 } else { 5 };
                check_loops(n, loops)?;
                let d = Digraph::build(n, arcs)?;
                if !is_acyclic_set(&d, loops) {
                    return Err(bad("tournament loops must sit on an acyclic set"));
                }
                // Vertex 4 is the only non-peak vertex of T_1, with out-neighbours
                // 0, 1 and in-neighbours 2, 3. Without a loop on 4, looping exactly
                // one vertex of either pair makes T_1 strongly chordal.
                let looped = |v: usize| loops.contains(&v);
                if *index == 1 && !looped(4) && (looped(0) != looped(1) || looped(2) != looped(3)) {
                    return Err(bad(
                        "looped T1 without a loop on 4 must loop both or neither of 0, 1 and of 2, 3",
                    ));
                }
                let d = d.with_loops(loops);
                if find_t0(&d).is_some() {
                    return Err(bad("tournament loops must not create T0"));
                }
                Ok(d)
            }
            FamilySpec::RefTriangle => Digraph::build(
                3,
                &[(0, 1), (1, 2), (2, 0), (0, 0), (1, 1), (2, 2)],
            ),
            FamilySpec::Fence { len } => {
                if *len < 6 || len % 2 == 1 {
                    return Err(bad("fence needs an even length at least 6"));
                }
                let arcs: Vec<(usize, usize)> = (0..*len)
                    .step_by(2)
                    .flat_map(|i| [(i, i + 1), (i, (i + len - 1) % len)])
                    .collect();
                Digraph::build(*len, &arcs)
            }
            FamilySpec::TT { n, loops } => {
                check_loops(*n, loops)?;
                Ok(transitive(*n).with_loops(loops))
            }
            FamilySpec::TTStar { n, loops } => {
                if *n < 3 {
                    return Err(bad("TT* needs at least 3 vertices"));
                }
                FamilySpec::TTBlowup {
                    n: 1,
                    i: 1,
                    k: *n,
                    loops: loops.clone(),
                }
                .generate()
            }
            FamilySpec::TTBlowup { n, i, k, loops } => {
                if *n < 1 || !(1..=*n).contains(i) || *k < 3 {
                    return Err(bad("TT_n(i,k) needs 1 <= i <= n and k >= 3"));
                }
                let total = n + k - 1;
                check_loops(total, loops)?;
                let (lo, hi) = (i - 1, i - 1 + k - 1);
                let mut d = transitive(total);
                d.remove_arc(lo, hi);
                d.add_arc(hi, lo);
                Ok(d.with_loops(loops))
            }
        }
    }

    /// Every member of `id` on exactly `n` vertices, up to the listed parameters.
    pub fn members(id: FamilyId, n: usize) -> Vec<FamilySpec> {
        let one = |spec: FamilySpec| -> Vec<FamilySpec> {
            match spec.generate() {
                Ok(d) if d.order() == n => vec![spec],
                _ => Vec::new(),
            }
        };
        match id {
            FamilyId::F1 => one(FamilySpec::F1 { len: n }),
            FamilyId::F2 => one(FamilySpec::F2 { len: n }),
            FamilyId::F3 => one(FamilySpec::F3 { len: n }),
            FamilyId::F4 => one(FamilySpec::F4 { len: n }),
            FamilyId::F5 => one(FamilySpec::F5 { len: n }),
            FamilyId::F6 => one(FamilySpec::F6 { len: n }),
            FamilyId::F7 => one(FamilySpec::F7 { len: n }),
            FamilyId::F9 => one(FamilySpec::F9 {
                len: n.saturating_sub(1),
            }),
            FamilyId::T0 => one(FamilySpec::T0),
            FamilyId::RefTriangle => one(FamilySpec::RefTriangle),
            FamilyId::Fence => one(FamilySpec::Fence { len: n }),
            FamilyId::F8 => {
                if n % 2 == 1 || n < 6 {
                    return Vec::new();
                }
                let k = n / 2;
                let mut out = Vec::new();
                for mask in 0u32..(1 << k) {
                    let unlooped: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
                    for matching in matchings(&unlooped) {
                        out.push(FamilySpec::F8 {
                            k,
                            unlooped: unlooped.clone(),
                            matching,
                        });
                    }
                }
                out
            }
            FamilyId::T1 | FamilyId::T2 | FamilyId::T3 | FamilyId::T4 | FamilyId::T5 | FamilyId::T6 => {
                let index = id.t_index().expect("tournament id");
                let size = if index == 6 { 6 } else { 5 };
                if n != size {
                    return Vec::new();
                }
                (0u32..(1 << n))
                    .map(|mask| FamilySpec::T {
                        index,
                        loops: (0..n).filter(|&v| mask >> v & 1 == 1).collect(),
                    })
                    .filter(|s| s.generate().is_ok())
                    .collect()
            }
            FamilyId::TT | FamilyId::TTStar | FamilyId::TTBlowup => Vec::new(),
        }
    }
}

/// All sets of disjoint pairs drawn from `items` (including the empty set).
fn matchings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = matchings(rest);
    for (idx, &partner) in rest.iter().enumerate() {
        let remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != idx)
            .map(|(_, &v)| v)
            .collect();
        for mut m in matchings(&remaining) {
            m.insert(0, (first, partner));
            out.push(m);
        }
    }
    out
}

fn weak_trampoline(k: usize, unlooped: &[usize], matching: &[(usize, usize)]) -> Result<Digraph> {
    if k < 3 {
        return Err(bad("weak trampoline needs k at least 3"));
    }
    let mut s = vec![false; k];
    for &i in unlooped {
        if i >= k {
            return Err(bad(format!("rim index {i} outside 0..{k}")));
        }
        s[i] = true;
    }
    let mut matched = vec![false; k];
    for &(a, b) in matching {
        if a >= k || b >= k || a == b || !s[a] || !s[b] {
            return Err(bad(format!(
                "matching pair ({a}, {b}) must join two distinct unlooped rim vertices"
            )));
        }
        if matched[a] || matched[b] {
            return Err(bad("matching pairs must be disjoint"));
        }
        matched[a] = true;
        matched[b] = true;
    }
    let mut g = Digraph::empty(2 * k);
    for a in 0..k {
        g.add_edge(a, a);
        for b in a + 1..k {
            g.add_edge(a, b);
        }
        let y = k + a;
        g.add_edge(y, a);
        g.add_edge(y, (a + 1) % k);
        if !s[a] {
            g.add_edge(y, y);
        }
    }
    for &(a, b) in matching {
        g.add_edge(k + a, k + b);
    }
    Ok(g)
}

fn degree(g: &Digraph, v: usize) -> usize {
    g.out_row(v).count_ones(..) - usize::from(g.has_loop(v))
}

/// Recovers parameters of a weak trampoline from its structure.
fn trampoline_spec(g: &Digraph) -> Option<FamilySpec> {
    let n = g.order();
    if n < 6 || n % 2 == 1 || !g.is_symmetric() {
        return None;
    }
    let k = n / 2;
    let core: Vec<usize> = (0..n)
        .filter(|&v| g.has_loop(v) && degree(g, v) == k + 1)
        .collect();
    if core.len() != k {
        return None;
    }
    let rim: Vec<usize> = (0..n).filter(|v| !core.contains(v)).collect();
    // Walk the rim cycle x_0 y_0 x_1 y_1 ...
    let core_nbrs = |y: usize| -> Vec<usize> { core.iter().copied().filter(|&x| g.has_arc(y, x)).collect() };
    let mut xs = vec![core[0]];
    let mut ys = Vec::new();
    let mut used = vec![false; n];
    for _ in 0..k {
        let x = *xs.last().expect("non-empty");
        let y = rim
            .iter()
            .copied()
            .find(|&y| !used[y] && core_nbrs(y).len() == 2 && core_nbrs(y).contains(&x))?;
        used[y] = true;
        ys.push(y);
        let next = core_nbrs(y).into_iter().find(|&z| z != x)?;
        xs.push(next);
    }
    if xs[k] != xs[0] {
        return None;
    }
    let pos = |v: usize| ys.iter().position(|&y| y == v);
    let unlooped: Vec<usize> = (0..k).filter(|&i| !g.has_loop(ys[i])).collect();
    let mut matching = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if g.has_arc(ys[i], ys[j]) {
                matching.push((i, pos(ys[j])?));
            }
        }
    }
    Some(FamilySpec::F8 {
        k,
        unlooped,
        matching,
    })
}

/// Recovers `TT_n(i,k)` parameters (with loops) for tournaments one arc
/// reversal away from transitive.
fn tournament_shape(g: &Digraph) -> Option<(Vec<usize>, Option<(usize, usize)>)> {
    let n = g.order();
    if !crate::tournaments::is_tournament(g) {
        return None;
    }
    let plain = g.without_loops();
    let by_out = |d: &Digraph| -> Option<Vec<usize>> {
        // Transitive iff out-degrees are n-1, n-2, ..., 0.
        let mut verts: Vec<usize> = (0..n).collect();
        verts.sort_by_key(|&v| std::cmp::Reverse(degree(d, v)));
        verts
            .iter()
            .enumerate()
            .all(|(p, &v)| degree(d, v) == n - 1 - p)
            .then_some(verts)
    };
    if let Some(order) = by_out(&plain) {
        return Some((order, None));
    }
    let mut best: Option<(usize, Vec<usize>, (usize, usize))> = None;
    for u in 0..n {
        for v in 0..n {
            if u == v || !plain.has_arc(u, v) {
                continue;
            }
            let mut flipped = plain.clone();
            flipped.remove_arc(u, v);
            flipped.add_arc(v, u);
            if let Some(order) = by_out(&flipped) {
                let pu = order.iter().position(|&x| x == u).expect("vertex");
                let pv = order.iter().position(|&x| x == v).expect("vertex");
                // the flipped arc now runs v -> u, so v precedes u
                let span = pu - pv;
                if span >= 2 && best.as_ref().is_none_or(|b| span > b.0) {
                    best = Some((span, order, (pv, pu)));
                }
            }
        }
    }
    best.map(|(_, order, range)| (order, Some(range)))
}

fn tt_spec(g: &Digraph, id: FamilyId) -> Option<FamilySpec> {
    let (order, range) = tournament_shape(g)?;
    let n = g.order();
    let loops: Vec<usize> = (0..n).filter(|&p| g.has_loop(order[p])).collect();
    let spec = match (id, range) {
        (FamilyId::TT, None) => FamilySpec::TT { n, loops },
        (FamilyId::TTStar, Some((0, hi))) if hi == n - 1 => FamilySpec::TTStar { n, loops },
        (FamilyId::TTBlowup, Some((lo, hi))) => FamilySpec::TTBlowup {
            n: n - (hi - lo),
            i: lo + 1,
            k: hi - lo + 1,
            loops,
        },
        _ => return None,
    };
    (spec.generate().ok()? == g.induced_ordered(&order)).then_some(spec)
}

/// Parameters under which `g` is isomorphic to a member of `id`.
pub fn is_member_of_family(g: &Digraph, id: FamilyId) -> Option<FamilySpec> {
    match id {
        FamilyId::TT | FamilyId::TTStar | FamilyId::TTBlowup => tt_spec(g, id),
        FamilyId::F8 => {
            let spec = trampoline_spec(g)?;
            is_isomorphic(&spec.generate().ok()?, g).then_some(spec)
        }
        _ => FamilySpec::members(id, g.order())
            .into_iter()
            .find(|s| s.generate().is_ok_and(|m| is_isomorphic(&m, g))),
    }
}

/// The first family (in [`FamilyId::ALL`] order) that `g` belongs to.
pub fn identify(g: &Digraph, ids: &[FamilyId]) -> Option<FamilySpec> {
    ids.iter().find_map(|&id| is_member_of_family(g, id))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_examples() {
        let f1 = FamilySpec::F1 { len: 4 }.generate().unwrap();
        assert!(f1.is_reflexive() && f1.is_symmetric() && f1.arc_count() == 8);

        let f9 = FamilySpec::F9 { len: 2 }.generate().unwrap();
        assert_eq!(f9, Digraph::build_symmetric(3, &[(0, 1), (1, 2), (0, 0), (2, 2)]).unwrap());

        let sun = FamilySpec::F8 {
            k: 3,
            unlooped: vec![],
            matching: vec![],
        }
        .generate()
        .unwrap();
        assert!(sun.is_reflexive());
        assert_eq!((0..6).map(|v| degree(&sun, v)).collect::<Vec<_>>(), vec![4, 4, 4, 2, 2, 2]);

        let star5 = FamilySpec::TTStar { n: 5, loops: vec![] }.generate().unwrap();
        let mut expected = transitive(5);
        expected.remove_arc(0, 4);
        expected.add_arc(4, 0);
        assert_eq!(star5, expected);

        let fence = FamilySpec::Fence { len: 6 }.generate().unwrap();
        for v in 0..6 {
            let outs = fence.out_nbrs(v).len();
            let ins = fence.in_nbrs(v).len();
            assert_eq!((outs, ins), if v % 2 == 0 { (2, 0) } else { (0, 2) });
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(FamilySpec::F1 { len: 3 }.generate().is_err());
        assert!(FamilySpec::F2 { len: 4 }.generate().is_err());
        assert!(FamilySpec::F5 { len: 7 }.generate().is_err());
        assert!(FamilySpec::F9 { len: 1 }.generate().is_err());
        assert!(FamilySpec::Fence { len: 4 }.generate().is_err());
        let bad_matching = FamilySpec::F8 {
            k: 3,
            unlooped: vec![0],
            matching: vec![(0, 1)],
        };
        assert!(bad_matching.generate().is_err());
        assert!(FamilySpec::T { index: 7, loops: vec![] }.generate().is_err());
        assert!(FamilySpec::T { index: 1, loops: vec![0] }.generate().is_err());
        assert!(FamilySpec::T { index: 1, loops: vec![4] }.generate().is_ok());
        assert!(FamilySpec::T { index: 1, loops: vec![0, 1] }.generate().is_ok());
        assert!(FamilySpec::T { index: 1, loops: vec![0, 2] }.generate().is_err());
        // 0,1,2 span a directed triangle in T3
        assert!(FamilySpec::T { index: 3, loops: vec![0, 1, 3] }.generate().is_err());
    }

    #[test]
    fn t6_is_two_triangles_one_dominating_the_other() {
        let t6 = FamilySpec::t(6).generate().unwrap();
        let comps = crate::tournaments::strong_components(&t6);
        assert_eq!(comps, vec![vec![2, 3, 4], vec![0, 1, 5]]);
        let description = {
            let a = [0usize, 1, 5];
            let b = [2usize, 3, 4];
            let mut d = Digraph::empty(6);
            for &(x, y) in &[(0, 5), (5, 1), (1, 0), (2, 4), (4, 3), (3, 2)] {
                d.add_arc(x, y);
            }
            for &x in &b {
                for &y in &a {
                    d.add_arc(x, y);
                }
            }
            d
        };
        assert!(is_isomorphic(&t6, &description));
    }

    #[test]
    fn membership_examples() {
        let c5 = FamilySpec::F1 { len: 5 }.generate().unwrap();
        assert_eq!(is_member_of_family(&c5, FamilyId::F1), Some(FamilySpec::F1 { len: 5 }));
        let c4 = Digraph::build_symmetric(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(FamilyId::ALL.iter().all(|&id| is_member_of_family(&c4, id).is_none()));
        let t6 = FamilySpec::t(6).generate().unwrap().relabel(&[3, 5, 0, 1, 4, 2]);
        assert_eq!(is_member_of_family(&t6, FamilyId::T6), Some(FamilySpec::t(6)));
    }

    #[test]
    fn trampoline_membership_survives_relabelling() {
        let spec = FamilySpec::F8 {
            k: 4,
            unlooped: vec![0, 1, 3],
            matching: vec![(1, 3)],
        };
        let g = spec.generate().unwrap().relabel(&[7, 2, 5, 0, 1, 6, 3, 4]);
        let found = is_member_of_family(&g, FamilyId::F8).unwrap();
        assert!(is_isomorphic(&found.generate().unwrap(), &g));
    }

    #[test]
    fn tournament_shapes_round_trip() {
        for spec in [
            FamilySpec::TT { n: 4, loops: vec![1] },
            FamilySpec::TTStar { n: 5, loops: vec![0, 4] },
            FamilySpec::TTBlowup { n: 3, i: 2, k: 4, loops: vec![] },
        ] {
            let member = spec.generate().unwrap();
            let n = member.order();
            let perm: Vec<usize> = (0..n).map(|v| (n + 1 - v) % n).collect();
            let g = member.relabel(&perm);
            let found = is_member_of_family(&g, spec.id()).unwrap();
            assert!(is_isomorphic(&found.generate().unwrap(), &g));
        }
    }

    #[test]
    fn matchings_are_complete() {
        assert_eq!(matchings(&[]).len(), 1);
        assert_eq!(matchings(&[0, 1]).len(), 2);
        assert_eq!(matchings(&[0, 1, 2, 3]).len(), 10);
    }

    #[test]
    fn family_ids_parse() {
        assert_eq!("f9".parse::<FamilyId>().unwrap(), FamilyId::F9);
        assert_eq!("TTStar".parse::<FamilyId>().unwrap(), FamilyId::TTStar);
        assert!("F10".parse::<FamilyId>().is_err());
    }
}
