//! Simple/simplicial/peak predicates and the recognition engines.
//!
//! * [`strong_order_symmetric`]: poset-guided simple-vertex elimination, exact for
//!   symmetric digraphs.
//! * [`brute_force_strongly_chordal`]: lexicographic permutation search with
//!   prefix pruning, exact for any digraph but factorial.
//! * [`search_strong_ordering`]: exact backtracking over constrained eliminations,
//!   usually far faster than the permutation oracle.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::certificate::Certificate;
use crate::digraph::{gamma_columns, Digraph, GammaWitness, VertexOrdering};
use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_LIMIT: usize = 9;

fn full_set(n: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

fn restricted(row: &FixedBitSet, alive: &FixedBitSet) -> FixedBitSet {
    let mut r = row.clone();
    r.intersect_with(alive);
    r
}

/// True when the sets form a chain under inclusion.
fn is_chain(mut sets: Vec<FixedBitSet>) -> bool {
    sets.sort_by_key(|s| s.count_ones(..));
    sets.windows(2).all(|w| w[0].is_subset(&w[1]))
}

/// Symmetric-case simplicity of `v` inside the subgraph induced by `alive`.
pub(crate) fn is_simple_sym_within(g: &Digraph, alive: &FixedBitSet, v: usize) -> bool {
    let nbhds = g
        .out_row(v)
        .intersection(alive)
        .map(|x| restricted(g.out_row(x), alive))
        .collect();
    is_chain(nbhds)
}

pub fn is_simple_vertex_sym(g: &Digraph, v: usize) -> Result<bool> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(is_simple_sym_within(g, &full_set(g.order()), v))
}

pub fn is_simplicial_digraph(d: &Digraph, v: usize) -> bool {
    let outs = d.out_row(v);
    (0..d.order())
        .filter(|&u| d.has_arc(u, v))
        .all(|u| outs.is_subset(d.out_row(u)))
}

/// Simplicial, in-neighbours' out-neighbourhoods form a chain, and
/// out-neighbours' in-neighbourhoods form a chain.
pub fn is_simple_vertex_digraph(d: &Digraph, v: usize) -> bool {
    simple_digraph_within(d, &d.transpose(), &full_set(d.order()), v)
}

fn simple_digraph_within(d: &Digraph, t: &Digraph, alive: &FixedBitSet, v: usize) -> bool {
    let outs = restricted(d.out_row(v), alive);
    let ins = restricted(t.out_row(v), alive);
    ins.ones().all(|u| outs.is_subset(d.out_row(u))) && chains_within(d, t, alive, &ins, &outs)
}

fn chains_within(d: &Digraph, t: &Digraph, alive: &FixedBitSet, ins: &FixedBitSet, outs: &FixedBitSet) -> bool {
    is_chain(ins.ones().map(|x| restricted(d.out_row(x), alive)).collect())
        && is_chain(outs.ones().map(|x| restricted(t.out_row(x), alive)).collect())
}

fn leading_within(d: &Digraph, t: &Digraph, alive: &FixedBitSet, v: usize) -> bool {
    if d.has_loop(v) {
        return simple_digraph_within(d, t, alive, v);
    }
    let outs = restricted(d.out_row(v), alive);
    let ins = restricted(t.out_row(v), alive);
    chains_within(d, t, alive, &ins, &outs)
}

/// What the first vertex of any strong ordering must satisfy: both chain
/// conditions, and simplicial only if `v` has a loop.
///
/// Differs from [`is_simple_vertex_digraph`] on irreflexive vertices: the
/// directed triangle is strongly chordal but has no simplicial vertex.
pub fn is_leading_vertex(d: &Digraph, v: usize) -> bool {
    leading_within(d, &d.transpose(), &full_set(d.order()), v)
}

pub fn is_peak(d: &Digraph, v: usize) -> bool {
    let outs = d.out_row(v);
    (0..d.order())
        .filter(|&u| d.has_arc(u, v))
        .any(|u| !outs.is_disjoint(d.out_row(u)))
}

type Within = fn(&Digraph, &Digraph, &FixedBitSet, usize) -> bool;

/// Exhaustive elimination, memoized over remaining sets. The first success in
/// lowest-id-first order is returned.
fn eliminate_by(d: &Digraph, pred: Within) -> Option<VertexOrdering> {
    fn go(
        d: &Digraph,
        t: &Digraph,
        pred: Within,
        alive: &mut FixedBitSet,
        order: &mut Vec<usize>,
        dead: &mut HashSet<FixedBitSet>,
    ) -> bool {
        if alive.is_clear() {
            return true;
        }
        if dead.contains(alive) {
            return false;
        }
        let cands: Vec<usize> = alive.ones().filter(|&v| pred(d, t, alive, v)).collect();
        for v in cands {
            alive.set(v, false);
            order.push(v);
            if go(d, t, pred, alive, order, dead) {
                return true;
            }
            order.pop();
            alive.insert(v);
        }
        dead.insert(alive.clone());
        false
    }
    let mut alive = full_set(d.order());
    let mut order = Vec::with_capacity(d.order());
    let found = go(d, &d.transpose(), pred, &mut alive, &mut order, &mut HashSet::new());
    found.then(|| VertexOrdering::new(order).expect("elimination visits each vertex once"))
}

/// A simple ordering, if one exists.
///
/// A complete simple ordering does not imply strong chordality outside the
/// symmetric case.
pub fn simple_ordering_digraph(d: &Digraph) -> Option<VertexOrdering> {
    eliminate_by(d, simple_digraph_within)
}

/// An ordering in which every vertex is leading (see [`is_leading_vertex`]) in
/// what remains.
pub fn leading_ordering_digraph(d: &Digraph) -> Option<VertexOrdering> {
    eliminate_by(d, leading_within)
}

/// A complete elimination by simple vertices (symmetric sense), found by
/// exhaustive search rather than the poset rule.
pub fn simple_elimination_symmetric(g: &Digraph) -> Result<Option<VertexOrdering>> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(eliminate_by(g, |g, _, alive, v| is_simple_sym_within(g, alive, v)))
}

pub fn verify_strong_ordering(d: &Digraph, ord: &VertexOrdering) -> Option<GammaWitness> {
    d.gamma_witness(ord)
}

/// Strict-below relation over the vertices of a graph.
///
/// `below[y]` holds every `x` with `x ≺ y`.
#[derive(Clone, Debug)]
pub struct Poset {
    below: Vec<FixedBitSet>,
}

impl Poset {
    pub fn new(n: usize) -> Self {
        Poset {
            below: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn order(&self) -> usize {
        self.below.len()
    }

    pub fn is_below(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    pub fn add(&mut self, x: usize, y: usize) {
        self.below[y].insert(x);
    }

    /// Warshall closure.
    pub fn close(&mut self) {
        let n = self.order();
        for k in 0..n {
            let bk = self.below[k].clone();
            for y in 0..n {
                if self.below[y].contains(k) {
                    self.below[y].union_with(&bk);
                }
            }
        }
    }

    /// Minimal within `alive`: nothing alive lies strictly below.
    pub fn is_minimal(&self, v: usize, alive: &FixedBitSet) -> bool {
        self.below[v].is_disjoint(alive)
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.order()).all(|v| !self.below[v].contains(v))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.order()).all(|y| self.below[y].ones().all(|x| !self.below[x].contains(y)))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.order()).all(|z| {
            self.below[z]
                .ones()
                .all(|y| self.below[y].is_subset(&self.below[z]))
        })
    }
}

/// One run of the poset-guided elimination.
#[derive(Clone, Debug)]
pub struct Elimination {
    pub order: Vec<usize>,
    /// Remaining vertices when no simple minimal vertex existed.
    pub stalled: Option<Vec<usize>>,
    pub poset: Poset,
}

/// Poset-guided elimination on a symmetric digraph.
///
/// Each step ORs the strict neighbourhood containments among survivors into
/// the accumulated relation, closes it, and removes the lowest-id vertex that is
/// simple and minimal.
pub fn eliminate_symmetric(g: &Digraph) -> Result<Elimination> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.order();
    let mut alive = full_set(n);
    let mut poset = Poset::new(n);
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let nb: Vec<FixedBitSet> = (0..n).map(|x| restricted(g.out_row(x), &alive)).collect();
        for x in alive.ones() {
            for y in alive.ones() {
                if x != y && nb[x].is_subset(&nb[y]) && nb[x] != nb[y] {
                    poset.add(x, y);
                }
            }
        }
        poset.close();
        debug_assert!(poset.is_irreflexive() && poset.is_antisymmetric() && poset.is_transitive());

        let simple: Vec<bool> = (0..n)
            .map(|v| alive.contains(v) && is_simple_sym_within(g, &alive, v))
            .collect();
        debug_assert!(alive
            .ones()
            .filter(|&u| simple[u])
            .all(|u| poset.below[u].intersection(&alive).all(|v| simple[v])));

        match alive
            .ones()
            .find(|&v| simple[v] && poset.is_minimal(v, &alive))
        {
            Some(v) => {
                order.push(v);
                alive.set(v, false);
            }
            None => {
                return Ok(Elimination {
                    order,
                    stalled: Some(alive.ones().collect()),
                    poset,
                })
            }
        }
    }
    Ok(Elimination {
        order,
        stalled: None,
        poset,
    })
}

/// Decides a symmetric digraph. Rejections are `Unwitnessed`; see
/// [`crate::obstructions`] to upgrade them.
pub fn strong_order_symmetric(g: &Digraph) -> Result<Certificate> {
    let run = eliminate_symmetric(g)?;
    match run.stalled {
        None => {
            let ord = VertexOrdering::new(run.order).expect("elimination is a permutation");
            debug_assert!(g.gamma_witness(&ord).is_none());
            Ok(Certificate::StrongOrdering(ord))
        }
        Some(rest) => Ok(Certificate::Unwitnessed {
            reason: format!(
                "elimination stalled after {} vertices: no simple vertex among {:?}",
                run.order.len(),
                rest
            ),
        }),
    }
}

/// True when a symmetric digraph is strongly chordal.
pub fn is_strongly_chordal_symmetric(g: &Digraph) -> Result<bool> {
    Ok(eliminate_symmetric(g)?.stalled.is_none())
}

const WORD: usize = usize::BITS as usize;

/// Incrementally permuted matrix for prefix search.
struct Prefix<'a> {
    d: &'a Digraph,
    verts: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl<'a> Prefix<'a> {
    fn new(d: &'a Digraph) -> Self {
        let words = d.order().div_ceil(WORD).max(1);
        Prefix {
            d,
            verts: Vec::new(),
            rows: vec![vec![0; words]; d.order()],
        }
    }

    /// Appends `v` and reports whether the prefix stays Γ-free.
    fn push(&mut self, v: usize) -> bool {
        let p = self.verts.len();
        self.verts.push(v);
        let (w, b) = (p / WORD, 1usize << (p % WORD));
        for q in 0..=p {
            let u = self.verts[q];
            if self.d.has_arc(u, v) {
                self.rows[q][w] |= b;
            }
            if q < p && self.d.has_arc(v, u) {
                self.rows[p][q / WORD] |= 1 << (q % WORD);
            }
        }
        // Γ with row_hi = p.
        for a in 0..p {
            if gamma_columns(&self.rows[a], &self.rows[p]).is_some() {
                return false;
            }
        }
        // Γ with col_hi = p and row_hi < p.
        let with_p: Vec<usize> = (0..p).filter(|&a| self.rows[a][w] & b != 0).collect();
        for &a in &with_p {
            for bb in a + 1..p {
                if self.rows[bb][w] & b != 0 {
                    continue;
                }
                let shares_earlier = self.rows[a]
                    .iter()
                    .zip(&self.rows[bb])
                    .enumerate()
                    .any(|(i, (&x, &y))| {
                        let mut c = x & y;
                        if i == w {
                            c &= b - 1;
                        } else if i > w {
                            c = 0;
                        }
                        c != 0
                    });
                if shares_earlier {
                    return false;
                }
            }
        }
        true
    }

    fn pop(&mut self) {
        let p = self.verts.len() - 1;
        let (w, b) = (p / WORD, 1usize << (p % WORD));
        for q in 0..p {
            self.rows[q][w] &= !b;
        }
        self.rows[p].iter_mut().for_each(|x| *x = 0);
        self.verts.pop();
    }
}

/// Lexicographically first Γ-free ordering, or `None` when there is none.
pub fn brute_force_strongly_chordal(d: &Digraph, n_limit: usize) -> Result<Option<VertexOrdering>> {
    let n = d.order();
    if n > n_limit {
        return Err(Error::LimitExceeded {
            what: "permutation oracle",
            size: n,
            limit: n_limit,
        });
    }
    fn dfs(pre: &mut Prefix<'_>, used: &mut [bool]) -> bool {
        let n = used.len();
        if pre.verts.len() == n {
            return true;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            let ok = pre.push(v);
            if ok {
                used[v] = true;
                if dfs(pre, used) {
                    return true;
                }
                used[v] = false;
            }
            pre.pop();
        }
        false
    }
    let mut pre = Prefix::new(d);
    let mut used = vec![false; n];
    Ok(dfs(&mut pre, &mut used)
        .then(|| VertexOrdering::new(pre.verts.clone()).expect("search yields a permutation")))
}

/// Outcome of [`search_strong_ordering`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(VertexOrdering),
    /// The search space was exhausted: no Γ-free ordering exists.
    Impossible,
    BudgetExhausted,
}

/// Exact search for a Γ-free ordering by constrained elimination.
///
/// An ordering is Γ-free exactly when, for each position `t` with remaining
/// set `R`, the out-neighbours of `v_t` in `R` appear with non-decreasing
/// in-neighbourhoods (within `R`, under inclusion) and the in-neighbours of
/// `v_t` in `R` appear with non-decreasing out-neighbourhoods. Each choice of
/// `v_t` therefore either fails outright or adds precedence constraints among
/// the remaining vertices. `budget` bounds the number of search nodes.
pub fn search_strong_ordering(d: &Digraph, budget: usize) -> SearchOutcome {
    let n = d.order();
    let mut s = Search {
        d,
        t: d.transpose(),
        nodes: 0,
        budget,
        failed: HashSet::new(),
        order: Vec::with_capacity(n),
    };
    let alive = full_set(n);
    let before = vec![FixedBitSet::with_capacity(n); n];
    match s.go(alive, before) {
        Some(true) => {
            let ord = VertexOrdering::new(s.order).expect("search yields a permutation");
            debug_assert!(d.gamma_witness(&ord).is_none());
            SearchOutcome::Found(ord)
        }
        Some(false) => SearchOutcome::Impossible,
        None => SearchOutcome::BudgetExhausted,
    }
}

struct Search<'a> {
    d: &'a Digraph,
    t: Digraph,
    nodes: usize,
    budget: usize,
    failed: HashSet<(Vec<usize>, Vec<Vec<usize>>)>,
    order: Vec<usize>,
}

impl Search<'_> {
    /// `before[y]` holds the vertices that must be placed before `y`.
    fn go(&mut self, alive: FixedBitSet, before: Vec<FixedBitSet>) -> Option<bool> {
        if alive.is_clear() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let key = (
            alive.as_slice().to_vec(),
            alive
                .ones()
                .map(|v| before[v].intersection(&alive).collect())
                .collect(),
        );
        if self.failed.contains(&key) {
            return Some(false);
        }
        let outs: Vec<FixedBitSet> = (0..self.d.order())
            .map(|v| restricted(self.d.out_row(v), &alive))
            .collect();
        let ins: Vec<FixedBitSet> = (0..self.d.order())
            .map(|v| restricted(self.t.out_row(v), &alive))
            .collect();

        let mut cands: Vec<(usize, usize)> = Vec::new();
        for v in alive.ones() {
            if !before[v].is_disjoint(&alive) {
                continue;
            }
            let below = alive
                .ones()
                .filter(|&u| {
                    u != v
                        && ((outs[u].is_subset(&outs[v]) && outs[u] != outs[v])
                            || (ins[u].is_subset(&ins[v]) && ins[u] != ins[v]))
                })
                .count();
            cands.push((below, v));
        }
        cands.sort_unstable();

        for (_, v) in cands {
            let mut next_before = before.clone();
            if !add_chain_constraints(v, &outs[v], &ins, &mut next_before)
                || !add_chain_constraints(v, &ins[v], &outs, &mut next_before)
            {
                continue;
            }
            let mut next_alive = alive.clone();
            next_alive.set(v, false);
            self.order.push(v);
            match self.go(next_alive, next_before) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            self.order.pop();
        }
        self.failed.insert(key);
        Some(false)
    }
}

/// Members of `group` must appear with nested `sets` in increasing order.
/// `v` is placed now, so its own set must be minimal. Returns false on a
/// non-chain.
fn add_chain_constraints(
    v: usize,
    group: &FixedBitSet,
    sets: &[FixedBitSet],
    before: &mut [FixedBitSet],
) -> bool {
    let members: Vec<usize> = group.ones().collect();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            let xy = sets[x].is_subset(&sets[y]);
            let yx = sets[y].is_subset(&sets[x]);
            match (xy, yx) {
                (true, true) => {}
                (true, false) => {
                    if y == v {
                        return false;
                    }
                    before[y].insert(x);
                }
                (false, true) => {
                    if x == v {
                        return false;
                    }
                    before[x].insert(y);
                }
                (false, false) => return false,
            }
        }
    }
    true
}
