//! Tournaments with possible loops.
//!
//! A tournament is strongly chordal exactly when it has at most one
//! non-trivial strong component, that component is `TT*_k` once loops are
//! ignored, the looped vertices span no directed cycle, and no four vertices
//! induce `T_0`. Plain transitive tournaments (any loops) are accepted too.
//!
//! With loops present that list is incomplete: some looped tournaments whose
//! loopless part is not `TT_n(i,k)` are still strongly chordal. Those cases are
//! settled by the exact ordering search.

use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::digraph::{Digraph, VertexOrdering};
use crate::error::{Error, Result};
use crate::families::{find_t0, is_member_of_family, FamilyId};
use crate::recognition::{brute_force_strongly_chordal, search_strong_ordering, SearchOutcome};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum TournamentClass {
    ReflexiveTransitive {
        n: usize,
        ordering: VertexOrdering,
    },
    /// Transitive, with loops on some proper subset.
    Transitive {
        n: usize,
        loops: Vec<usize>,
        ordering: VertexOrdering,
    },
    /// `TT_n(i, k)` without loops; `TT*_k` is `n = 1, i = 1`.
    IrrBlowup {
        n: usize,
        i: usize,
        k: usize,
        ordering: VertexOrdering,
    },
    MixedBlowup {
        n: usize,
        i: usize,
        k: usize,
        loops: Vec<usize>,
        ordering: VertexOrdering,
    },
    /// Looped tournament accepted by exact search although its loopless part
    /// is not `TT_n(i,k)`; `T_1` with loops avoiding its non-peak vertex is the
    /// smallest example.
    Exceptional {
        n: usize,
        loops: Vec<usize>,
        ordering: VertexOrdering,
    },
    NotStronglyChordal(Certificate),
}

impl TournamentClass {
    pub fn accepts(&self) -> bool {
        !matches!(self, TournamentClass::NotStronglyChordal(_))
    }

    pub fn certificate(&self) -> Certificate {
        match self {
            TournamentClass::ReflexiveTransitive { ordering, .. }
            | TournamentClass::Transitive { ordering, .. }
            | TournamentClass::IrrBlowup { ordering, .. }
            | TournamentClass::MixedBlowup { ordering, .. }
            | TournamentClass::Exceptional { ordering, .. } => {
                Certificate::StrongOrdering(ordering.clone())
            }
            TournamentClass::NotStronglyChordal(c) => c.clone(),
        }
    }
}

/// Exactly one arc between any two distinct vertices; loops are unrestricted.
pub fn is_tournament(d: &Digraph) -> bool {
    let n = d.order();
    (0..n).all(|u| (u + 1..n).all(|v| d.has_arc(u, v) != d.has_arc(v, u)))
}

/// Strong components in topological order of the condensation (sources first).
pub fn strong_components(d: &Digraph) -> Vec<Vec<usize>> {
    // Iterative Tarjan; components come out sinks first.
    let n = d.order();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0;
    let succ: Vec<Vec<usize>> = (0..n).map(|v| d.out_nbrs(v)).collect();
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i < succ[v].len() {
                let w = succ[v][*i];
                *i += 1;
                if index[w] == usize::MAX {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps.reverse();
    comps
}

/// Budget for the exact ordering search.
pub const DEFAULT_SEARCH_BUDGET: usize = 200_000;

/// A directed triangle on looped vertices, if the loops span any cycle.
pub(crate) fn looped_triangle(t: &Digraph) -> Option<[usize; 3]> {
    let loops = t.loops();
    for &a in &loops {
        for &b in &loops {
            for &c in &loops {
                if a < b && a < c && t.has_arc(a, b) && t.has_arc(b, c) && t.has_arc(c, a) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Verdict without a rejection certificate; `None` means rejected.
pub(crate) fn decide(t: &Digraph) -> Result<Option<TournamentClass>> {
    if !is_tournament(t) {
        return Err(Error::NotTournament);
    }
    if looped_triangle(t).is_some() || find_t0(t).is_some() {
        return Ok(None);
    }
    let n = t.order();
    let loops = t.loops();
    let comps = strong_components(t);
    let big: Vec<usize> = (0..comps.len()).filter(|&c| comps[c].len() > 1).collect();
    let shaped = big.len() <= 1
        && big.first().is_none_or(|&c| {
            is_member_of_family(&t.induced_ordered(&comps[c]).without_loops(), FamilyId::TTStar).is_some()
        });
    if !shaped {
        if loops.is_empty() {
            // Irreflexive tournaments outside TT_n(i,k) contain a member of T_1..T_6.
            return Ok(None);
        }
        return Ok(exact_order(t)?.map(|ordering| TournamentClass::Exceptional { n, loops, ordering }));
    }

    let pivot = big.first().copied().unwrap_or(0);
    let mut order = match big.first() {
        Some(&c) => tt_star_order(t, &comps[c]),
        None => comps[pivot].clone(),
    };
    for c in (0..pivot).rev() {
        order.extend(&comps[c]);
    }
    for comp in &comps[pivot + 1..] {
        order.extend(comp);
    }
    let mut ordering = VertexOrdering::new(order).expect("components partition the vertices");
    if t.gamma_witness(&ordering).is_some() {
        match exact_order(t)? {
            Some(o) => ordering = o,
            None => return Ok(None),
        }
    }
    Ok(Some(match big.first() {
        None if loops.len() == n => TournamentClass::ReflexiveTransitive { n, ordering },
        None => TournamentClass::Transitive { n, loops, ordering },
        Some(&c) => {
            let (cn, ci, k) = (comps.len(), c + 1, comps[c].len());
            if loops.is_empty() {
                TournamentClass::IrrBlowup { n: cn, i: ci, k, ordering }
            } else {
                TournamentClass::MixedBlowup {
                    n: cn,
                    i: ci,
                    k,
                    loops,
                    ordering,
                }
            }
        }
    }))
}

/// Classifies a tournament; rejections carry an obstruction when one is found.
pub fn classify_tournament(t: &Digraph) -> Result<TournamentClass> {
    match decide(t)? {
        Some(class) => Ok(class),
        None => Ok(TournamentClass::NotStronglyChordal(
            crate::obstructions::tournament_certificate(t),
        )),
    }
}

/// True when the tournament is strongly chordal.
pub fn is_strongly_chordal_tournament(t: &Digraph) -> Result<bool> {
    Ok(decide(t)?.is_some())
}

/// Transitive order of a `TT*_k` component (before the reversed arc is
/// restored), reversed when its first vertex has a loop.
fn tt_star_order(t: &Digraph, comp: &[usize]) -> Vec<usize> {
    let sub = t.induced_ordered(comp).without_loops();
    let k = comp.len();
    // The source of the underlying transitive order beats everyone except the
    // sink; the sink beats only the source.
    let mut best = None;
    for u in 0..k {
        for v in 0..k {
            if u != v && sub.has_arc(u, v) {
                let mut flipped = sub.clone();
                flipped.remove_arc(u, v);
                flipped.add_arc(v, u);
                let mut verts: Vec<usize> = (0..k).collect();
                verts.sort_by_key(|&x| std::cmp::Reverse(flipped.out_row(x).count_ones(..)));
                let transitive = verts
                    .iter()
                    .enumerate()
                    .all(|(p, &x)| flipped.out_row(x).count_ones(..) == k - 1 - p);
                if transitive && verts[0] == v && verts[k - 1] == u {
                    best = Some(verts);
                    break;
                }
            }
        }
        if best.is_some() {
            break;
        }
    }
    let mut local = best.expect("component is TT*_k");
    if t.has_loop(comp[local[0]]) {
        local.reverse();
    }
    local.into_iter().map(|x| comp[x]).collect()
}

fn exact_order(t: &Digraph) -> Result<Option<VertexOrdering>> {
    match search_strong_ordering(t, DEFAULT_SEARCH_BUDGET) {
        SearchOutcome::Found(o) => Ok(Some(o)),
        SearchOutcome::Impossible => Ok(None),
        SearchOutcome::BudgetExhausted => {
            brute_force_strongly_chordal(t, crate::recognition::DEFAULT_ORACLE_LIMIT)
        }
    }
}
