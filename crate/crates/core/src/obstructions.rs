//! Upgrading rejections into induced-subgraph obstructions.
//!
//! Cheap detectors look for the unbounded symmetric shapes directly (looped
//! paths, reflexive and irreflexive holes, odd cycles). Otherwise the host is
//! shrunk one vertex at a time to a minimal rejected induced subgraph, which
//! is then identified against the family generators.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::cycles::{shortest_hole, shortest_odd_cycle, shortest_path};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::families::{identify, FamilyId, FamilySpec};
use crate::isomorphism::find_isomorphism;
use crate::recognition::is_strongly_chordal_symmetric;
use crate::tournaments::is_strongly_chordal_tournament;

pub const DEFAULT_BUDGET: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum ObstructionSearch {
    /// `embedding[i]` is the host vertex playing vertex `i` of `spec`'s member.
    Found {
        spec: FamilySpec,
        embedding: Vec<usize>,
    },
    /// The host is strongly chordal, so no obstruction exists.
    Absent,
    /// A minimal rejected subgraph was isolated but could not be matched within budget.
    Exhausted { minimal: Vec<usize> },
}

impl ObstructionSearch {
    pub fn into_certificate(self) -> Option<Certificate> {
        match self {
            ObstructionSearch::Found { spec, embedding } => {
                Some(Certificate::Obstruction { spec, embedding })
            }
            _ => None,
        }
    }
}

/// Host vertices `verts` matched onto `spec`'s generated member.
pub fn embed(host: &Digraph, verts: &[usize], spec: &FamilySpec) -> Option<Vec<usize>> {
    let member = spec.generate().ok()?;
    let sub = host.induced_ordered(verts);
    let map = find_isomorphism(&member, &sub)?;
    Some(map.into_iter().map(|i| verts[i]).collect())
}

fn identify_set(host: &Digraph, verts: &[usize], ids: &[FamilyId]) -> Option<ObstructionSearch> {
    let sub = host.induced_ordered(verts);
    let spec = identify(&sub, ids)?;
    let embedding = embed(host, verts, &spec)?;
    Some(ObstructionSearch::Found { spec, embedding })
}

/// Greedily deletes vertices (lowest id first) while `rejected` still holds.
pub fn shrink(host: &Digraph, rejected: impl Fn(&Digraph) -> bool) -> Vec<usize> {
    let mut keep: Vec<usize> = (0..host.order()).collect();
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        if rejected(&host.induced_ordered(&trial)) {
            keep = trial;
        } else {
            i += 1;
        }
    }
    keep
}

fn rows(g: &Digraph) -> Vec<FixedBitSet> {
    (0..g.order()).map(|v| g.out_row(v).clone()).collect()
}

fn set_of(n: usize, pred: impl Fn(usize) -> bool) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    for v in (0..n).filter(|&v| pred(v)) {
        s.insert(v);
    }
    s
}

/// Shapes found directly: F9 paths, F1 reflexive holes, F2 irreflexive odd
/// cycles or long even holes. Shortest instance of each; smallest family wins.
fn direct_detectors(g: &Digraph) -> Option<ObstructionSearch> {
    let n = g.order();
    let adj = rows(g);
    let reflexive = set_of(n, |v| g.has_loop(v));
    let irreflexive = set_of(n, |v| !g.has_loop(v));

    let f1 = shortest_hole(&adj, &reflexive, 4);
    let f2 = shortest_odd_cycle(&adj, &irreflexive).or_else(|| shortest_hole(&adj, &irreflexive, 6));
    let mut f9: Option<Vec<usize>> = None;
    for a in reflexive.ones() {
        for b in reflexive.ones().filter(|&b| b > a && !g.has_arc(a, b)) {
            let mut room = irreflexive.clone();
            room.insert(a);
            room.insert(b);
            if let Some(p) = shortest_path(&adj, &room, a, b) {
                if f9.as_ref().is_none_or(|q| p.len() < q.len()) {
                    f9 = Some(p);
                }
            }
        }
    }
    [(FamilyId::F1, f1), (FamilyId::F2, f2), (FamilyId::F9, f9)]
        .into_iter()
        .find_map(|(id, verts)| identify_set(g, &verts?, &[id]))
}

/// Obstruction for a symmetric digraph. `budget` caps the size of a minimal
/// rejected subgraph that is matched against the families.
pub fn find_obstruction_sym(g: &Digraph, budget: usize) -> Result<ObstructionSearch> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if is_strongly_chordal_symmetric(g)? {
        return Ok(ObstructionSearch::Absent);
    }
    if let Some(found) = direct_detectors(g) {
        return Ok(found);
    }
    let minimal = shrink(g, |h| !is_strongly_chordal_symmetric(h).expect("induced subgraphs stay symmetric"));
    if minimal.len() > budget {
        return Ok(ObstructionSearch::Exhausted { minimal });
    }
    Ok(identify_set(g, &minimal, &FamilyId::SYMMETRIC)
        .unwrap_or(ObstructionSearch::Exhausted { minimal }))
}

/// Obstruction for a rejected tournament. Looped triangles and `T_0` are
/// found directly; otherwise the tournament is shrunk to a minimal rejected
/// subtournament and matched against `T_1..T_6` (with loops).
pub fn find_obstruction_tournament(t: &Digraph) -> Result<ObstructionSearch> {
    if !crate::tournaments::is_tournament(t) {
        return Err(Error::NotTournament);
    }
    if let Some(tri) = crate::tournaments::looped_triangle(t) {
        return Ok(identify_set(t, &tri, &[FamilyId::RefTriangle]).expect("looped triangle"));
    }
    if let Some(q) = crate::families::find_t0(t) {
        return Ok(identify_set(t, &q, &[FamilyId::T0]).expect("T0 quadruple"));
    }
    if is_strongly_chordal_tournament(t)? {
        return Ok(ObstructionSearch::Absent);
    }
    let minimal = shrink(t, |h| !is_strongly_chordal_tournament(h).expect("subtournament"));
    Ok(identify_set(t, &minimal, &FamilyId::TOURNAMENT)
        .unwrap_or(ObstructionSearch::Exhausted { minimal }))
}

pub(crate) fn tournament_certificate(t: &Digraph) -> Certificate {
    match find_obstruction_tournament(t) {
        Ok(ObstructionSearch::Found { spec, embedding }) => Certificate::Obstruction { spec, embedding },
        Ok(other) => Certificate::Unwitnessed {
            reason: format!("tournament rejected but no listed obstruction matched: {other:?}"),
        },
        Err(e) => Certificate::Unwitnessed { reason: e.to_string() },
    }
}
