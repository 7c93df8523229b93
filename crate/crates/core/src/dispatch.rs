//! Class detection and routing to the matching recognizer.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::balanced::{is_strongly_chordal_balanced, level_partition, strongly_chordal_balanced};
use crate::certificate::Certificate;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::obstructions::{find_obstruction_sym, ObstructionSearch};
use crate::recognition::{brute_force_strongly_chordal, strong_order_symmetric, DEFAULT_ORACLE_LIMIT};
use crate::tournaments::{classify_tournament, is_tournament};
use crate::walks::find_bad_walk;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Symmetric,
    Tournament,
    Balanced,
    General,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::Symmetric => "symmetric",
            GraphClass::Tournament => "tournament",
            GraphClass::Balanced => "balanced",
            GraphClass::General => "general",
        })
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "symmetric" => Ok(GraphClass::Symmetric),
            "tournament" => Ok(GraphClass::Tournament),
            "balanced" => Ok(GraphClass::Balanced),
            "general" => Ok(GraphClass::General),
            other => Err(Error::Parse { line: 0, msg: format!("unknown class {other:?}") }),
        }
    }
}

/// First match among symmetric, tournament, balanced; otherwise general.
pub fn detect_class(d: &Digraph) -> GraphClass {
    if d.is_symmetric() {
        GraphClass::Symmetric
    } else if is_tournament(d) {
        GraphClass::Tournament
    } else if level_partition(d).is_some() {
        GraphClass::Balanced
    } else {
        GraphClass::General
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    StronglyChordal,
    NotStronglyChordal,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Forces a recognizer; `None` auto-detects.
    pub class: Option<GraphClass>,
    pub oracle_limit: usize,
    pub obstruction_budget: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            class: None,
            oracle_limit: DEFAULT_ORACLE_LIMIT,
            obstruction_budget: crate::obstructions::DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recognition {
    pub class: GraphClass,
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
    /// Why no certificate is attached, or why the verdict is undecided.
    pub note: Option<String>,
}

impl Recognition {
    fn certified(class: GraphClass, cert: Certificate) -> Self {
        let verdict = if cert.accepts() {
            Verdict::StronglyChordal
        } else {
            Verdict::NotStronglyChordal
        };
        Recognition { class, verdict, certificate: Some(cert), note: None }
    }
}

pub const GENERAL_REFUSAL: &str = "general case: recognition complexity open; n exceeds oracle limit";

pub fn recognize(d: &Digraph, opts: &Options) -> Result<Recognition> {
    let class = opts.class.unwrap_or_else(|| detect_class(d));
    match class {
        GraphClass::Symmetric => recognize_symmetric(d, opts.obstruction_budget),
        GraphClass::Tournament => Ok(Recognition::certified(class, classify_tournament(d)?.certificate())),
        GraphClass::Balanced => match strongly_chordal_balanced(d) {
            Ok(cert) => Ok(Recognition::certified(class, cert)),
            Err(e @ Error::LimitExceeded { .. }) => Ok(Recognition {
                class,
                verdict: if is_strongly_chordal_balanced(d)? {
                    Verdict::StronglyChordal
                } else {
                    Verdict::NotStronglyChordal
                },
                certificate: None,
                note: Some(format!("every level bigraph is chordal; {e}")),
            }),
            Err(e) => Err(e),
        },
        GraphClass::General => {
            if d.order() > opts.oracle_limit {
                return Ok(Recognition {
                    class,
                    verdict: Verdict::Undecided,
                    certificate: None,
                    note: Some(GENERAL_REFUSAL.to_string()),
                });
            }
            let cert = match brute_force_strongly_chordal(d, opts.oracle_limit)? {
                Some(ord) => Certificate::StrongOrdering(ord),
                None => Certificate::Unwitnessed {
                    reason: "exhaustive search found no Γ-free ordering".into(),
                },
            };
            Ok(Recognition::certified(class, cert))
        }
    }
}

fn recognize_symmetric(g: &Digraph, budget: usize) -> Result<Recognition> {
    let class = GraphClass::Symmetric;
    let cert = strong_order_symmetric(g)?;
    if cert.accepts() {
        return Ok(Recognition::certified(class, cert));
    }
    let upgraded = match find_obstruction_sym(g, budget)? {
        ObstructionSearch::Found { spec, embedding } => Certificate::Obstruction { spec, embedding },
        ObstructionSearch::Absent => unreachable!("elimination and obstruction search disagree"),
        ObstructionSearch::Exhausted { .. } => match find_bad_walk(g, 2 * g.order())? {
            Some(w) => Certificate::BadWalk(w),
            None => cert,
        },
    };
    Ok(Recognition::certified(class, upgraded))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{FamilyId, FamilySpec};

    #[test]
    fn detection_order() {
        assert_eq!(detect_class(&Digraph::empty(3)), GraphClass::Symmetric);
        let tt = Digraph::from_fn(3, |u, v| u < v);
        assert_eq!(detect_class(&tt), GraphClass::Tournament);
        let fence = FamilySpec::Fence { len: 6 }.generate().unwrap();
        assert_eq!(detect_class(&fence), GraphClass::Balanced);
        let c3_plus = Digraph::build(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(detect_class(&c3_plus), GraphClass::General);
    }

    #[test]
    fn symmetric_rejections_carry_obstructions() {
        let c4 = FamilySpec::F1 { len: 4 }.generate().unwrap();
        let r = recognize(&c4, &Options::default()).unwrap();
        assert_eq!(r.verdict, Verdict::NotStronglyChordal);
        match r.certificate.unwrap() {
            Certificate::Obstruction { spec, .. } => assert_eq!(spec.id(), FamilyId::F1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn general_refusal_above_limit() {
        let mut arcs: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (2, 0)];
        arcs.extend((3..10).map(|v| (v, v - 1)));
        let d = Digraph::build(10, &arcs).unwrap();
        assert_eq!(detect_class(&d), GraphClass::General);
        let r = recognize(&d, &Options::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Undecided);
        assert_eq!(r.note.as_deref(), Some(GENERAL_REFUSAL));
    }

    #[test]
    fn general_small_uses_oracle() {
        let c3 = Digraph::build(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = recognize(&c3, &Options::default()).unwrap();
        assert_eq!(r.verdict, Verdict::StronglyChordal);
        assert!(r.certificate.unwrap().verify(&c3));
    }

    #[test]
    fn forced_class_checks_preconditions() {
        let opts = Options { class: Some(GraphClass::Tournament), ..Options::default() };
        let fence = FamilySpec::Fence { len: 6 }.generate().unwrap();
        assert_eq!(recognize(&fence, &opts), Err(Error::NotTournament));
    }
}
