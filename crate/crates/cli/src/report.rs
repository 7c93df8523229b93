//! Structured run output.

use serde::{Deserialize, Serialize};
use strongchordal::dispatch::{detect_class, GraphClass, Verdict};
use strongchordal::domination::DominationResult;
use strongchordal::{Certificate, Digraph};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputDigest {
    pub n: usize,
    pub arcs: usize,
    pub loops: usize,
    pub class: GraphClass,
}

impl InputDigest {
    pub fn of(d: &Digraph) -> Self {
        InputDigest {
            n: d.order(),
            arcs: d.arc_count(),
            loops: d.loops().len(),
            class: detect_class(d),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationReport {
    pub size: usize,
    pub dominating: Vec<usize>,
    pub disjoint: Vec<usize>,
}

impl From<&DominationResult> for DominationReport {
    fn from(r: &DominationResult) -> Self {
        DominationReport {
            size: r.size(),
            dominating: r.d.clone(),
            disjoint: r.c.clone(),
        }
    }
}

/// Results of the exhaustive checks; `None` where not requested.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub strong_ordering: Option<Option<Vec<usize>>>,
    pub totally_balanced: Option<bool>,
    /// Minimum size and a witness; `Some(None)` means no dominating set exists.
    pub min_domination: Option<Option<(usize, Vec<usize>)>>,
    pub max_disjoint_neighbourhoods: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub format_version: u32,
    pub command: String,
    pub input: InputDigest,
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
    pub note: Option<String>,
    pub domination: Option<DominationReport>,
    pub oracle: Option<OracleReport>,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn new(command: &str, d: &Digraph, verdict: Verdict) -> Self {
        RunReport {
            format_version: FORMAT_VERSION,
            command: command.to_string(),
            input: InputDigest::of(d),
            verdict,
            certificate: None,
            note: None,
            domination: None,
            oracle: None,
            wall_time_ms: 0.0,
        }
    }

    /// 0 strongly chordal, 1 not, 2 undecided.
    pub fn exit_code(&self) -> u8 {
        match self.verdict {
            Verdict::StronglyChordal => 0,
            Verdict::NotStronglyChordal => 1,
            Verdict::Undecided => 2,
        }
    }
}

pub fn describe(cert: &Certificate) -> String {
    match cert {
        Certificate::StrongOrdering(ord) => format!("strong ordering {:?}", ord.as_slice()),
        Certificate::Obstruction { spec, embedding } => {
            format!("induced obstruction {spec:?} on host vertices {embedding:?}")
        }
        Certificate::BadWalk(w) => format!("closed walk without strong chords {:?}", w.vertices),
        Certificate::Unwitnessed { reason } => format!("no structural witness ({reason})"),
    }
}
