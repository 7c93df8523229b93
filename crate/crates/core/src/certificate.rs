use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, VertexOrdering};
use crate::families::FamilySpec;
use crate::walks::Walk;

/// Evidence for a recognition verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum Certificate {
    StrongOrdering(VertexOrdering),
    /// `embedding[i]` is the host vertex playing vertex `i` of `spec`'s generated member.
    Obstruction {
        spec: FamilySpec,
        embedding: Vec<usize>,
    },
    BadWalk(Walk),
    /// Rejected without a structural witness.
    Unwitnessed {
        reason: String,
    },
}

impl Certificate {
    pub fn accepts(&self) -> bool {
        matches!(self, Certificate::StrongOrdering(_))
    }

    /// Independent check against `host`. `Unwitnessed` never verifies.
    pub fn verify(&self, host: &Digraph) -> bool {
        match self {
            Certificate::StrongOrdering(ord) => {
                ord.len() == host.order() && host.gamma_witness(ord).is_none()
            }
            Certificate::Obstruction { spec, embedding } => {
                let Ok(member) = spec.generate() else {
                    return false;
                };
                embedding.len() == member.order()
                    && embedding.iter().all(|&v| v < host.order())
                    && host.induced_ordered(embedding) == member
            }
            Certificate::BadWalk(w) => {
                w.closed
                    && w.len() >= 6
                    && w.len() % 2 == 0
                    && crate::walks::has_strong_chord(host, w) == Ok(false)
            }
            Certificate::Unwitnessed { .. } => false,
        }
    }
}
