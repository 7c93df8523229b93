//! Strongly chordal digraphs: recognition, certificates and general domination.
//!
//! A digraph (loops allowed) is strongly chordal when its adjacency matrix has a
//! simultaneous row/column permutation avoiding the Γ pattern `[[1,1],[1,0]]`.
//! Recognition is complete for symmetric digraphs, tournaments and balanced
//! digraphs; arbitrary digraphs fall back to an exhaustive permutation oracle.

pub mod balanced;
pub mod certificate;
mod cycles;
pub mod digraph;
pub mod dispatch;
pub mod domination;
pub mod error;
pub mod families;
pub mod io;
pub mod isomorphism;
pub mod matrix;
pub mod obstructions;
pub mod recognition;
pub mod tournaments;
pub mod walks;

pub use certificate::Certificate;
pub use digraph::{Digraph, GammaWitness, VertexOrdering};
pub use error::{Error, Result};
pub use families::{FamilyId, FamilySpec};
