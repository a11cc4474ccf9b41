//! Local inversions on bicolored graphs.
//!
//! A local inversion at `a` complements the subgraph induced by the
//! neighbors of `a` and negates their colors. This crate applies words of
//! inversions, synthesizes words that reverse every color (at most `4n-4`
//! letters for even `n`, `4n-3` for odd) or turn one coloring into another
//! (at most `floor((11n-3)/2)`), and checks all of it against an exhaustive
//! breadth-first oracle on small graphs.

pub mod bicolored;
pub mod error;
pub mod format;
pub mod gadgets;
pub mod graph;
pub mod oracle;
pub mod partition;
pub mod synth;
pub mod vertex_set;
pub mod word;

pub use bicolored::{BicoloredGraph, Coloring};
pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use oracle::{CrReport, Oracle, StateKey, SurveySummary};
pub use partition::{EdgePartition, PerfectForest, RootedTree, P3};
pub use synth::{Anchor, CertifiedWord, Construction, TransformStrategy};
pub use vertex_set::{Vertex, VertexSet};
pub use word::Word;
