//! Construction, verification and auditing of (d,h)-decompositions for graphs
//! embedded on surfaces of nonnegative Euler characteristic.
//!
//! A (d,h)-decomposition of `G` is a pair `(D, H)`: `H` is a subgraph of
//! maximum degree at most `h`, and `D` is an acyclic orientation of `G - E(H)`
//! with maximum out-degree at most `d`.

pub mod decomposition;
pub mod discharging;
pub mod embedding;
pub mod generate;
pub mod reducer;
pub mod rotsys;
pub mod structure;

pub use discharging::{apply_rules, audit, initial_charges, AuditReport, ChargeLedger, RuleSetId};
pub use decomposition::{verify, OrientedDecomposition, Violation, VerifyError};
pub use embedding::{Dart, EmbeddingSummary, Face, FaceSet, GraphError, RotationGraph, Sign};
pub use generate::{generate, Kind};
pub use rotsys::{parse_rotation_graph, write_rotation_graph, ParseError};
pub use reducer::{apply_reduction, decompose_by_reduction, find_config, ConfigMatch, LemmaId, Theorem};
pub use structure::{classify, StructureReport};
