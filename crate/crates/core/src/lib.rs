//! Polygon-circle representations of circle graphs.
//!
//! A chord diagram can be drawn inside a convex polygon so that every chord
//! joins two sides; the fewest corners needed is the diagram's polygon number.
//! This crate computes that number exactly, checks it against brute-force
//! oracles, and for distance hereditary graphs derives it from the pruned split
//! decomposition tree together with a witness representation.

pub mod dh;
pub mod diagram;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod pipeline;
pub mod polygon;
pub mod represent;
pub mod split_tree;
pub mod verify;

pub use dh::{random_dh, random_dh_construction, recognize_dh, DhConstruction, DhRecognition, Step, StepKind};
pub use diagram::{
    canonical_cycle, intersection_graph, max_series_independent, parse_diagram, peripheral_chords,
    random_diagram, Arc, ChordDiagram,
};
pub use error::{Error, Result};
pub use graph::{connected_components, Graph};
pub use oracle::{bf_alpha, bf_asteroidal_number, bf_kappa, Oracle, DEFAULT_GRAPH_CAP};
pub use polygon::{
    bf_psi_r, bf_psi_r_capped, kappa_peripheral, kappa_peripheral_with, psi_r, verify_corners, CornerSet,
    PolygonRep, DEFAULT_CHORD_CAP,
};
pub use split_tree::{
    build_split_tree, is_split, join_recompose, leaf_count, prune, prune_randomized, to_dot, Node, NodeKind,
    Slot, SplitTree,
};
pub use pipeline::{build_polygon_rep, dh_parameters, ComponentReport, DhReport, Witness};
pub use represent::{build_path_permrep, combine_reps, disjoint_union, LabeledRep, PermDiagram, Tok};
pub use verify::{run as run_verify, Failure, Outcome, Suite, VerifyConfig};
