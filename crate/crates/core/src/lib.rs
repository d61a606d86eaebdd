//! Burling graphs: the pair and graft constructions, clean-graft
//! certification with witnesses, exact pattern detectors and chromatic
//! checks.
//!
//! ```
//! use burling_core::{build_graft, is_clean};
//!
//! let (g3, _trace) = build_graft(3).unwrap();
//! assert_eq!(g3.n(), 21);
//! assert!(is_clean(&g3).is_clean());
//! ```

pub mod bitset;
pub mod burling;
pub mod chromatic;
pub mod detect;
pub mod error;
pub mod format;
pub mod fuzz;
pub mod graft;
pub mod graph;
pub mod iso;
pub mod ops;
pub mod oracle;
pub mod script;
pub mod sparse;
pub mod witness;

pub use bitset::VertexSet;
pub use burling::{
    build_graft, build_graft_buf, burling_pair, burling_pair_capped, burling_pair_lists,
    check_equivalence, check_equivalence_capped, graft_from_pair, next_pair, replay,
    ConstructionTrace, LevelTrace, Partner, Provenance, StablePair,
};
pub use chromatic::{
    bounds_only, chromatic_number, chromatic_number_capped, clique_number, dsatur_greedy,
    find_non_rainbow_coloring, Bounds, ChromaticCertificate, Coloring, LowerBoundProof,
};
pub use detect::{
    find_fan, find_fan_with, find_guarded_fan, find_guarded_fan_with, find_hole, find_hole_with,
    find_mountable_path, find_mountable_path_with, find_theta, find_theta_with, find_triangle,
    find_triangle_with, find_wheel, find_wheel_with, is_clean, is_clean_with, tip_edge,
    tip_edge_with, Budget, CleanReport, Condition, Outcome, SearchConfig, Verdict,
};
pub use error::{Error, Result};
pub use format::GraphFile;
pub use graft::Graft;
pub use graph::{Graph, GraphBuilder, Relabel};
pub use iso::{graft_isomorphic, graph_isomorphic, is_graft_isomorphism};
pub use ops::{GraftBuf, OpKind, OpRecord};
pub use oracle::{oracle_contains, PatternKind};
pub use script::{OpScript, ScriptOp};
pub use sparse::AdjacencyLists;
pub use witness::{validate_witness, Witness};
