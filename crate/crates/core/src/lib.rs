//! Maximum cardinality matching in general graphs by blossom contraction.
//!
//! Graphs are sets of undirected edges over `usize` vertices. [`solve`]
//! starts from the empty matching and augments along paths found by an
//! alternating-forest search, contracting odd cycles as they appear. The
//! result carries a [`Certificate`] that [`verify_certificate`] checks
//! independently of the solver.

pub mod assembly;
pub mod certificate;
pub mod contraction;
pub mod error;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod search;
pub mod solver;

pub use assembly::{compute_match_blossom, longest_disj_pfx, BlossomResult};
pub use certificate::{
    verify_certificate, verify_maximum, Certificate, CertificateReport, ContractionStep,
    OddSetCover, VerificationReport,
};
pub use contraction::{Blossom, ContractionMap};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Path, Vertex};
pub use matching::{augment, Matching};
pub use search::{InvariantChecker, SearchObserver, SearchState, Step};
pub use solver::{find_aug_path, find_max_matching, search_aug_path, solve, AugSearch, Solution};
