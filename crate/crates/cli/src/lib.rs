//! File formats and subcommand drivers behind the `blossom` binary.

pub mod dimacs;
pub mod files;
pub mod run;
pub mod trace;

pub use dimacs::{parse_graph_file, write_graph_file, GraphFile, ParseError, ParseErrorKind};
pub use files::{parse_certificate_file, parse_matching_file, write_certificate, write_matching};
pub use run::{run_oracle, run_solve, run_verify};
pub use trace::TraceWriter;
