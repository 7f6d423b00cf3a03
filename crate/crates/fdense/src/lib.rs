//! Standard-library companion of `fdense-core`: edge-list and JSON graph
//! formats, size-function specifications, the `fdense` command line and the
//! benchmark harness.

pub mod bench;
pub mod cli;
pub mod edgelist;
pub mod fspec;
pub mod json;

pub use edgelist::{parse_edge_list, write_edge_list, ParseError};
pub use fspec::parse_size_function;
pub use json::{parse_graph, parse_json_graph, write_json_graph};
