//! Graph serialization formats.

mod edgelist;
mod graph6;

pub use edgelist::{emit_edge_list, parse_edge_list, EdgeListError};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
