//! Edge-list ingestion, output formatting, a parallel enumeration driver and
//! the `termcut` command line, on top of [`termcut_core`].

pub mod cli;
pub mod edgelist;
pub mod parallel;
pub mod report;

pub use edgelist::{parse_graph, write_edge_list, ParseError, ParsedGraph};
