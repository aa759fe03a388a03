//! Exact enumeration and certification of approximate minimum cuts.
//!
//! Every α-approximate minimum cut `(U, V∖U)` of a connected graph with
//! positive edge costs is the *unique* minimum `(S, T)`-terminal cut for
//! some `S ⊆ U`, `T ⊆ V∖U` with `|S|, |T| ≤ ⌊2α⌋ + 1`. This crate turns that
//! statement into code:
//!
//! * [`terminal`] computes exact minimum `(S, T)`-terminal cuts with a
//!   blocking-flow max-flow and reads off the source-minimal and
//!   source-maximal minimum cuts from the residual network.
//! * [`enumerate`] scans all small terminal pairs to list every cut with
//!   value at most `α·λ`, with a brute-force oracle and a random contraction
//!   baseline next to it.
//! * [`witness`] shrinks a cut's sides greedily to inclusion-minimal
//!   terminal sets that certify it.
//! * [`uncross`] evaluates the σ-functional and the uncrossing partition on
//!   concrete instances so the size-bound argument can be checked.
//!
//! All arithmetic is on exact integers. The crate is `no_std` and only needs
//! `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod contraction;
pub mod enumerate;
mod error;
pub mod flow;
pub mod generate;
pub mod graph;
pub mod ratio;
pub mod terminal;
pub mod uncross;
pub mod vertex_set;
pub mod weight;
pub mod witness;

pub use crate::enumerate::{brute_force_cuts, enumerate_approx_min_cuts, EnumerationResult};
pub use crate::error::{Error, Result};
pub use crate::graph::{Cut, Graph};
pub use crate::ratio::Ratio;
pub use crate::terminal::{
    global_min_cut, is_unique_min_terminal_cut, min_terminal_cut, GlobalMinCut, TerminalCutResult,
    TerminalPair,
};
pub use crate::vertex_set::VertexSet;
pub use crate::weight::Weight;
pub use crate::witness::{find_one_sided_witness, find_witness, Witness};
