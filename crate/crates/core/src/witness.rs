//! Small terminal sets certifying a cut as a unique minimum terminal cut.
//!
//! For a cut `(U, Ū)`, a set `S ⊆ U` meets every `Q` with `Ū ⊊ Q ⊊ V` and
//! `d(Q) ≤ d(U)` exactly when `U` is the unique minimum `(S, Ū)`-terminal
//! cut. So an inclusion-minimal such transversal is found greedily: start
//! from `S = U` and drop each vertex whose removal keeps `U` certified, one
//! max-flow per test. Doing the same on `Ū` gives `T`, and `(S, T)` then
//! certifies `U` on its own.

use alloc::format;

use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::ratio::Ratio;
use crate::terminal::{global_min_cut, TerminalCutSolver};
use crate::vertex_set::VertexSet;
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// `S ⊆ U`.
    pub source: VertexSet,
    /// `T ⊆ V∖U`.
    pub sink: VertexSet,
    /// `d(U) / λ`.
    pub alpha_of_cut: Ratio,
    /// `⌊2·alpha_of_cut⌋ + 1`.
    pub size_bound: u64,
}

fn check_side(g: &Graph, u: &VertexSet) -> Result<()> {
    g.check_set(u)?;
    if !u.is_proper_nonempty() {
        return Err(domain("cut side must be a non-empty proper subset"));
    }
    Ok(())
}

/// Whether `u` is the unique minimum `(source, V∖u)`-terminal cut.
fn certifies_one_side(
    solver: &mut TerminalCutSolver,
    g: &Graph,
    source: &VertexSet,
    u: &VertexSet,
) -> Result<bool> {
    let r = solver.solve_sets(g, source, &u.complement())?;
    Ok(r.unique && &r.source_min_side == u)
}

fn greedy_one_side(solver: &mut TerminalCutSolver, g: &Graph, u: &VertexSet) -> Result<VertexSet> {
    let mut source = u.clone();
    for v in u.iter() {
        if source.len() == 1 {
            break;
        }
        source.remove(v);
        if !certifies_one_side(solver, g, &source, u)? {
            source.insert(v);
        }
    }
    Ok(source)
}

/// Inclusion-minimal `S ⊆ u` such that `u` is the unique minimum
/// `(S, V∖u)`-terminal cut. Vertices are tried for removal in ascending id.
pub fn find_one_sided_witness(g: &Graph, u: &VertexSet) -> Result<VertexSet> {
    check_side(g, u)?;
    g.require_connected()?;
    greedy_one_side(&mut TerminalCutSolver::new(), g, u)
}

/// Witness `(S, T)` for the cut `(u, V∖u)`.
pub fn find_witness(g: &Graph, u: &VertexSet) -> Result<Witness> {
    check_side(g, u)?;
    let lambda = global_min_cut(g)?.lambda;
    find_witness_with_lambda(g, u, lambda)
}

/// [`find_witness`] with a precomputed min-cut value `lambda`.
pub fn find_witness_with_lambda(g: &Graph, u: &VertexSet, lambda: Weight) -> Result<Witness> {
    check_side(g, u)?;
    g.require_connected()?;
    let mut solver = TerminalCutSolver::new();
    let source = greedy_one_side(&mut solver, g, u)?;
    let sink = greedy_one_side(&mut solver, g, &u.complement())?;

    let r = solver.solve_sets(g, &source, &sink)?;
    if !(r.unique && &r.source_min_side == u) {
        return Err(Error::Internal(format!(
            "witness S = {source:?}, T = {sink:?} does not certify {u:?}"
        )));
    }
    let alpha_of_cut = Ratio::of_weights(g.boundary_weight(u), lambda)?;
    Ok(Witness { source, sink, alpha_of_cut, size_bound: alpha_of_cut.terminal_size_bound() })
}

/// `|S|, |T| ≤ ⌊2·d(u)/λ⌋ + 1`, with `λ` recomputed from `g`.
pub fn check_size_bound(g: &Graph, u: &VertexSet, w: &Witness) -> Result<bool> {
    let lambda = global_min_cut(g)?.lambda;
    let bound = Ratio::of_weights(g.cut_value(u)?, lambda)?.terminal_size_bound();
    Ok(w.source.len() as u64 <= bound && w.sink.len() as u64 <= bound)
}

/// Whether removing any single vertex from `source` breaks the one-sided
/// certification of `u`.
pub fn is_minimal_one_sided(g: &Graph, u: &VertexSet, source: &VertexSet) -> Result<bool> {
    check_side(g, u)?;
    let mut solver = TerminalCutSolver::new();
    if source.len() <= 1 {
        return Ok(true);
    }
    for v in source.iter() {
        let mut smaller = source.clone();
        smaller.remove(v);
        if certifies_one_side(&mut solver, g, &smaller, u)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a minimal one-sided witness `source = {u_1, …, u_p}` with `p ≥ 2`:
/// each sink side `A_i` of the source-minimal minimum
/// `(source∖{u_i}, V∖u)`-terminal cut has `d(A_i) ≤ d(u)` and contains
/// `u_i`. Returns `true` trivially for `p < 2`.
pub fn check_dropped_terminal_sides(g: &Graph, u: &VertexSet, source: &VertexSet) -> Result<bool> {
    check_side(g, u)?;
    if source.len() < 2 {
        return Ok(true);
    }
    let d_u = g.boundary_weight(u);
    let sink = u.complement();
    let mut solver = TerminalCutSolver::new();
    for ui in source.iter() {
        let mut rest = source.clone();
        rest.remove(ui);
        let r = solver.solve_sets(g, &rest, &sink)?;
        let a_i = r.source_min_side.complement();
        if g.boundary_weight(&a_i) > d_u || !a_i.contains(ui) {
            return Ok(false);
        }
    }
    Ok(true)
}
