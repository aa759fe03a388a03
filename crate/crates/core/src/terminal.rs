//! Minimum `(S, T)`-terminal cuts and the global minimum cut.
//!
//! `S` is contracted to a single source node and `T` to a single sink node
//! while building the flow network; the graph itself is never modified.
//! After a maximum flow, the vertices reachable from the source in the
//! residual network form the source side of the source-minimal minimum cut,
//! and the complement of the vertices that can still reach the sink is the
//! source side of the source-maximal one. The minimum is unique exactly when
//! the two coincide.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{domain, Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{Cut, Graph};
use crate::vertex_set::VertexSet;
use crate::weight::Weight;

/// Disjoint non-empty terminal sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminalPair {
    source: VertexSet,
    sink: VertexSet,
}

impl TerminalPair {
    pub fn new(source: VertexSet, sink: VertexSet) -> Result<Self> {
        if source.universe() != sink.universe() {
            return Err(domain("terminal sets over different universes"));
        }
        if source.is_empty() || sink.is_empty() {
            return Err(domain("terminal sets must be non-empty"));
        }
        if !source.is_disjoint(&sink) {
            return Err(domain("terminal sets must be disjoint"));
        }
        Ok(TerminalPair { source, sink })
    }

    pub fn source(&self) -> &VertexSet {
        &self.source
    }

    pub fn sink(&self) -> &VertexSet {
        &self.sink
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminalCutResult {
    pub value: Weight,
    /// Source side contained in the source side of every minimum cut.
    pub source_min_side: VertexSet,
    /// Source side containing the source side of every minimum cut.
    pub source_max_side: VertexSet,
    pub unique: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalMinCut {
    pub lambda: Weight,
    pub witness: Cut,
}

const SOURCE: usize = 0;
const SINK: usize = 1;

/// Flow scratch space for repeated terminal-cut computations on one graph.
#[derive(Debug, Default, Clone)]
pub struct TerminalCutSolver {
    net: FlowNetwork,
    node_of: Vec<usize>,
    calls: u64,
}

impl TerminalCutSolver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of max-flow computations performed so far.
    pub fn flow_calls(&self) -> u64 {
        self.calls
    }

    /// Minimum `(S, T)`-terminal cut. Checks that `g` is connected.
    pub fn solve(&mut self, g: &Graph, pair: &TerminalPair) -> Result<TerminalCutResult> {
        g.check_set(pair.source())?;
        g.require_connected()?;
        self.solve_sets(g, pair.source(), pair.sink())
    }

    /// Like [`Self::solve`] for sets the caller has already validated as
    /// disjoint, non-empty and over `g`'s universe; connectivity is not
    /// re-checked.
    pub(crate) fn solve_sets(
        &mut self,
        g: &Graph,
        source: &VertexSet,
        sink: &VertexSet,
    ) -> Result<TerminalCutResult> {
        let n = g.vertex_count();
        self.node_of.clear();
        self.node_of.resize(n, usize::MAX);
        let mut next = 2;
        for v in 0..n {
            self.node_of[v] = if source.contains(v) {
                SOURCE
            } else if sink.contains(v) {
                SINK
            } else {
                next += 1;
                next - 1
            };
        }
        self.net.reset(next);
        for e in g.edges() {
            let (a, b) = (self.node_of[e.u], self.node_of[e.v]);
            if a != b {
                self.net.add_undirected(a, b, e.weight.get());
            }
        }
        self.calls += 1;
        let flow = self.net.max_flow(SOURCE, SINK);
        let from_source = self.net.reachable_from(SOURCE);
        let to_sink = self.net.reaching(SINK);

        let mut min_side = VertexSet::empty(n);
        let mut max_side = VertexSet::empty(n);
        for v in 0..n {
            let node = self.node_of[v];
            if from_source[node] {
                min_side.insert(v);
            }
            if !to_sink[node] {
                max_side.insert(v);
            }
        }

        let value = g.boundary_weight(&min_side);
        if value.get() as u128 != flow || g.boundary_weight(&max_side) != value {
            return Err(Error::Internal(format!(
                "max-flow {flow} disagrees with residual cut values {} / {}",
                value,
                g.boundary_weight(&max_side)
            )));
        }
        let unique = min_side == max_side;
        Ok(TerminalCutResult { value, source_min_side: min_side, source_max_side: max_side, unique })
    }
}

/// Exact minimum `(S, T)`-terminal cut with its source-minimal and
/// source-maximal sides.
pub fn min_terminal_cut(g: &Graph, pair: &TerminalPair) -> Result<TerminalCutResult> {
    TerminalCutSolver::new().solve(g, pair)
}

/// Whether `u` is the unique minimum `(S, T)`-terminal cut's source side.
pub fn is_unique_min_terminal_cut(g: &Graph, pair: &TerminalPair, u: &VertexSet) -> Result<bool> {
    g.check_set(u)?;
    if !pair.source().is_subset(u) || !u.is_disjoint(pair.sink()) {
        return Err(domain("cut side must contain S and avoid T"));
    }
    let r = min_terminal_cut(g, pair)?;
    Ok(r.unique && &r.source_min_side == u)
}

/// Global minimum cut value `λ` with a canonical achieving cut, from the
/// `n − 1` terminal cuts `({v0}, {t})`.
pub fn global_min_cut(g: &Graph) -> Result<GlobalMinCut> {
    g.require_connected()?;
    let n = g.vertex_count();
    let mut solver = TerminalCutSolver::new();
    let source = VertexSet::singleton(n, 0);
    let mut best: Option<(Weight, VertexSet)> = None;
    for t in 1..n {
        let r = solver.solve_sets(g, &source, &VertexSet::singleton(n, t))?;
        if best.as_ref().is_none_or(|(w, _)| r.value < *w) {
            best = Some((r.value, r.source_min_side));
        }
    }
    let (lambda, side) = best.expect("n >= 2");
    let witness = g.canonicalize(&side)?;
    Ok(GlobalMinCut { lambda, witness })
}

/// `λ` only; same computation as [`global_min_cut`].
pub fn min_cut_value(g: &Graph) -> Result<Weight> {
    global_min_cut(g).map(|m| m.lambda)
}
