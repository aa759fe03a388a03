//! Undirected graphs with exact integer edge costs, cut values, and
//! canonical cuts.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{domain, Error, Result};
use crate::vertex_set::VertexSet;
use crate::weight::Weight;

/// A stored edge `{u, v}` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Weight,
}

/// Immutable weighted undirected graph.
///
/// Self-loops are dropped and parallel edges merged by summing their
/// weights. The total weight is at most `u64::MAX / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    // CSR adjacency: neighbours of v are adj[offsets[v]..offsets[v + 1]].
    offsets: Vec<usize>,
    adj: Vec<(usize, Weight)>,
    total: Weight,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut merged: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (a, b, w) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if w == 0 {
                return Err(Error::NonPositiveWeight);
            }
            if a == b {
                continue;
            }
            let key = (a.min(b), a.max(b));
            let slot = merged.entry(key).or_insert(0);
            *slot = slot.checked_add(w).ok_or(Error::Overflow)?;
        }

        let mut total: u64 = 0;
        let edges: Vec<Edge> = merged
            .into_iter()
            .map(|((u, v), w)| Edge { u, v, weight: Weight(w) })
            .collect();
        for e in &edges {
            total = total.checked_add(e.weight.get()).ok_or(Error::Overflow)?;
        }
        if total > u64::MAX / 2 {
            return Err(Error::Overflow);
        }

        let mut degree = vec![0usize; n + 1];
        for e in &edges {
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + degree[v];
        }
        let mut fill = offsets.clone();
        let mut adj = vec![(0, Weight::ZERO); offsets[n]];
        for e in &edges {
            adj[fill[e.u]] = (e.v, e.weight);
            fill[e.u] += 1;
            adj[fill[e.v]] = (e.u, e.weight);
            fill[e.v] += 1;
        }

        Ok(Graph { n, edges, offsets, adj, total: Weight(total) })
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Stored edges, sorted by `(u, v)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn total_weight(&self) -> Weight {
        self.total
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[(usize, Weight)] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.universe() != self.n {
            return Err(domain(alloc::format!(
                "vertex set over {} vertices used with a graph of {}",
                set.universe(),
                self.n
            )));
        }
        Ok(())
    }

    /// `d(side)` without checking that `side` is a proper non-empty subset;
    /// empty and full sets give 0.
    pub fn boundary_weight(&self, side: &VertexSet) -> Weight {
        self.edges
            .iter()
            .filter(|e| side.contains(e.u) != side.contains(e.v))
            .map(|e| e.weight)
            .sum()
    }

    /// Total weight of edges with exactly one endpoint in `side`.
    pub fn cut_value(&self, side: &VertexSet) -> Result<Weight> {
        self.check_set(side)?;
        if !side.is_proper_nonempty() {
            return Err(domain("cut side must be a non-empty proper subset"));
        }
        Ok(self.boundary_weight(side))
    }

    /// The cut `{side, V∖side}` keyed by the side that excludes vertex 0.
    pub fn canonicalize(&self, side: &VertexSet) -> Result<Cut> {
        let value = self.cut_value(side)?;
        let side = if side.contains(0) { side.complement() } else { side.clone() };
        Ok(Cut { value, side })
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Precondition shared by every cut algorithm: `n ≥ 2` and connected.
    pub fn require_connected(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::TooFewVertices(self.n));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }
}

/// A bipartition stored by the side that does not contain vertex 0.
///
/// Ordered by value, then lexicographically by side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cut {
    pub value: Weight,
    pub side: VertexSet,
}
