//! Exact maximum flow on integer capacities (Dinic's blocking flows).

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    rev: usize,
    residual: u64,
}

/// A reusable flow network. Nodes are `0..node_count`.
#[derive(Debug, Default, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Vec<Arc>>,
    level: Vec<u32>,
    next_arc: Vec<usize>,
    queue: VecDeque<usize>,
    path: Vec<(usize, usize)>,
}

const UNSEEN: u32 = u32::MAX;

impl FlowNetwork {
    pub fn new() -> Self {
        Self::default()
    }

    /// Clears all arcs and resizes to `nodes` nodes, keeping allocations.
    pub fn reset(&mut self, nodes: usize) {
        for list in self.arcs.iter_mut() {
            list.clear();
        }
        self.arcs.resize_with(nodes, Vec::new);
        self.arcs.truncate(nodes);
        self.level.clear();
        self.level.resize(nodes, UNSEEN);
        self.next_arc.clear();
        self.next_arc.resize(nodes, 0);
    }

    pub fn node_count(&self) -> usize {
        self.arcs.len()
    }

    /// Adds an undirected edge as two opposite arcs of capacity `capacity`
    /// that serve as each other's residual reverse.
    pub fn add_undirected(&mut self, a: usize, b: usize, capacity: u64) {
        debug_assert!(a != b);
        let ra = self.arcs[b].len();
        let rb = self.arcs[a].len();
        self.arcs[a].push(Arc { to: b, rev: ra, residual: capacity });
        self.arcs[b].push(Arc { to: a, rev: rb, residual: capacity });
    }

    /// Adds a directed arc `a → b` with a zero-capacity reverse arc.
    pub fn add_directed(&mut self, a: usize, b: usize, capacity: u64) {
        debug_assert!(a != b);
        let ra = self.arcs[b].len();
        let rb = self.arcs[a].len();
        self.arcs[a].push(Arc { to: b, rev: ra, residual: capacity });
        self.arcs[b].push(Arc { to: a, rev: rb, residual: 0 });
    }

    fn build_levels(&mut self, source: usize, sink: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = UNSEEN);
        self.queue.clear();
        self.level[source] = 0;
        self.queue.push_back(source);
        while let Some(x) = self.queue.pop_front() {
            for arc in &self.arcs[x] {
                if arc.residual > 0 && self.level[arc.to] == UNSEEN {
                    self.level[arc.to] = self.level[x] + 1;
                    self.queue.push_back(arc.to);
                }
            }
        }
        self.level[sink] != UNSEEN
    }

    /// One augmenting path in the level graph, found iteratively with
    /// current-arc pointers. Returns the pushed amount, 0 if none.
    fn augment(&mut self, source: usize, sink: usize) -> u64 {
        self.path.clear();
        let mut x = source;
        loop {
            if x == sink {
                let pushed = self
                    .path
                    .iter()
                    .map(|&(node, i)| self.arcs[node][i].residual)
                    .min()
                    .unwrap_or(0);
                for &(node, i) in &self.path {
                    let Arc { to, rev, .. } = self.arcs[node][i];
                    self.arcs[node][i].residual -= pushed;
                    self.arcs[to][rev].residual += pushed;
                }
                return pushed;
            }
            let mut advanced = false;
            while self.next_arc[x] < self.arcs[x].len() {
                let i = self.next_arc[x];
                let arc = self.arcs[x][i];
                if arc.residual > 0 && self.level[arc.to] == self.level[x] + 1 {
                    self.path.push((x, i));
                    x = arc.to;
                    advanced = true;
                    break;
                }
                self.next_arc[x] += 1;
            }
            if !advanced {
                // Dead end: prune x from the level graph and retreat.
                self.level[x] = UNSEEN;
                match self.path.pop() {
                    Some((prev, _)) => {
                        self.next_arc[prev] += 1;
                        x = prev;
                    }
                    None => return 0,
                }
            }
        }
    }

    /// Maximum flow value from `source` to `sink`. Leaves the residual
    /// network in place for [`Self::reachable_from`] and
    /// [`Self::reaching`].
    pub fn max_flow(&mut self, source: usize, sink: usize) -> u128 {
        assert!(source != sink);
        let mut total: u128 = 0;
        while self.build_levels(source, sink) {
            self.next_arc.iter_mut().for_each(|p| *p = 0);
            loop {
                let pushed = self.augment(source, sink);
                if pushed == 0 {
                    break;
                }
                total += pushed as u128;
            }
        }
        total
    }

    /// Nodes reachable from `source` along arcs with positive residual.
    pub fn reachable_from(&mut self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[source] = true;
        self.queue.clear();
        self.queue.push_back(source);
        while let Some(x) = self.queue.pop_front() {
            for arc in &self.arcs[x] {
                if arc.residual > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    self.queue.push_back(arc.to);
                }
            }
        }
        seen
    }

    /// Nodes that can reach `sink` along arcs with positive residual.
    pub fn reaching(&mut self, sink: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[sink] = true;
        self.queue.clear();
        self.queue.push_back(sink);
        while let Some(y) = self.queue.pop_front() {
            for arc in &self.arcs[y] {
                // arc is y → x; its reverse x → y is what matters.
                let x = arc.to;
                if !seen[x] && self.arcs[x][arc.rev].residual > 0 {
                    seen[x] = true;
                    self.queue.push_back(x);
                }
            }
        }
        seen
    }
}
