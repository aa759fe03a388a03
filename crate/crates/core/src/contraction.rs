//! Random edge contraction baseline.
//!
//! Each trial contracts weight-proportionally chosen edges until two super
//! vertices remain and keeps the resulting cut if it is α-approximate. This
//! finds a subset of the approximate minimum cuts with no completeness
//! guarantee; it exists for benchmarking and sanity cross-checks.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, Error, Result};
use crate::graph::{Cut, Graph};
use crate::ratio::Ratio;
use crate::terminal::global_min_cut;
use crate::vertex_set::VertexSet;

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[rb] = ra;
        true
    }
}

/// Canonical α-approximate cuts found by `trials` seeded contraction runs,
/// sorted by value then side. Deterministic for a fixed `seed`.
pub fn contraction_baseline(g: &Graph, alpha: Ratio, trials: u32, seed: u64) -> Result<Vec<Cut>> {
    if trials == 0 {
        return Err(domain("contraction baseline needs at least one trial"));
    }
    if alpha < Ratio::ONE {
        return Err(Error::AlphaBelowOne);
    }
    let lambda = global_min_cut(g)?.lambda;
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = BTreeSet::new();
    let mut live: Vec<usize> = Vec::with_capacity(g.edge_count());

    for _ in 0..trials {
        let mut ds = DisjointSet::new(n);
        let mut components = n;
        live.clear();
        live.extend(0..g.edge_count());
        while components > 2 {
            // Drop edges that became internal to a super vertex.
            live.retain(|&i| {
                let e = g.edges()[i];
                ds.find(e.u) != ds.find(e.v)
            });
            let total: u64 = live.iter().map(|&i| g.edges()[i].weight.get()).sum();
            let mut pick = rng.gen_range(0..total);
            let chosen = live
                .iter()
                .copied()
                .find(|&i| {
                    let w = g.edges()[i].weight.get();
                    if pick < w {
                        true
                    } else {
                        pick -= w;
                        false
                    }
                })
                .expect("pick < total");
            let e = g.edges()[chosen];
            if ds.union(e.u, e.v) {
                components -= 1;
            }
        }
        let root = ds.find(0);
        let side = VertexSet::from_ids(n, (0..n).filter(|&v| ds.find(v) != root)).expect("ids < n");
        let cut = g.canonicalize(&side)?;
        if alpha.admits(cut.value, lambda) {
            found.insert(cut);
        }
    }
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::brute_force_cuts;
    use crate::generate;

    #[test]
    fn triangle_results_are_min_cuts() {
        let g = generate::complete(3);
        let found = contraction_baseline(&g, Ratio::ONE, 50, 1).unwrap();
        let all = brute_force_cuts(&g, Ratio::ONE).unwrap();
        assert!(!found.is_empty());
        assert!(found.iter().all(|c| all.contains(c)));
    }

    #[test]
    fn path_finds_both_bridges() {
        let found = contraction_baseline(&generate::path(3), Ratio::ONE, 100, 7).unwrap();
        assert_eq!(found.len(), 2);
    }

    #[test]
    fn zero_trials_rejected() {
        assert!(contraction_baseline(&generate::cycle(4), Ratio::ONE, 0, 1).is_err());
    }

    #[test]
    fn same_seed_same_output() {
        let g = generate::cycle(8);
        let a = contraction_baseline(&g, Ratio::new(3, 2).unwrap(), 40, 99).unwrap();
        let b = contraction_baseline(&g, Ratio::new(3, 2).unwrap(), 40, 99).unwrap();
        assert_eq!(a, b);
    }
}
