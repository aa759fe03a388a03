//! Small graph families and seeded random instances for tests, benchmarks
//! and the lemma harvest.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Unit-weight cycle `v0 – v1 – … – v(n−1) – v0`.
pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n, 1))).expect("valid cycle")
}

/// Unit-weight path `v0 – v1 – … – v(n−1)`.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i, 1))).expect("valid path")
}

/// Unit-weight complete graph.
pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v, 1)))).expect("valid clique")
}

/// Connected graph on `n` vertices: a random spanning tree plus each other
/// pair independently with probability `extra_percent`%, weights uniform in
/// `1..=max_weight`.
pub fn random_connected_graph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    extra_percent: u32,
    max_weight: u64,
) -> Graph {
    let max_weight = max_weight.max(1);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((parent, order[i], rng.gen_range(1..=max_weight)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_range(0..100) < extra_percent {
                edges.push((u, v, rng.gen_range(1..=max_weight)));
            }
        }
    }
    Graph::new(n, edges).expect("generated graph is valid")
}
