#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use termcut_core::{generate, Graph, VertexSet, Weight};

pub fn random_graph(seed: u64, n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate::random_connected_graph(&mut rng, n, 35, 10)
}

/// Direct edge sum, independent of `Graph::cut_value`.
pub fn d(g: &Graph, side: &VertexSet) -> u64 {
    g.edges()
        .iter()
        .filter(|e| side.contains(e.u) ^ side.contains(e.v))
        .map(|e| e.weight.get())
        .sum()
}

/// All `(S, T)`-terminal cut source sides with their values.
pub fn terminal_cuts(g: &Graph, s: &VertexSet, t: &VertexSet) -> Vec<(u64, VertexSet)> {
    let free: Vec<usize> = s.union(t).complement().to_vec();
    (0u64..1 << free.len())
        .map(|mask| {
            let mut side = s.clone();
            for (i, &v) in free.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    side.insert(v);
                }
            }
            (d(g, &side), side)
        })
        .collect()
}

/// Minimum value and every minimising source side.
pub fn brute_min_terminal(g: &Graph, s: &VertexSet, t: &VertexSet) -> (Weight, Vec<VertexSet>) {
    let all = terminal_cuts(g, s, t);
    let best = all.iter().map(|(v, _)| *v).min().unwrap();
    (Weight(best), all.into_iter().filter(|(v, _)| *v == best).map(|(_, s)| s).collect())
}

pub fn brute_lambda(g: &Graph) -> u64 {
    let n = g.vertex_count();
    (1u64..(1 << n) - 1).map(|m| d(g, &VertexSet::from_mask(n, m))).min().unwrap()
}

/// Splits `mask`-selected vertices into disjoint non-empty S, T using a
/// second mask, or `None` if either side would be empty.
pub fn terminal_sets(n: usize, chosen: u64, side: u64) -> Option<(VertexSet, VertexSet)> {
    let s = VertexSet::from_mask(n, chosen & side);
    let t = VertexSet::from_mask(n, chosen & !side);
    (!s.is_empty() && !t.is_empty()).then_some((s, t))
}
