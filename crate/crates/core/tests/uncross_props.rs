mod common;

use common::*;
use proptest::prelude::*;
use termcut_core::uncross::{build_uncross_partition, check_inequality_1, check_submodularity, sigma, UncrossPartition};
use termcut_core::{Graph, VertexSet};

/// σ straight from the definition, summing over ordered part pairs.
fn sigma_by_definition(g: &Graph, part: &UncrossPartition) -> u64 {
    let weight_between = |a: &VertexSet, b: &VertexSet| -> u64 {
        g.edges()
            .iter()
            .filter(|e| (a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u)))
            .map(|e| e.weight.get())
            .sum()
    };
    let p = part.y.len();
    let mut yy = 0;
    for i in 0..p {
        for j in i + 1..p {
            yy += weight_between(&part.y[i], &part.y[j]);
        }
    }
    let wz = weight_between(&part.w, &part.z);
    let all_y = part.y.iter().fold(VertexSet::empty(g.vertex_count()), |acc, y| acc.union(y));
    let rest = part.w.union(&part.z);
    2 * (yy + wz) + weight_between(&all_y, &rest)
}

fn random_partition(n: usize, p: usize, labels: &[usize]) -> Option<UncrossPartition> {
    let mut y = vec![VertexSet::empty(n); p];
    let mut w = VertexSet::empty(n);
    let mut z = VertexSet::empty(n);
    for (v, &l) in labels.iter().enumerate().take(n) {
        match l % (p + 2) {
            i if i < p => y[i].insert(v),
            i if i == p => w.insert(v),
            _ => z.insert(v),
        }
    }
    let part = UncrossPartition { y, w, z };
    part.all_parts_nonempty().then_some(part)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sigma_and_inequality_1(
        seed in any::<u64>(), n in 4usize..=10, p in 2usize..=4,
        labels in prop::collection::vec(0usize..64, 10)
    ) {
        prop_assume!(n >= p + 2);
        let g = random_graph(seed, n);
        let Some(part) = random_partition(n, p, &labels) else { return Ok(()) };
        let s = sigma(&g, &part).unwrap();
        prop_assert_eq!(s.get(), sigma_by_definition(&g, &part));
        let sum: u64 = part.y.iter().map(|y| d(&g, y)).sum();
        prop_assert!(sum <= s.get());
        prop_assert!(check_inequality_1(&g, &part).unwrap());
    }

    #[test]
    fn submodularity(seed in any::<u64>(), n in 2usize..=10, a in any::<u64>(), b in any::<u64>()) {
        let g = random_graph(seed, n);
        prop_assert!(check_submodularity(&g, &VertexSet::from_mask(n, a), &VertexSet::from_mask(n, b)).unwrap());
    }

    #[test]
    fn uncross_partition_covers_vertices(n in 3usize..=12, masks in prop::collection::vec(any::<u64>(), 2..5)) {
        let g = random_graph(n as u64, n);
        let a: Vec<VertexSet> = masks.iter().map(|&m| VertexSet::from_mask(n, m)).collect();
        let part = build_uncross_partition(&g, &a).unwrap();
        let mut covered = part.w.union(&part.z);
        prop_assert!(part.w.is_disjoint(&part.z));
        for (i, yi) in part.y.iter().enumerate() {
            prop_assert!(yi.is_disjoint(&covered));
            prop_assert!(yi.is_subset(&a[i]));
            covered = covered.union(yi);
        }
        prop_assert!(covered.is_full());
    }
}
