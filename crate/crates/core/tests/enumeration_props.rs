mod common;

use common::*;
use proptest::prelude::*;
use termcut_core::contraction::contraction_baseline;
use termcut_core::enumerate::{brute_force_cuts, count_bound, Enumerator};
use termcut_core::{enumerate_approx_min_cuts, generate, Ratio, VertexSet, Weight};

fn alpha_strategy() -> impl Strategy<Value = Ratio> {
    prop_oneof![Just(Ratio::ONE), Just(Ratio::new(3, 2).unwrap()), Just(Ratio::integer(2))]
}

/// Number of ordered disjoint pairs with 1 ≤ |S|, |T| ≤ k, by counting
/// (S, T) as a 3-colouring of the vertices.
fn pairs_by_colouring(n: usize, k: usize) -> u64 {
    (0..3u64.pow(n as u32))
        .filter(|&code| {
            let (mut s, mut t, mut c) = (0, 0, code);
            for _ in 0..n {
                match c % 3 {
                    1 => s += 1,
                    2 => t += 1,
                    _ => {}
                }
                c /= 3;
            }
            (1..=k).contains(&s) && (1..=k).contains(&t)
        })
        .count() as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn enumeration_equals_brute_force(seed in any::<u64>(), n in 4usize..=9, alpha in alpha_strategy()) {
        let g = random_graph(seed, n);
        let fast = enumerate_approx_min_cuts(&g, alpha).unwrap();
        let slow = brute_force_cuts(&g, alpha).unwrap();
        prop_assert_eq!(&fast.cuts, &slow);
        prop_assert!(fast.within_count_bound(n));
        for c in &fast.cuts {
            prop_assert_eq!(c.value.get(), d(&g, &c.side));
            prop_assert!(c.value.get() * alpha.denom() <= fast.lambda.get() * alpha.numer());
        }
    }

    #[test]
    fn monotone_in_alpha(seed in any::<u64>(), n in 4usize..=8) {
        let g = random_graph(seed, n);
        let a = enumerate_approx_min_cuts(&g, Ratio::ONE).unwrap();
        let b = enumerate_approx_min_cuts(&g, Ratio::new(3, 2).unwrap()).unwrap();
        let c = enumerate_approx_min_cuts(&g, Ratio::integer(2)).unwrap();
        prop_assert!(a.cuts.iter().all(|x| b.cuts.contains(x)));
        prop_assert!(b.cuts.iter().all(|x| c.cuts.contains(x)));
    }

    #[test]
    fn contraction_is_subset(seed in any::<u64>(), n in 4usize..=9, alpha in alpha_strategy()) {
        let g = random_graph(seed, n);
        let all = enumerate_approx_min_cuts(&g, alpha).unwrap();
        let found = contraction_baseline(&g, alpha, 30, seed).unwrap();
        prop_assert!(found.iter().all(|c| all.cuts.contains(c)));
    }
}

#[test]
fn pair_count_matches_colouring_count() {
    for n in 2..=8 {
        for alpha in [Ratio::ONE, Ratio::new(3, 2).unwrap(), Ratio::integer(2)] {
            let g = generate::cycle(n.max(3));
            let e = Enumerator::new(&g, alpha).unwrap();
            let k = (2 * alpha.numer() / alpha.denom() + 1) as usize;
            let expected = pairs_by_colouring(g.vertex_count(), k);
            assert_eq!(e.pair_count(), expected as u128, "n = {n}, alpha = {alpha}");
            let r = e.run(&termcut_core::enumerate::AcceptAll).unwrap();
            assert_eq!(r.pairs_scanned, expected);
            assert_eq!(r.flow_calls, expected);
        }
    }
}

#[test]
fn cycle_counts() {
    // Brute-force counts on C8: C(8,2) = 28 min cuts, plus C(8,4) = 70 cuts of value 4.
    let g = generate::cycle(8);
    assert_eq!(enumerate_approx_min_cuts(&g, Ratio::ONE).unwrap().cuts.len(), 28);
    assert_eq!(enumerate_approx_min_cuts(&g, Ratio::new(3, 2).unwrap()).unwrap().cuts.len(), 28);
    assert_eq!(enumerate_approx_min_cuts(&g, Ratio::integer(2)).unwrap().cuts.len(), 98);
    assert!(98 <= count_bound(8, Ratio::integer(2)));
}

#[test]
fn four_arc_cut_is_enumerated() {
    let g = generate::cycle(16);
    let arcs = VertexSet::from_ids(16, [1, 2, 5, 6, 9, 10, 13, 14]).unwrap();
    let canonical = g.canonicalize(&arcs).unwrap();
    assert_eq!(canonical.value, Weight(8));
    let cuts = brute_force_cuts(&g, Ratio::integer(4)).unwrap();
    assert!(cuts.contains(&canonical));
}
