//! Enumeration of all α-approximate minimum cuts.
//!
//! Every cut `U` with `d(U) ≤ α·λ` is the unique minimum `(S, T)`-terminal
//! cut for some `|S|, |T| ≤ ⌊2α⌋ + 1`, and for that pair the source-minimal
//! minimum cut is `U` itself. Scanning every such pair and keeping the
//! source-minimal sides that pass the value filter therefore yields exactly
//! the α-approximate cuts.
//!
//! The scan is split by source set so callers can distribute it: build an
//! [`Enumerator`], hand each worker its own [`ScanState`], call
//! [`Enumerator::scan_source`] for its share of [`Enumerator::source_sets`],
//! and merge with [`Enumerator::finish`].

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Cut, Graph};
use crate::ratio::Ratio;
use crate::terminal::{global_min_cut, TerminalCutSolver};
use crate::vertex_set::VertexSet;
use crate::weight::Weight;

/// Largest `n` accepted by [`brute_force_cuts`].
pub const BRUTE_FORCE_MAX_N: usize = 24;

/// Default limit on the number of terminal pairs a scan may visit.
pub const DEFAULT_PAIR_BUDGET: u128 = 100_000_000;

/// Optional pruning hook consulted before each terminal pair is solved.
pub trait PairFilter: Sync {
    fn accept(&self, source: &VertexSet, sink: &VertexSet) -> bool;
}

/// Accepts every pair.
#[derive(Debug, Clone, Copy, Default)]
pub struct AcceptAll;

impl PairFilter for AcceptAll {
    fn accept(&self, _: &VertexSet, _: &VertexSet) -> bool {
        true
    }
}

#[derive(Clone, Copy)]
pub struct EnumOptions<'a> {
    /// `None` disables the budget guard.
    pub budget: Option<u128>,
    pub filter: &'a dyn PairFilter,
}

impl Default for EnumOptions<'_> {
    fn default() -> Self {
        EnumOptions { budget: Some(DEFAULT_PAIR_BUDGET), filter: &AcceptAll }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub alpha: Ratio,
    pub lambda: Weight,
    /// Canonical cuts sorted by value, then lexicographically by side.
    pub cuts: Vec<Cut>,
    pub pairs_scanned: u64,
    pub flow_calls: u64,
}

impl EnumerationResult {
    /// `|cuts| ≤ n^(⌊4α⌋+2)`, which implies `|cuts| ≤ n^(4α+2)`.
    pub fn within_count_bound(&self, n: usize) -> bool {
        self.cuts.len() as u128 <= count_bound(n, self.alpha)
    }
}

/// `n^(⌊4α⌋+2)`, saturating.
pub fn count_bound(n: usize, alpha: Ratio) -> u128 {
    let exp = alpha.count_exponent_floor().min(u32::MAX as u64) as u32;
    (n as u128).checked_pow(exp).unwrap_or(u128::MAX)
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Per-worker state: flow scratch plus the cuts collected so far.
#[derive(Debug, Default, Clone)]
pub struct ScanState {
    solver: TerminalCutSolver,
    cuts: BTreeSet<Cut>,
    pairs_scanned: u64,
}

impl ScanState {
    pub fn new() -> Self {
        Self::default()
    }
}

#[derive(Debug, Clone)]
pub struct Enumerator<'g> {
    graph: &'g Graph,
    alpha: Ratio,
    lambda: Weight,
    max_terminals: usize,
}

impl<'g> Enumerator<'g> {
    pub fn new(graph: &'g Graph, alpha: Ratio) -> Result<Self> {
        if alpha < Ratio::ONE {
            return Err(Error::AlphaBelowOne);
        }
        let lambda = global_min_cut(graph)?.lambda;
        let n = graph.vertex_count();
        let max_terminals = (alpha.terminal_size_bound().min(n as u64)) as usize;
        Ok(Enumerator { graph, alpha, lambda, max_terminals })
    }

    pub fn lambda(&self) -> Weight {
        self.lambda
    }

    pub fn alpha(&self) -> Ratio {
        self.alpha
    }

    /// `min(⌊2α⌋ + 1, n)`.
    pub fn max_terminals(&self) -> usize {
        self.max_terminals
    }

    /// Number of ordered pairs of disjoint non-empty `S, T` with both sizes
    /// at most [`Self::max_terminals`].
    pub fn pair_count(&self) -> u128 {
        let n = self.graph.vertex_count();
        let k = self.max_terminals;
        let mut total: u128 = 0;
        for s in 1..=k {
            let sinks: u128 = (1..=k).map(|t| binomial(n - s, t)).fold(0, u128::saturating_add);
            total = total.saturating_add(binomial(n, s).saturating_mul(sinks));
        }
        total
    }

    pub fn check_budget(&self, budget: Option<u128>) -> Result<()> {
        match budget {
            Some(budget) if self.pair_count() > budget => {
                Err(Error::BudgetExceeded { required: self.pair_count(), budget })
            }
            _ => Ok(()),
        }
    }

    /// Source sets by ascending size, lexicographic within a size.
    pub fn source_sets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        let n = self.graph.vertex_count();
        (1..=self.max_terminals).flat_map(move |size| {
            (0..n).combinations(size).map(move |ids| VertexSet::from_ids(n, ids).expect("ids < n"))
        })
    }

    /// Scans every sink set paired with `source`.
    pub fn scan_source(
        &self,
        source: &VertexSet,
        filter: &dyn PairFilter,
        state: &mut ScanState,
    ) -> Result<()> {
        let n = self.graph.vertex_count();
        let rest: Vec<usize> = source.complement().to_vec();
        for size in 1..=self.max_terminals.min(rest.len()) {
            for ids in rest.iter().copied().combinations(size) {
                let sink = VertexSet::from_ids(n, ids).expect("ids < n");
                if !filter.accept(source, &sink) {
                    continue;
                }
                state.pairs_scanned += 1;
                let r = state.solver.solve_sets(self.graph, source, &sink)?;
                if self.alpha.admits(r.value, self.lambda) {
                    state.cuts.insert(self.graph.canonicalize(&r.source_min_side)?);
                }
            }
        }
        Ok(())
    }

    /// Merges worker states into the final, deterministically ordered result.
    pub fn finish<I: IntoIterator<Item = ScanState>>(&self, states: I) -> Result<EnumerationResult> {
        let mut cuts = BTreeSet::new();
        let (mut pairs_scanned, mut flow_calls) = (0, 0);
        for mut st in states {
            pairs_scanned += st.pairs_scanned;
            flow_calls += st.solver.flow_calls();
            cuts.append(&mut st.cuts);
        }
        let result = EnumerationResult {
            alpha: self.alpha,
            lambda: self.lambda,
            cuts: cuts.into_iter().collect(),
            pairs_scanned,
            flow_calls,
        };
        let n = self.graph.vertex_count();
        if !result.within_count_bound(n) {
            return Err(Error::Internal(format!(
                "{} cuts exceed the n^(4α+2) bound for n = {n}, α = {}",
                result.cuts.len(),
                self.alpha
            )));
        }
        Ok(result)
    }

    /// Sequential scan of all pairs.
    pub fn run(&self, filter: &dyn PairFilter) -> Result<EnumerationResult> {
        let mut state = ScanState::new();
        for source in self.source_sets() {
            self.scan_source(&source, filter, &mut state)?;
        }
        self.finish([state])
    }
}

/// All canonical cuts with `d(U) ≤ α·λ`, using the default pair budget and
/// no pair filter.
pub fn enumerate_approx_min_cuts(g: &Graph, alpha: Ratio) -> Result<EnumerationResult> {
    enumerate_with(g, alpha, &EnumOptions::default())
}

pub fn enumerate_with(g: &Graph, alpha: Ratio, options: &EnumOptions<'_>) -> Result<EnumerationResult> {
    let e = Enumerator::new(g, alpha)?;
    e.check_budget(options.budget)?;
    e.run(options.filter)
}

/// Cut values of all `2^(n−1) − 1` canonical sides, indexed by the side's
/// bitmask shifted right by one (vertex 0 is never in a canonical side).
fn all_canonical_values(g: &Graph) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLargeForBruteForce(n));
    }
    g.require_connected()?;
    let count = 1usize << (n - 1);
    let mut values = alloc::vec![0u64; count];
    // Gray-code walk: flipping vertex v changes d by the weights to v's
    // neighbours on the same side minus those on the other side.
    let mut mask: u32 = 0;
    let mut value: i128 = 0;
    for i in 1..count {
        let v = i.trailing_zeros() as usize + 1;
        let inside = mask >> v & 1 == 1;
        for &(w, c) in g.neighbors(v) {
            let same = (mask >> w & 1 == 1) == inside;
            value += if same { c.get() as i128 } else { -(c.get() as i128) };
        }
        mask ^= 1 << v;
        values[(mask >> 1) as usize] = value as u64;
    }
    Ok(values)
}

/// Exhaustive oracle: every canonical cut with value at most `α·λ`, with `λ`
/// taken from the same scan. Refuses `n > 24`.
pub fn brute_force_cuts(g: &Graph, alpha: Ratio) -> Result<Vec<Cut>> {
    if alpha < Ratio::ONE {
        return Err(Error::AlphaBelowOne);
    }
    let n = g.vertex_count();
    let values = all_canonical_values(g)?;
    let lambda = Weight(values[1..].iter().copied().min().expect("n >= 2"));
    let mut cuts: Vec<Cut> = values
        .iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, &v)| alpha.admits(Weight(v), lambda))
        .map(|(m, &v)| Cut { value: Weight(v), side: VertexSet::from_mask(n, (m as u64) << 1) })
        .collect();
    cuts.sort();
    Ok(cuts)
}

/// `λ` by exhaustive scan. Refuses `n > 24`.
pub fn brute_force_lambda(g: &Graph) -> Result<Weight> {
    let values = all_canonical_values(g)?;
    Ok(Weight(values[1..].iter().copied().min().expect("n >= 2")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::generate;

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids.iter().copied()).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 0), 1);
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }

    #[test]
    fn triangle_min_cuts() {
        let r = enumerate_approx_min_cuts(&generate::complete(3), Ratio::ONE).unwrap();
        assert_eq!(r.lambda, Weight(2));
        assert_eq!(r.cuts.len(), 3);
        assert!(r.cuts.iter().all(|c| c.value == Weight(2)));
    }

    #[test]
    fn path_cuts_at_alpha_two() {
        let r = enumerate_approx_min_cuts(&generate::path(3), Ratio::integer(2)).unwrap();
        let got: Vec<(Vec<usize>, u64)> = r.cuts.iter().map(|c| (c.side.to_vec(), c.value.get())).collect();
        assert_eq!(got, [(vec![1, 2], 1), (vec![2], 1), (vec![1], 2)]);
    }

    #[test]
    fn path_pair_count_matches_scan() {
        let g = generate::path(3);
        let e = Enumerator::new(&g, Ratio::integer(2)).unwrap();
        // k = 5 capped at n = 3: s = 1 → 3·(2 + 1), s = 2 → 3·1.
        assert_eq!(e.pair_count(), 12);
        let r = e.run(&AcceptAll).unwrap();
        assert_eq!(r.pairs_scanned, 12);
        assert_eq!(r.flow_calls, 12);
    }

    #[test]
    fn source_sets_are_size_then_lex_ordered() {
        let g = generate::cycle(4);
        let e = Enumerator::new(&g, Ratio::ONE).unwrap();
        let sets: Vec<Vec<usize>> = e.source_sets().map(|s| s.to_vec()).collect();
        assert_eq!(sets[..5], [vec![0], vec![1], vec![2], vec![3], vec![0, 1]]);
        assert_eq!(sets.len(), 4 + 6 + 4);
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = generate::cycle(5);
        assert_eq!(enumerate_approx_min_cuts(&g, Ratio::new(1, 2).unwrap()), Err(Error::AlphaBelowOne));
        let disconnected = Graph::new(4, [(0, 1, 1), (2, 3, 1)]).unwrap();
        assert_eq!(enumerate_approx_min_cuts(&disconnected, Ratio::ONE), Err(Error::Disconnected));
        let opts = EnumOptions { budget: Some(10), ..EnumOptions::default() };
        assert!(matches!(
            enumerate_with(&g, Ratio::ONE, &opts),
            Err(Error::BudgetExceeded { budget: 10, .. })
        ));
    }

    #[test]
    fn filter_hook_skips_pairs() {
        struct SingletonSourcesOnly;
        impl PairFilter for SingletonSourcesOnly {
            fn accept(&self, source: &VertexSet, _: &VertexSet) -> bool {
                source.len() == 1
            }
        }
        let g = generate::cycle(5);
        let opts = EnumOptions { budget: None, filter: &SingletonSourcesOnly };
        let full = enumerate_approx_min_cuts(&g, Ratio::ONE).unwrap();
        let pruned = enumerate_with(&g, Ratio::ONE, &opts).unwrap();
        assert!(pruned.pairs_scanned < full.pairs_scanned);
        assert!(pruned.cuts.iter().all(|c| full.cuts.contains(c)));
    }

    #[test]
    fn brute_force_examples() {
        let p3 = brute_force_cuts(&generate::path(3), Ratio::ONE).unwrap();
        assert_eq!(p3.len(), 2);
        assert!(p3.iter().all(|c| c.value == Weight(1)));
        assert_eq!(brute_force_cuts(&generate::complete(3), Ratio::ONE).unwrap().len(), 3);

        let c16 = generate::cycle(16);
        let fig = set(16, &[1, 2, 5, 6, 9, 10, 13, 14]).complement();
        let cuts = brute_force_cuts(&c16, Ratio::integer(4)).unwrap();
        let canonical = c16.canonicalize(&fig).unwrap();
        assert_eq!(canonical.value, Weight(8));
        assert!(cuts.contains(&canonical));

        assert_eq!(brute_force_cuts(&generate::cycle(25), Ratio::ONE), Err(Error::TooLargeForBruteForce(25)));
    }

    #[test]
    fn gray_code_values_match_direct_sums() {
        let g = Graph::new(5, [(0, 1, 3), (1, 2, 1), (2, 3, 4), (3, 4, 1), (4, 0, 5), (1, 3, 9)]).unwrap();
        let values = all_canonical_values(&g).unwrap();
        for (m, &v) in values.iter().enumerate().skip(1) {
            let side = VertexSet::from_mask(5, (m as u64) << 1);
            assert_eq!(v, g.cut_value(&side).unwrap().get());
        }
        assert_eq!(brute_force_lambda(&g).unwrap(), values[1..].iter().copied().min().map(Weight).unwrap());
    }
}
