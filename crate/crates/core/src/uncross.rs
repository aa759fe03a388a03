//! Executable checks for the uncrossing argument behind the witness size
//! bound: the σ-functional, `Σ d(Y_i) ≤ σ`, the partition built from the
//! sink sides `A_i`, and submodularity of the cut function.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, Result};
use crate::generate;
use crate::graph::Graph;
use crate::terminal::TerminalCutSolver;
use crate::vertex_set::VertexSet;
use crate::weight::Weight;

/// `(Y_1, …, Y_p, W, Z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncrossPartition {
    pub y: Vec<VertexSet>,
    pub w: VertexSet,
    pub z: VertexSet,
}

impl UncrossPartition {
    pub fn p(&self) -> usize {
        self.y.len()
    }

    fn parts(&self) -> impl Iterator<Item = &VertexSet> {
        self.y.iter().chain([&self.w, &self.z])
    }

    pub fn all_parts_nonempty(&self) -> bool {
        self.parts().all(|s| !s.is_empty())
    }

    /// `p ≥ 2` and the `p + 2` parts are non-empty and partition `V`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.p() < 2 {
            return Err(domain("uncrossing partition needs p >= 2"));
        }
        let mut covered = VertexSet::empty(g.vertex_count());
        for part in self.parts() {
            g.check_set(part)?;
            if part.is_empty() {
                return Err(domain("uncrossing partition has an empty part"));
            }
            if !covered.is_disjoint(part) {
                return Err(domain("uncrossing partition parts overlap"));
            }
            covered = covered.union(part);
        }
        if !covered.is_full() {
            return Err(domain("uncrossing partition does not cover every vertex"));
        }
        Ok(())
    }
}

/// σ without validation. Vertices outside every part are ignored.
fn sigma_unchecked(g: &Graph, part: &UncrossPartition) -> Weight {
    const NONE: usize = usize::MAX;
    let p = part.p();
    let mut label = vec![NONE; g.vertex_count()];
    for (i, set) in part.parts().enumerate() {
        for v in set {
            label[v] = i;
        }
    }
    let (w_label, z_label) = (p, p + 1);
    let mut twice: u64 = 0;
    let mut once: u64 = 0;
    for e in g.edges() {
        let (a, b) = (label[e.u], label[e.v]);
        if a == NONE || b == NONE || a == b {
            continue;
        }
        let w = e.weight.get();
        match (a < p, b < p) {
            (true, true) => twice += w,
            (false, false) => {
                debug_assert!((a, b) == (w_label, z_label) || (a, b) == (z_label, w_label));
                twice += w
            }
            _ => once += w,
        }
    }
    // Total weight ≤ u64::MAX / 2, so this cannot overflow.
    Weight(2 * twice + once)
}

/// Twice the weight between distinct `Y_i`, `Y_j` and between `W`, `Z`,
/// plus once the weight between `∪Y_i` and `W ∪ Z`.
pub fn sigma(g: &Graph, part: &UncrossPartition) -> Result<Weight> {
    part.validate(g)?;
    Ok(sigma_unchecked(g, part))
}

/// `Σ_i d(Y_i) ≤ σ(Y_1, …, Y_p, W, Z)`.
pub fn check_inequality_1(g: &Graph, part: &UncrossPartition) -> Result<bool> {
    let s = sigma(g, part)?;
    let sum: Weight = part.y.iter().map(|y| g.boundary_weight(y)).sum();
    Ok(sum <= s)
}

/// `Z = ∩ (V∖A_i)`, `W = ∪_{i<j} (A_i ∩ A_j)`, `Y_i = A_i ∖ W`. Parts may be
/// empty when the sets do not satisfy the uncrossing hypothesis.
pub fn build_uncross_partition(g: &Graph, a: &[VertexSet]) -> Result<UncrossPartition> {
    if a.len() < 2 {
        return Err(domain("uncrossing needs at least two sets"));
    }
    for s in a {
        g.check_set(s)?;
    }
    let n = g.vertex_count();
    let mut z = VertexSet::full(n);
    let mut w = VertexSet::empty(n);
    for (i, ai) in a.iter().enumerate() {
        z = z.difference(ai);
        for aj in &a[i + 1..] {
            w = w.union(&ai.intersection(aj));
        }
    }
    let y = a.iter().map(|ai| ai.difference(&w)).collect();
    Ok(UncrossPartition { y, w, z })
}

/// `d(A) + d(B) ≥ d(A ∩ B) + d(A ∪ B)` with `d(∅) = d(V) = 0`.
pub fn check_submodularity(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    g.check_set(a)?;
    g.check_set(b)?;
    let d = |s: &VertexSet| g.boundary_weight(s).get() as u128;
    Ok(d(a) + d(b) >= d(&a.intersection(b)) + d(&a.union(b)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma1Report {
    pub hypothesis_holds: bool,
    /// Sink sides `A_i` of the source-minimal minimum
    /// `((s ∪ r)∖{u_i}, V∖u)`-terminal cuts, in ascending order of `u_i`.
    pub a: Vec<VertexSet>,
    pub a_values: Vec<Weight>,
    /// `d(u)`.
    pub cut_value: Weight,
    pub partition: Option<UncrossPartition>,
    pub parts_nonempty: bool,
    pub sigma: Option<Weight>,
    /// `min_{i≠j} d(A_i) + d(A_j)`.
    pub pair_min: Option<Weight>,
    /// `Σ_i d(Y_i)`.
    pub sum_dy: Option<Weight>,
    pub min_dy: Option<Weight>,
}

impl Lemma1Report {
    pub fn p(&self) -> usize {
        self.a.len()
    }

    /// Non-empty parts and `Σ d(Y_i) ≤ σ ≤ min_{i≠j} d(A_i) + d(A_j)`.
    /// Vacuously true when the hypothesis fails.
    pub fn chain_holds(&self) -> bool {
        if !self.hypothesis_holds {
            return true;
        }
        match (self.sum_dy, self.sigma, self.pair_min) {
            (Some(sum), Some(sigma), Some(pair)) => self.parts_nonempty && sum <= sigma && sigma <= pair,
            _ => false,
        }
    }

    /// If every `d(A_i) ≤ d(u)`, then `p · min_i d(Y_i) ≤ 2·d(u)`: the
    /// averaging step that turns the chain into a cut cheaper than `λ`.
    pub fn averaging_step_holds(&self) -> bool {
        if !self.hypothesis_holds || self.a_values.iter().any(|&v| v > self.cut_value) {
            return true;
        }
        match self.min_dy {
            Some(m) => m.widening_mul(self.p() as u64) <= self.cut_value.widening_mul(2),
            None => false,
        }
    }
}

/// Evaluates the uncrossing lemma on one instance.
///
/// Requires `∅ ≠ r ⊊ u ⊊ V`, `s ⊆ u∖r` and `|s| ≥ 2`.
pub fn check_lemma1(g: &Graph, u: &VertexSet, r: &VertexSet, s: &VertexSet) -> Result<Lemma1Report> {
    for set in [u, r, s] {
        g.check_set(set)?;
    }
    if r.is_empty() || !r.is_subset(u) || r == u || u.is_full() {
        return Err(domain("need non-empty r strictly inside u strictly inside V"));
    }
    if !s.is_subset(&u.difference(r)) || s.len() < 2 {
        return Err(domain("need at least two vertices of u outside r"));
    }
    g.require_connected()?;

    let sink = u.complement();
    let base = s.union(r);
    let members = s.to_vec();
    let mut solver = TerminalCutSolver::new();
    let mut a = Vec::with_capacity(members.len());
    for &ui in &members {
        let mut source = base.clone();
        source.remove(ui);
        let res = solver.solve_sets(g, &source, &sink)?;
        a.push(res.source_min_side.complement());
    }
    let a_values: Vec<Weight> = a.iter().map(|ai| g.boundary_weight(ai)).collect();

    let hypothesis_holds = members.iter().enumerate().all(|(i, &ui)| {
        a[i].contains(ui) && a.iter().enumerate().all(|(j, aj)| j == i || !aj.contains(ui))
    });

    let mut report = Lemma1Report {
        hypothesis_holds,
        a,
        a_values,
        cut_value: g.boundary_weight(u),
        partition: None,
        parts_nonempty: false,
        sigma: None,
        pair_min: None,
        sum_dy: None,
        min_dy: None,
    };
    if !hypothesis_holds {
        return Ok(report);
    }

    let part = build_uncross_partition(g, &report.a)?;
    let dy: Vec<Weight> = part.y.iter().map(|y| g.boundary_weight(y)).collect();
    let mut pair_min: Option<Weight> = None;
    for i in 0..report.p() {
        for j in i + 1..report.p() {
            let v = report.a_values[i] + report.a_values[j];
            pair_min = Some(pair_min.map_or(v, |m| m.min(v)));
        }
    }
    report.parts_nonempty = part.all_parts_nonempty();
    report.sigma = Some(sigma_unchecked(g, &part));
    report.sum_dy = Some(dy.iter().copied().sum());
    report.min_dy = dy.iter().copied().min();
    report.pair_min = pair_min;
    report.partition = Some(part);
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct HarvestConfig {
    pub seed: u64,
    /// Stop once this many hypothesis-holding instances are found.
    pub target: usize,
    pub max_trials: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub p_choices: Vec<usize>,
    pub extra_edge_percent: u32,
    pub max_weight: u64,
}

impl Default for HarvestConfig {
    fn default() -> Self {
        HarvestConfig {
            seed: 0,
            target: 100,
            max_trials: 200_000,
            min_n: 6,
            max_n: 10,
            p_choices: vec![2, 3],
            extra_edge_percent: 35,
            max_weight: 10,
        }
    }
}

#[derive(Debug, Clone)]
pub struct HarvestedInstance {
    pub graph: Graph,
    pub u: VertexSet,
    pub r: VertexSet,
    pub s: VertexSet,
    pub report: Lemma1Report,
}

#[derive(Debug, Clone, Default)]
pub struct HarvestSummary {
    pub trials: usize,
    pub instances: Vec<HarvestedInstance>,
    /// Harvested instances whose chain or averaging step failed.
    pub violations: usize,
    pub singleton_r: usize,
}

impl HarvestSummary {
    pub fn harvested(&self) -> usize {
        self.instances.len()
    }

    fn record(&mut self, inst: HarvestedInstance) {
        if !(inst.report.chain_holds() && inst.report.averaging_step_holds()) {
            self.violations += 1;
        }
        if inst.r.len() == 1 {
            self.singleton_r += 1;
        }
        self.instances.push(inst);
    }
}

/// Random `(u, r, s)` with `|s| = p` on `g`, or `None` if `g` is too small.
/// `r` is a singleton half of the time.
pub fn sample_instance<R: Rng + ?Sized>(
    rng: &mut R,
    g: &Graph,
    p: usize,
) -> Option<(VertexSet, VertexSet, VertexSet)> {
    let n = g.vertex_count();
    if n < p + 2 {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let u_len = rng.gen_range(p + 1..n);
    let r_len = if rng.gen_bool(0.5) { 1 } else { rng.gen_range(1..=u_len - p) };
    let u = VertexSet::from_ids(n, order[..u_len].iter().copied())?;
    let r = VertexSet::from_ids(n, order[..r_len].iter().copied())?;
    // order is a uniform shuffle, so the next p members of u form a uniform
    // p-subset of u∖r.
    let s = VertexSet::from_ids(n, order[r_len..r_len + p].iter().copied())?;
    Some((u, r, s))
}

/// Seeded search over random connected graphs for instances satisfying the
/// uncrossing hypothesis; every one found is checked.
pub fn harvest_lemma1(cfg: &HarvestConfig) -> Result<HarvestSummary> {
    if cfg.p_choices.iter().any(|&p| p < 2) || cfg.p_choices.is_empty() {
        return Err(domain("p choices must be non-empty and at least 2"));
    }
    if cfg.min_n > cfg.max_n || cfg.min_n < 2 {
        return Err(domain("invalid vertex-count range"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut summary = HarvestSummary::default();
    while summary.harvested() < cfg.target && summary.trials < cfg.max_trials {
        summary.trials += 1;
        let n = rng.gen_range(cfg.min_n..=cfg.max_n);
        let g = generate::random_connected_graph(&mut rng, n, cfg.extra_edge_percent, cfg.max_weight);
        let p = *cfg.p_choices.choose(&mut rng).expect("non-empty");
        let Some((u, r, s)) = sample_instance(&mut rng, &g, p) else { continue };
        let report = check_lemma1(&g, &u, &r, &s)?;
        if report.hypothesis_holds {
            summary.record(HarvestedInstance { graph: g, u, r, s, report });
        }
    }
    Ok(summary)
}

/// Like [`harvest_lemma1`] on one fixed graph.
pub fn harvest_on_graph(g: &Graph, cfg: &HarvestConfig) -> Result<HarvestSummary> {
    if cfg.p_choices.iter().any(|&p| p < 2) || cfg.p_choices.is_empty() {
        return Err(domain("p choices must be non-empty and at least 2"));
    }
    g.require_connected()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut summary = HarvestSummary::default();
    while summary.harvested() < cfg.target && summary.trials < cfg.max_trials {
        summary.trials += 1;
        let p = *cfg.p_choices.choose(&mut rng).expect("non-empty");
        let Some((u, r, s)) = sample_instance(&mut rng, g, p) else { continue };
        let report = check_lemma1(g, &u, &r, &s)?;
        if report.hypothesis_holds {
            summary.record(HarvestedInstance { graph: g.clone(), u, r, s, report });
        }
    }
    Ok(summary)
}
