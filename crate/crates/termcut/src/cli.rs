//! Subcommand dispatch for the `termcut` binary.
//!
//! Exit codes: 0 success, 1 verification mismatch or internal failure,
//! 2 input or argument error, 3 pair budget exceeded without `--force`.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use termcut_core::contraction::contraction_baseline;
use termcut_core::enumerate::{brute_force_cuts, EnumOptions, DEFAULT_PAIR_BUDGET};
use termcut_core::uncross::{harvest_on_graph, HarvestConfig};
use termcut_core::witness::{check_size_bound, find_witness_with_lambda};
use termcut_core::{
    global_min_cut, is_unique_min_terminal_cut, Error, Graph, Ratio, TerminalPair, VertexSet,
};

use crate::edgelist::{format_weight, parse_graph};
use crate::parallel::{enumerate_parallel, with_threads};
use crate::report::{id_list, JsonCut, JsonReport, JsonWitness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "termcut", version, about = "Approximate minimum cuts via small terminal cuts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Edge-list graph file.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub output: Format,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Approximation factor, as "p/q" or a decimal.
    #[arg(long, default_value = "1", value_parser = parse_alpha)]
    pub alpha: Ratio,
    /// Maximum number of terminal pairs to scan.
    #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET as u64)]
    pub budget: u64,
    /// Scan even when the pair count exceeds the budget.
    #[arg(long)]
    pub force: bool,
    /// Worker threads for the scan (0 = one per core).
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

impl ScanArgs {
    fn options(&self) -> EnumOptions<'static> {
        EnumOptions { budget: (!self.force).then_some(self.budget as u128), ..EnumOptions::default() }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the global minimum cut value and one minimum cut.
    Mincut {
        #[command(flatten)]
        common: Common,
    },
    /// List every cut of value at most alpha times the minimum.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Find small terminal sets certifying a cut.
    Witness {
        #[command(flatten)]
        common: Common,
        /// Vertices on one side of the cut, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        cut: Vec<usize>,
    },
    /// Sample uncrossing instances on the graph and check each one.
    CheckLemma {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Stop after this many hypothesis-holding instances.
        #[arg(long, default_value_t = 100)]
        target: usize,
        /// Maximum number of sampled instances.
        #[arg(long, default_value_t = 100_000)]
        trials: usize,
    },
    /// Compare the enumeration with exhaustive search (n <= 24).
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Time the enumeration against the random contraction baseline.
    Bench {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        scan: ScanArgs,
        /// Contraction trials.
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_alpha(s: &str) -> Result<Ratio, String> {
    s.parse::<Ratio>().map_err(|e| e.to_string())
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::Internal(_) => EXIT_MISMATCH,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

struct Outcome {
    code: i32,
    text: String,
    json: JsonReport,
}

struct Loaded {
    graph: Graph,
    scale: u64,
}

fn load(common: &Common) -> Result<Loaded, Failure> {
    let text = std::fs::read_to_string(&common.input)
        .map_err(|e| input_failure(format!("{}: {e}", common.input.display())))?;
    let parsed = parse_graph(&text).map_err(|e| input_failure(format!("{}: {e}", common.input.display())))?;
    parsed.graph.require_connected()?;
    Ok(Loaded { graph: parsed.graph, scale: parsed.scale })
}

fn cut_lines(text: &mut String, cuts: &[JsonCut], scale: u64) {
    for c in cuts {
        let side = c.side.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        writeln!(text, "value={} side={side}", format_weight(c.value.into(), scale)).unwrap();
    }
}

fn mincut(common: &Common) -> Result<Outcome, Failure> {
    let Loaded { graph, scale } = load(common)?;
    let m = global_min_cut(&graph)?;
    let mut json = JsonReport::new(scale);
    json.lambda = Some(m.lambda.get());
    json.cuts.push((&m.witness).into());
    json.stat("n", graph.vertex_count()).stat("m", graph.edge_count());
    let text = format!("lambda={}\ncut={}\n", format_weight(m.lambda, scale), id_list(&m.witness.side));
    Ok(Outcome { code: EXIT_OK, text, json })
}

fn enumerate(common: &Common, scan: &ScanArgs) -> Result<Outcome, Failure> {
    let Loaded { graph, scale } = load(common)?;
    let r = with_threads(scan.threads, || enumerate_parallel(&graph, scan.alpha, &scan.options()))?;
    let mut json = JsonReport::new(scale);
    json.lambda = Some(r.lambda.get());
    json.alpha = Some(r.alpha.to_string());
    json.cuts = r.cuts.iter().map(JsonCut::from).collect();
    json.stat("n", graph.vertex_count())
        .stat("m", graph.edge_count())
        .stat("max_terminals", r.alpha.terminal_size_bound())
        .stat("pairs_scanned", r.pairs_scanned)
        .stat("flow_calls", r.flow_calls)
        .stat("within_count_bound", r.within_count_bound(graph.vertex_count()));
    let mut text = format!(
        "lambda={}\nalpha={}\ncuts={}\npairs_scanned={}\n",
        format_weight(r.lambda, scale),
        r.alpha,
        r.cuts.len(),
        r.pairs_scanned
    );
    cut_lines(&mut text, &json.cuts, scale);
    Ok(Outcome { code: EXIT_OK, text, json })
}

fn witness(common: &Common, cut: &[usize]) -> Result<Outcome, Failure> {
    let Loaded { graph, scale } = load(common)?;
    let n = graph.vertex_count();
    let u = VertexSet::from_ids(n, cut.iter().copied())
        .ok_or_else(|| input_failure(format!("--cut lists a vertex outside 0..{n}")))?;
    if !u.is_proper_nonempty() {
        return Err(input_failure("--cut must be a non-empty proper subset of the vertices"));
    }
    let lambda = global_min_cut(&graph)?.lambda;
    let w = find_witness_with_lambda(&graph, &u, lambda)?;
    let bound_ok = check_size_bound(&graph, &u, &w)?;
    let pair = TerminalPair::new(w.source.clone(), w.sink.clone())?;
    let certified = is_unique_min_terminal_cut(&graph, &pair, &u)?;
    let value = graph.cut_value(&u)?;

    let mut json = JsonReport::new(scale);
    json.lambda = Some(lambda.get());
    json.alpha = Some(w.alpha_of_cut.to_string());
    json.cuts.push((&graph.canonicalize(&u)?).into());
    json.witness = Some(JsonWitness { source: w.source.to_vec(), sink: w.sink.to_vec() });
    json.stat("size_bound", w.size_bound)
        .stat("size_bound_holds", bound_ok)
        .stat("certified", certified);
    let text = format!(
        "cut={} value={}\nS={}\nT={}\nalpha_of_cut={}\nsize_bound={}\nsize_bound_holds={bound_ok}\ncertified={certified}\n",
        id_list(&u),
        format_weight(value, scale),
        id_list(&w.source),
        id_list(&w.sink),
        w.alpha_of_cut,
        w.size_bound,
    );
    let code = if bound_ok && certified { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Outcome { code, text, json })
}

fn check_lemma(common: &Common, seed: u64, target: usize, trials: usize) -> Result<Outcome, Failure> {
    let Loaded { graph, scale } = load(common)?;
    if graph.vertex_count() < 4 {
        return Err(input_failure("check-lemma needs at least 4 vertices"));
    }
    let cfg = HarvestConfig { seed, target, max_trials: trials, ..HarvestConfig::default() };
    let s = harvest_on_graph(&graph, &cfg)?;
    let lambda = global_min_cut(&graph)?.lambda;
    let mut json = JsonReport::new(scale);
    json.lambda = Some(lambda.get());
    json.stat("trials", s.trials)
        .stat("harvested", s.harvested())
        .stat("singleton_r", s.singleton_r)
        .stat("violations", s.violations);
    let text = format!(
        "trials={}\nharvested={}\nsingleton_r={}\nviolations={}\n",
        s.trials,
        s.harvested(),
        s.singleton_r,
        s.violations
    );
    let code = if s.violations == 0 { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Outcome { code, text, json })
}

fn verify(common: &Common, scan: &ScanArgs) -> Result<Outcome, Failure> {
    let Loaded { graph, scale } = load(common)?;
    let brute = brute_force_cuts(&graph, scan.alpha)?;
    let r = with_threads(scan.threads, || enumerate_parallel(&graph, scan.alpha, &scan.options()))?;
    let matched = brute == r.cuts;
    let mut json = JsonReport::new(scale);
    json.lambda = Some(r.lambda.get());
    json.alpha = Some(r.alpha.to_string());
    json.cuts = r.cuts.iter().map(JsonCut::from).collect();
    json.stat("match", matched)
        .stat("enumerated", r.cuts.len())
        .stat("brute_force", brute.len());
    let text = format!(
        "{}\nenumerated={}\nbrute_force={}\n",
        if matched { "MATCH" } else { "MISMATCH" },
        r.cuts.len(),
        brute.len()
    );
    Ok(Outcome { code: if matched { EXIT_OK } else { EXIT_MISMATCH }, text, json })
}

fn bench(common: &Common, scan: &ScanArgs, trials: u32, seed: u64) -> Result<Outcome, Failure> {
    let Loaded { graph, scale } = load(common)?;
    let t0 = Instant::now();
    let r = with_threads(scan.threads, || enumerate_parallel(&graph, scan.alpha, &scan.options()))?;
    let enum_ms = t0.elapsed().as_secs_f64() * 1e3;
    let t1 = Instant::now();
    let baseline = contraction_baseline(&graph, scan.alpha, trials, seed)?;
    let contraction_ms = t1.elapsed().as_secs_f64() * 1e3;
    let subset = baseline.iter().all(|c| r.cuts.binary_search(c).is_ok());

    let mut json = JsonReport::new(scale);
    json.lambda = Some(r.lambda.get());
    json.alpha = Some(r.alpha.to_string());
    json.cuts = r.cuts.iter().map(JsonCut::from).collect();
    json.stat("enumerate_ms", enum_ms)
        .stat("enumerated", r.cuts.len())
        .stat("pairs_scanned", r.pairs_scanned)
        .stat("contraction_ms", contraction_ms)
        .stat("contraction_trials", trials)
        .stat("contraction_found", baseline.len())
        .stat("contraction_subset", subset);
    let text = format!(
        "enumerate: {} cuts, {} pairs, {enum_ms:.2} ms\ncontraction: {} of them in {trials} trials, {contraction_ms:.2} ms\nsubset={subset}\n",
        r.cuts.len(),
        r.pairs_scanned,
        baseline.len(),
    );
    Ok(Outcome { code: if subset { EXIT_OK } else { EXIT_MISMATCH }, text, json })
}

/// Executes one command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (common, result) = match &cli.command {
        Command::Mincut { common } => (common, mincut(common)),
        Command::Enumerate { common, scan } => (common, enumerate(common, scan)),
        Command::Witness { common, cut } => (common, witness(common, cut)),
        Command::CheckLemma { common, seed, target, trials } => {
            (common, check_lemma(common, *seed, *target, *trials))
        }
        Command::Verify { common, scan } => (common, verify(common, scan)),
        Command::Bench { common, scan, trials, seed } => (common, bench(common, scan, *trials, *seed)),
    };
    match result {
        Ok(o) => {
            let body = match common.output {
                Format::Text => o.text,
                Format::Json => o.json.to_json() + "\n",
            };
            if out.write_all(body.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "termcut: {}", f.message);
            if f.code == EXIT_BUDGET {
                let _ = writeln!(err, "termcut: pass --force to scan anyway or raise --budget");
            }
            f.code
        }
    }
}
