//! Multi-threaded terminal-pair scan.

use rayon::prelude::*;
use termcut_core::enumerate::{EnumOptions, EnumerationResult, Enumerator, ScanState};
use termcut_core::{Graph, Ratio, Result};

/// Same result as [`termcut_core::enumerate::enumerate_with`], with source
/// sets distributed over the current rayon pool. Each worker keeps its own
/// flow scratch and cut set; the merge is order-independent.
pub fn enumerate_parallel(g: &Graph, alpha: Ratio, options: &EnumOptions<'_>) -> Result<EnumerationResult> {
    let e = Enumerator::new(g, alpha)?;
    e.check_budget(options.budget)?;
    let sources: Vec<_> = e.source_sets().collect();
    let filter = options.filter;
    let states = sources
        .par_iter()
        .try_fold(ScanState::new, |mut state, source| {
            e.scan_source(source, filter, &mut state)?;
            Ok(state)
        })
        .collect::<Result<Vec<ScanState>>>()?;
    e.finish(states)
}

/// Runs `f` on a pool with `threads` workers (`0` = rayon's default).
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
