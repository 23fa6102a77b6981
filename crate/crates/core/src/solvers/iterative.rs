use crate::error::Result;
use crate::graph::Graph;
use crate::oracle::{exact_tsc, DEFAULT_CAP};
use crate::rational::Rational;
use crate::report::{SolveReport, Strategy};
use crate::seed::RngSeed;
use crate::spectrum::Spectrum;

use super::random_coloring;

/// Attempts per palette size granted to stochastic inner solvers.
pub const RETRY_BUDGET: usize = 20;

/// A solver that colors with the palette `1..=k`, used by [`iterative_csc`].
pub trait InnerSolver {
    fn strategy(&self) -> Strategy;

    /// Attempts per palette size before moving on to `k + 1`.
    fn attempts(&self) -> usize {
        RETRY_BUDGET
    }

    /// Produces a complete coloring over `1..=k`. `t` is the threshold the
    /// caller will test against; solvers may use it to stop early.
    fn solve(&self, g: &Graph, s: &Spectrum, k: usize, t: &Rational, seed: RngSeed) -> Result<SolveReport>;
}

/// Uniform random colorings.
#[derive(Debug, Clone, Copy, Default)]
pub struct RandomInner;

impl InnerSolver for RandomInner {
    fn strategy(&self) -> Strategy {
        Strategy::Random
    }

    fn solve(&self, g: &Graph, s: &Spectrum, k: usize, _t: &Rational, seed: RngSeed) -> Result<SolveReport> {
        random_coloring(g, s, k, seed)
    }
}

/// Exact minimum threshold over `1..=k` by enumeration; one attempt suffices.
#[derive(Debug, Clone, Copy)]
pub struct ExhaustiveInner {
    pub cap: u64,
}

impl Default for ExhaustiveInner {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

impl InnerSolver for ExhaustiveInner {
    fn strategy(&self) -> Strategy {
        Strategy::Exhaustive
    }

    fn attempts(&self) -> usize {
        1
    }

    fn solve(&self, g: &Graph, s: &Spectrum, k: usize, _t: &Rational, seed: RngSeed) -> Result<SolveReport> {
        let result = exact_tsc(g, s, k, self.cap)?;
        Ok(SolveReport::new(g, s, result.witness, Strategy::Exhaustive, seed)?
            .with_palette(k)
            .with_iterations(result.enumerated))
    }
}

/// Grows the palette `k = 1, 2, ..` up to `min(n, s)` and returns the first
/// inner solution whose maximum interference is at most `t`.
///
/// `palette_size` of the result is that `k`; `iterations` counts inner runs.
/// When no palette size works the report is infeasible.
pub fn iterative_csc(
    g: &Graph,
    s: &Spectrum,
    t: &Rational,
    inner: &dyn InnerSolver,
    seed: RngSeed,
) -> Result<SolveReport> {
    let n = g.vertex_count();
    let max_k = n.min(s.size());
    let mut runs = 0u64;
    if n == 0 {
        return Ok(SolveReport::new(g, s, crate::Coloring::uncolored(0), inner.strategy(), seed)?.with_palette(0));
    }
    for k in 1..=max_k {
        for attempt in 0..inner.attempts() {
            runs += 1;
            let run_seed = seed.derive(&[k as u64, attempt as u64]);
            let report = inner.solve(g, s, k, t, run_seed)?;
            if report.max_interference <= *t {
                let mut report = report.with_palette(k).with_iterations(runs);
                report.seed = seed.0;
                return Ok(report);
            }
        }
    }
    Ok(SolveReport::infeasible(n, max_k, inner.strategy(), seed).with_iterations(runs))
}
