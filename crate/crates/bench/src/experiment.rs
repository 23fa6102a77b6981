//! Experiment orchestration over Erdős–Rényi graph categories.
//!
//! Seeds: each graph's seed is derived from `(master_seed, n, p, graph index)`
//! and each run's seed from `(graph seed, strategy, repetition)`, so every
//! strategy sees the same graphs and a report is a pure function of the
//! configuration.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use spectrum_core::bounds::{csc_bound, tsc_bound};
use spectrum_core::generate::gen_er_graph;
use spectrum_core::harmony::{harmony_csc, harmony_tsc, HarmonyParams};
use spectrum_core::rational::to_f64;
use spectrum_core::solvers::{csc_dsatur, iterative_csc, random_coloring, tsc_dsatur, RandomInner, TieBreak};
use spectrum_core::{Graph, Rational, RngSeed, SolveReport, Spectrum, Strategy};

use crate::config::{BenchConfig, Decimal, StdMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    Tsc,
    Csc,
}

impl std::str::FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "tsc" => Ok(Problem::Tsc),
            "csc" => Ok(Problem::Csc),
            other => Err(format!("unknown problem {other:?}")),
        }
    }
}

/// A family of random graphs sharing `n` and `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphCategory {
    pub n: usize,
    pub p: Decimal,
    pub graphs: usize,
    pub repetitions: usize,
    pub master_seed: RngSeed,
}

impl GraphCategory {
    pub fn graph_seed(&self, index: usize) -> RngSeed {
        self.master_seed.derive(&[self.n as u64, self.p.as_f64().to_bits(), index as u64])
    }

    pub fn graph(&self, index: usize) -> spectrum_core::Result<Graph> {
        gen_er_graph(self.n, self.p.as_f64(), self.graph_seed(index))
    }

    /// Expected average degree `n·p`, exact.
    pub fn expected_degree(&self) -> Rational {
        Rational::from_integer(BigInt::from(self.n)) * &self.p.value
    }
}

/// The swept parameter of a row.
#[derive(Debug, Clone, PartialEq)]
pub enum Parameter {
    Colors(usize),
    /// Threshold as a fraction of the expected average degree.
    ThresholdFraction(Decimal),
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::Colors(k) => write!(f, "{k}"),
            Parameter::ThresholdFraction(d) => f.write_str(&d.text),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StrategyStats {
    pub strategy: Strategy,
    /// Exact mean over the successful runs; `None` when every run failed.
    pub avg: Option<Rational>,
    pub std: Option<f64>,
    pub runs: usize,
    /// Runs that found no valid coloring (chromatic problem only).
    pub failures: usize,
}

impl StrategyStats {
    pub fn avg_f64(&self) -> Option<f64> {
        self.avg.as_ref().map(to_f64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    pub category: GraphCategory,
    pub parameter: Parameter,
    pub stats: Vec<StrategyStats>,
    /// Mean over the category's graphs of the per-graph upper bound.
    pub bound: Rational,
    /// `100·(bound − best avg) / bound`, exact; rounded only for display.
    pub gap_pct: Option<Rational>,
    /// Set when the random baseline averages above the bound.
    pub random_exceeds_bound: bool,
}

impl ExperimentRow {
    /// Strategy with the lowest average.
    pub fn best(&self) -> Option<&StrategyStats> {
        self.stats
            .iter()
            .filter(|s| s.avg.is_some())
            .min_by(|a, b| a.avg.cmp(&b.avg))
    }

    pub fn stats_for(&self, strategy: Strategy) -> Option<&StrategyStats> {
        self.stats.iter().find(|s| s.strategy == strategy)
    }
}

/// Options shared by every run of an experiment.
#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub harmony: HarmonyParams,
    pub std_mode: StdMode,
}

impl From<&BenchConfig> for RunOptions {
    fn from(cfg: &BenchConfig) -> Self {
        Self { harmony: cfg.harmony, std_mode: cfg.std_mode }
    }
}

fn run_seed(graph_seed: RngSeed, strategy: Strategy, repetition: usize) -> RngSeed {
    graph_seed.derive(&[strategy.tag(), repetition as u64])
}

/// Per graph: its bound, then for each strategy the value of every repetition
/// (`None` for a failed run).
type GraphOutcome = (Rational, Vec<Vec<Option<Rational>>>);

fn run_category<F, B>(
    category: &GraphCategory,
    strategies: &[Strategy],
    options: &RunOptions,
    parameter: Parameter,
    bound_of: B,
    run: F,
) -> spectrum_core::Result<ExperimentRow>
where
    B: Fn(&Graph) -> spectrum_core::Result<Rational> + Sync,
    F: Fn(&Graph, Strategy, RngSeed) -> spectrum_core::Result<Option<Rational>> + Sync,
{
    let outcomes: Vec<GraphOutcome> = (0..category.graphs)
        .into_par_iter()
        .map(|index| {
            let graph = category.graph(index)?;
            let seed = category.graph_seed(index);
            let bound = bound_of(&graph)?;
            let per_strategy = strategies
                .iter()
                .map(|&strategy| {
                    (0..category.repetitions)
                        .map(|rep| run(&graph, strategy, run_seed(seed, strategy, rep)))
                        .collect::<spectrum_core::Result<Vec<_>>>()
                })
                .collect::<spectrum_core::Result<Vec<_>>>()?;
            Ok((bound, per_strategy))
        })
        .collect::<spectrum_core::Result<Vec<_>>>()?;

    let bound = mean(outcomes.iter().map(|(b, _)| b.clone()).collect::<Vec<_>>().as_slice())
        .unwrap_or_else(Rational::zero);
    let stats: Vec<StrategyStats> = strategies
        .iter()
        .enumerate()
        .map(|(si, &strategy)| {
            let by_graph: Vec<Vec<Rational>> = outcomes
                .iter()
                .map(|(_, runs)| runs[si].iter().flatten().cloned().collect())
                .collect();
            let failures = outcomes.iter().map(|(_, runs)| runs[si].iter().filter(|v| v.is_none()).count()).sum();
            summarize(strategy, &by_graph, failures, options.std_mode)
        })
        .collect();

    let mut row = ExperimentRow {
        category: category.clone(),
        parameter,
        stats,
        bound,
        gap_pct: None,
        random_exceeds_bound: false,
    };
    row.gap_pct = row.best().and_then(|best| {
        let avg = best.avg.as_ref()?;
        (!row.bound.is_zero()).then(|| (&row.bound - avg) * Rational::from_integer(100.into()) / &row.bound)
    });
    row.random_exceeds_bound = row
        .stats_for(Strategy::Random)
        .and_then(|s| s.avg.as_ref())
        .is_some_and(|avg| *avg > row.bound);
    Ok(row)
}

fn mean(values: &[Rational]) -> Option<Rational> {
    if values.is_empty() {
        return None;
    }
    let total: Rational = values.iter().fold(Rational::zero(), |acc, v| acc + v);
    Some(total / Rational::from_integer(BigInt::from(values.len())))
}

/// Sample standard deviation (divisor N − 1), exact up to the final root.
fn sample_std(values: &[Rational]) -> Option<f64> {
    let avg = mean(values)?;
    if values.len() < 2 {
        return Some(0.0);
    }
    let squares: Rational = values.iter().fold(Rational::zero(), |acc, v| {
        let d = v - &avg;
        acc + &d * &d
    });
    let variance = squares / Rational::from_integer(BigInt::from(values.len() - 1));
    Some(variance.to_f64().unwrap_or(f64::NAN).sqrt())
}

fn summarize(strategy: Strategy, by_graph: &[Vec<Rational>], failures: usize, mode: StdMode) -> StrategyStats {
    let pooled: Vec<Rational> = by_graph.iter().flatten().cloned().collect();
    let std = match mode {
        StdMode::Pooled => sample_std(&pooled),
        StdMode::PerGraphMean => {
            let per_graph: Vec<f64> = by_graph.iter().filter_map(|vals| sample_std(vals)).collect();
            (!per_graph.is_empty()).then(|| per_graph.iter().sum::<f64>() / per_graph.len() as f64)
        }
    };
    StrategyStats { strategy, avg: mean(&pooled), std, runs: pooled.len(), failures }
}

/// Threshold problem with `k` colors of the base-2 exponential decay spectrum.
pub fn run_tsc_experiment(
    category: &GraphCategory,
    k: usize,
    strategies: &[Strategy],
    options: &RunOptions,
) -> spectrum_core::Result<ExperimentRow> {
    let spectrum = Spectrum::exp_decay2(k)?;
    run_category(
        category,
        strategies,
        options,
        Parameter::Colors(k),
        |g| tsc_bound(g, &spectrum, k),
        |g, strategy, seed| {
            let report = match strategy {
                Strategy::Random => random_coloring(g, &spectrum, k, seed)?,
                Strategy::Dsatur => tsc_dsatur(g, &spectrum, k, seed, TieBreak::Seeded)?,
                Strategy::Harmony => harmony_tsc(g, &spectrum, k, &options.harmony.with_seed(seed))?,
                other => return Err(unsupported(other)),
            };
            Ok(Some(report.max_interference))
        },
    )
}

/// Chromatic problem with threshold `t = fraction · n · p` and a base-2
/// exponential decay spectrum of `n` colors.
pub fn run_csc_experiment(
    category: &GraphCategory,
    t_fraction: &Decimal,
    strategies: &[Strategy],
    options: &RunOptions,
) -> spectrum_core::Result<ExperimentRow> {
    let spectrum = Spectrum::exp_decay2(category.n.max(1))?;
    let t = &t_fraction.value * category.expected_degree();
    run_category(
        category,
        strategies,
        options,
        Parameter::ThresholdFraction(t_fraction.clone()),
        |g| Ok(Rational::from_integer(csc_bound(g, &spectrum, &t)?)),
        |g, strategy, seed| {
            let report: SolveReport = match strategy {
                Strategy::Random => iterative_csc(g, &spectrum, &t, &RandomInner, seed)?,
                Strategy::Dsatur => csc_dsatur(g, &spectrum, &t, seed, TieBreak::Seeded)?,
                Strategy::Harmony => harmony_csc(g, &spectrum, &t, &options.harmony.with_seed(seed))?,
                other => return Err(unsupported(other)),
            };
            Ok(report
                .feasible
                .then(|| Rational::from_integer(BigInt::from(report.distinct_colors))))
        },
    )
}

fn unsupported(strategy: Strategy) -> spectrum_core::Error {
    spectrum_core::Error::InvalidParameter(format!("strategy {strategy} is not benchmarked"))
}

/// Categories in report order: parameter, then `n`, then `p`.
pub fn categories(cfg: &BenchConfig) -> Vec<GraphCategory> {
    cfg.n_values
        .iter()
        .flat_map(|&n| {
            cfg.p_values.iter().map(move |p| GraphCategory {
                n,
                p: p.clone(),
                graphs: cfg.graphs_per_category,
                repetitions: cfg.repetitions,
                master_seed: cfg.master_seed,
            })
        })
        .collect()
}

/// Runs every category for every parameter value of `problem`.
pub fn run_bench(
    cfg: &BenchConfig,
    problem: Problem,
    mut progress: impl FnMut(&ExperimentRow),
) -> spectrum_core::Result<Vec<ExperimentRow>> {
    let options = RunOptions::from(cfg);
    let cats = categories(cfg);
    let mut rows = Vec::new();
    match problem {
        Problem::Tsc => {
            for &k in &cfg.k_values {
                for cat in &cats {
                    let row = run_tsc_experiment(cat, k, &cfg.strategies, &options)?;
                    progress(&row);
                    rows.push(row);
                }
            }
        }
        Problem::Csc => {
            for frac in &cfg.t_fractions {
                for cat in &cats {
                    let row = run_csc_experiment(cat, frac, &cfg.strategies, &options)?;
                    progress(&row);
                    rows.push(row);
                }
            }
        }
    }
    Ok(rows)
}
