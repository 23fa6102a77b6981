//! Experiment harness for spectrum coloring: random graph categories,
//! aggregated statistics and report rendering.

pub mod config;
pub mod experiment;
pub mod report;

pub use config::{BenchConfig, ConfigError, Decimal, StdMode};
pub use experiment::{
    categories, run_bench, run_csc_experiment, run_tsc_experiment, ExperimentRow, GraphCategory, Parameter, Problem,
    RunOptions, StrategyStats,
};
pub use report::{emit_report, emit_series, round1, write_report, ReportFormat, CSV_HEADER};
