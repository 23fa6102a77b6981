//! Benchmark configuration: `key = value` lines, `#` comments.
//!
//! ```text
//! n = 60, 70, 80
//! p = 0.1, 0.3, 0.5, 0.7, 0.9
//! k = 4, 6, 11
//! t_fractions = 0.25, 0.5, 0.75
//! graphs_per_category = 10
//! repetitions = 20
//! master_seed = 1
//! strategies = random, dsatur, harmony
//! std_mode = pooled
//! hms = 10
//! hmcr = 0.9
//! par = 0.3
//! evals = 50000
//! ```

use std::str::FromStr;

use spectrum_core::harmony::HarmonyParams;
use spectrum_core::rational::{parse_rational, to_f64};
use spectrum_core::{Rational, RngSeed, Strategy};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

/// How the standard deviation column is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StdMode {
    /// Sample deviation over every graph × repetition run of a category.
    #[default]
    Pooled,
    /// Mean over graphs of each graph's sample deviation across repetitions.
    PerGraphMean,
}

impl FromStr for StdMode {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s {
            "pooled" => Ok(StdMode::Pooled),
            "per_graph" | "per-graph" | "per_graph_mean" => Ok(StdMode::PerGraphMean),
            other => Err(ConfigError::Invalid(format!("unknown std_mode {other:?}"))),
        }
    }
}

/// An exact decimal as written in the config, kept for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    pub text: String,
    pub value: Rational,
}

impl Decimal {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let text = text.trim().to_string();
        let value = parse_rational(&text).map_err(|e| ConfigError::Invalid(e.to_string()))?;
        Ok(Self { text, value })
    }

    pub fn as_f64(&self) -> f64 {
        to_f64(&self.value)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub n_values: Vec<usize>,
    pub p_values: Vec<Decimal>,
    pub k_values: Vec<usize>,
    pub t_fractions: Vec<Decimal>,
    pub graphs_per_category: usize,
    pub repetitions: usize,
    pub master_seed: RngSeed,
    pub strategies: Vec<Strategy>,
    pub std_mode: StdMode,
    pub harmony: HarmonyParams,
}

impl Default for BenchConfig {
    fn default() -> Self {
        let decimals = |xs: &[&str]| xs.iter().map(|x| Decimal::parse(x).expect("literal")).collect();
        Self {
            n_values: vec![60, 70, 80],
            p_values: decimals(&["0.1", "0.3", "0.5", "0.7", "0.9"]),
            k_values: vec![4, 6, 11],
            t_fractions: decimals(&["0.25", "0.5", "0.75"]),
            graphs_per_category: 10,
            repetitions: 20,
            master_seed: RngSeed(1),
            strategies: vec![Strategy::Random, Strategy::Dsatur, Strategy::Harmony],
            std_mode: StdMode::Pooled,
            harmony: HarmonyParams::default(),
        }
    }
}

fn list<T>(value: &str, parse: impl Fn(&str) -> Result<T, String>) -> Result<Vec<T>, String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse)
        .collect()
}

fn number<T: FromStr>(s: &str) -> Result<T, String> {
    s.trim().parse().map_err(|_| format!("invalid number {s:?}"))
}

impl BenchConfig {
    /// Parses a config; keys not present keep their defaults.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = BenchConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |message: String| ConfigError::Line { line: idx + 1, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| at("expected key = value".into()))?;
            let value = value.trim();
            let decimal = |s: &str| Decimal::parse(s).map_err(|e| e.to_string());
            match key.trim() {
                "n" | "n_list" => cfg.n_values = list(value, number).map_err(at)?,
                "p" | "p_list" => cfg.p_values = list(value, decimal).map_err(at)?,
                "k" | "k_list" => cfg.k_values = list(value, number).map_err(at)?,
                "t" | "t_fractions" => cfg.t_fractions = list(value, decimal).map_err(at)?,
                "graphs_per_category" => cfg.graphs_per_category = number(value).map_err(at)?,
                "repetitions" => cfg.repetitions = number(value).map_err(at)?,
                "master_seed" => cfg.master_seed = RngSeed(number(value).map_err(at)?),
                "strategies" => {
                    cfg.strategies = list(value, |s| s.parse::<Strategy>().map_err(|e| e.to_string())).map_err(at)?
                }
                "std_mode" => cfg.std_mode = value.parse().map_err(|e: ConfigError| at(e.to_string()))?,
                "hms" => cfg.harmony.memory_size = number(value).map_err(at)?,
                "hmcr" => cfg.harmony.memory_consider_rate = number(value).map_err(at)?,
                "par" => cfg.harmony.pitch_adjust_rate = number(value).map_err(at)?,
                "evals" => cfg.harmony.max_evaluations = number(value).map_err(at)?,
                other => return Err(at(format!("unknown key {other:?}"))),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let invalid = |m: &str| Err(ConfigError::Invalid(m.to_string()));
        if self.p_values.iter().any(|p| !(0.0..=1.0).contains(&p.as_f64())) {
            return invalid("p values must lie in [0, 1]");
        }
        if self.graphs_per_category == 0 || self.repetitions == 0 {
            return invalid("graphs_per_category and repetitions must be positive");
        }
        if self.strategies.is_empty() {
            return invalid("at least one strategy is required");
        }
        if let Some(s) = self
            .strategies
            .iter()
            .find(|s| !matches!(s, Strategy::Random | Strategy::Dsatur | Strategy::Harmony))
        {
            return Err(ConfigError::Invalid(format!("strategy {s} is not benchmarked")));
        }
        if self.t_fractions.iter().any(|t| t.value < Rational::from_integer(0.into())) {
            return invalid("threshold fractions must be non-negative");
        }
        self.harmony.validate().map_err(|e| ConfigError::Invalid(e.to_string()))
    }
}
