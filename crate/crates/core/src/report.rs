use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::coloring::Coloring;
use crate::error::{invalid_param, Error, Result};
use crate::graph::Graph;
use crate::interference::all_vertex_units;
use crate::rational::Rational;
use crate::seed::RngSeed;
use crate::spectrum::Spectrum;

/// Which algorithm produced a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strategy {
    Random,
    Dsatur,
    Harmony,
    Balanced,
    Exhaustive,
}

impl Strategy {
    pub fn label(self) -> &'static str {
        match self {
            Strategy::Random => "random",
            Strategy::Dsatur => "dsatur",
            Strategy::Harmony => "harmony",
            Strategy::Balanced => "balanced",
            Strategy::Exhaustive => "exhaustive",
        }
    }

    /// Stable numeric tag, used when deriving per-strategy seeds.
    pub fn tag(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "random" => Ok(Strategy::Random),
            "dsatur" => Ok(Strategy::Dsatur),
            "harmony" => Ok(Strategy::Harmony),
            "balanced" => Ok(Strategy::Balanced),
            "exhaustive" | "oracle" => Ok(Strategy::Exhaustive),
            other => Err(invalid_param(format!("unknown strategy {other:?}"))),
        }
    }
}

/// Outcome of one solver run.
///
/// `max_interference` and `sum_interference` (the sum of `I_v` over all
/// vertices) always agree with `coloring`; an infeasible run carries an
/// uncolored coloring and zero interference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub coloring: Coloring,
    pub max_interference: Rational,
    pub sum_interference: Rational,
    pub distinct_colors: usize,
    /// Number of spectrum colors the solver was allowed to use.
    pub palette_size: usize,
    pub strategy: Strategy,
    pub seed: u64,
    pub feasible: bool,
    /// Solver-specific work counter: recolor moves, objective evaluations,
    /// enumerated colorings, inner attempts.
    pub iterations: u64,
}

impl SolveReport {
    /// Evaluates `coloring` and wraps it. A complete coloring is marked feasible.
    pub fn new(g: &Graph, s: &Spectrum, coloring: Coloring, strategy: Strategy, seed: RngSeed) -> Result<Self> {
        if coloring.len() != g.vertex_count() || coloring.max_color() > s.size() {
            return Err(invalid_param("coloring does not fit the graph and spectrum"));
        }
        let units = all_vertex_units(g, s, coloring.raw());
        Ok(Self {
            max_interference: s.units_to_rational(units.iter().copied().max().unwrap_or(0)),
            sum_interference: s.units_to_rational(units.iter().sum()),
            distinct_colors: coloring.distinct_colors(),
            feasible: coloring.is_complete(),
            palette_size: s.size(),
            coloring,
            strategy,
            seed: seed.0,
            iterations: 0,
        })
    }

    /// Report for a run that found no valid coloring.
    pub fn infeasible(n: usize, palette_size: usize, strategy: Strategy, seed: RngSeed) -> Self {
        Self {
            coloring: Coloring::uncolored(n),
            max_interference: Rational::zero(),
            sum_interference: Rational::zero(),
            distinct_colors: 0,
            palette_size,
            strategy,
            seed: seed.0,
            feasible: false,
            iterations: 0,
        }
    }

    pub fn with_palette(mut self, k: usize) -> Self {
        self.palette_size = k;
        self
    }

    pub fn with_iterations(mut self, iterations: u64) -> Self {
        self.iterations = iterations;
        self
    }

    /// Recomputes every derived field from the coloring.
    pub fn is_consistent(&self, g: &Graph, s: &Spectrum) -> bool {
        if self.coloring.len() != g.vertex_count() || self.coloring.max_color() > s.size() {
            return false;
        }
        let units = all_vertex_units(g, s, self.coloring.raw());
        self.max_interference == s.units_to_rational(units.iter().copied().max().unwrap_or(0))
            && self.sum_interference == s.units_to_rational(units.iter().sum())
            && self.distinct_colors == self.coloring.distinct_colors()
            && (!self.feasible || self.coloring.is_complete())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategy_labels_roundtrip() {
        for s in [Strategy::Random, Strategy::Dsatur, Strategy::Harmony, Strategy::Balanced, Strategy::Exhaustive] {
            assert_eq!(s.label().parse::<Strategy>().unwrap(), s);
        }
        assert!("tabu".parse::<Strategy>().is_err());
    }

    #[test]
    fn infeasible_report_is_consistent() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let s = Spectrum::identity(3).unwrap();
        let r = SolveReport::infeasible(3, 3, Strategy::Dsatur, RngSeed(0));
        assert!(r.is_consistent(&g, &s));
        assert_eq!(r.distinct_colors, 0);
    }
}
