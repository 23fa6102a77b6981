//! Constructive and heuristic colorers.

mod balanced;
mod dsatur;
mod iterative;
mod random;

pub use balanced::{balanced_coloring, is_balanced};
pub use dsatur::{csc_dsatur, tsc_dsatur};
pub use iterative::{iterative_csc, ExhaustiveInner, InnerSolver, RandomInner, RETRY_BUDGET};
pub use random::random_coloring;

use crate::error::{invalid_param, Result};
use crate::spectrum::Spectrum;

/// How DSATUR breaks a tie on both saturation and degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Uniformly among the tied vertices, driven by the run's seed.
    #[default]
    Seeded,
    /// Lowest vertex index, for reproducible hand traces.
    LowestIndex,
}

pub(crate) fn check_palette(k: usize, min: usize, s: &Spectrum) -> Result<()> {
    if k < min || k > s.size() {
        return Err(invalid_param(format!("k = {k} outside {min}..={}", s.size())));
    }
    Ok(())
}
