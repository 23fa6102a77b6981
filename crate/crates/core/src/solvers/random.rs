use rand::Rng;

use crate::coloring::Coloring;
use crate::error::Result;
use crate::graph::Graph;
use crate::report::{SolveReport, Strategy};
use crate::seed::RngSeed;
use crate::spectrum::Spectrum;

use super::check_palette;

/// Colors every vertex independently and uniformly from `1..=k`.
pub fn random_coloring(g: &Graph, s: &Spectrum, k: usize, seed: RngSeed) -> Result<SolveReport> {
    check_palette(k, 1, s)?;
    let mut rng = seed.rng();
    let colors = (0..g.vertex_count()).map(|_| rng.gen_range(1..=k)).collect();
    Ok(SolveReport::new(g, s, Coloring::from_raw(colors), Strategy::Random, seed)?.with_palette(k))
}
