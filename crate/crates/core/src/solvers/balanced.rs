use rand::Rng;

use crate::coloring::Coloring;
use crate::error::Result;
use crate::graph::Graph;
use crate::interference::potential_interference;
use crate::report::{SolveReport, Strategy};
use crate::seed::RngSeed;
use crate::spectrum::Spectrum;

use super::check_palette;

/// Random greedy descent to a W-balanced k-coloring: no vertex can lower its
/// own interference by switching to another color in `1..=k`.
///
/// Starts from a uniform random coloring and visits vertices round-robin,
/// applying the first improving color. Each move strictly lowers the sum of
/// edge interferences, so the descent terminates; it stops after a full pass
/// over the vertices without a move. `iterations` counts the moves.
pub fn balanced_coloring(g: &Graph, s: &Spectrum, k: usize, seed: RngSeed) -> Result<SolveReport> {
    check_palette(k, 2, s)?;
    let mut rng = seed.rng();
    let mut colors: Vec<usize> = (0..g.vertex_count()).map(|_| rng.gen_range(1..=k)).collect();
    let moves = descend(g, s, k, &mut colors);
    Ok(SolveReport::new(g, s, Coloring::from_raw(colors), Strategy::Balanced, seed)?
        .with_palette(k)
        .with_iterations(moves))
}

pub(crate) fn descend(g: &Graph, s: &Spectrum, k: usize, colors: &mut [usize]) -> u64 {
    let n = g.vertex_count();
    let mut hist = vec![0i128; k];
    let mut moves = 0u64;
    let mut clean = 0usize;
    let mut v = 0usize;
    while clean < n {
        hist.fill(0);
        for &u in g.neighbors(v) {
            hist[colors[u] - 1] += 1;
        }
        let potential = |j: usize| -> i128 {
            let row = s.unit_row(j);
            hist.iter().zip(row).map(|(count, w)| count * w).sum()
        };
        let current = potential(colors[v]);
        match (1..=k).find(|&j| potential(j) < current) {
            Some(j) => {
                colors[v] = j;
                moves += 1;
                clean = 0;
            }
            None => clean += 1,
        }
        v = (v + 1) % n;
    }
    moves
}

/// W-balance audit over colors `1..=k`, in exact arithmetic.
pub fn is_balanced(g: &Graph, s: &Spectrum, k: usize, c: &Coloring) -> Result<bool> {
    for v in 0..g.vertex_count() {
        let Some(cv) = c.get(v) else { return Ok(false) };
        let actual = potential_interference(g, s, c, v, cv)?;
        for j in 1..=k {
            if potential_interference(g, s, c, v, j)? < actual {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
