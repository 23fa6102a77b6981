//! DSATUR-style sequential colorers. The saturation of an uncolored vertex is
//! its number of already-colored neighbors; ties go to the higher degree, then
//! to a seeded uniform pick (or the lowest index).

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::coloring::Coloring;
use crate::error::{invalid_param, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::report::{SolveReport, Strategy};
use crate::seed::RngSeed;
use crate::spectrum::Spectrum;

use super::{check_palette, TieBreak};

struct Saturation<'g> {
    graph: &'g Graph,
    colored_neighbors: Vec<usize>,
    colored: Vec<bool>,
    ties: TieBreak,
    rng: ChaCha8Rng,
    candidates: Vec<usize>,
}

impl<'g> Saturation<'g> {
    fn new(graph: &'g Graph, ties: TieBreak, seed: RngSeed) -> Self {
        let n = graph.vertex_count();
        Self {
            graph,
            colored_neighbors: vec![0; n],
            colored: vec![false; n],
            ties,
            rng: seed.rng(),
            candidates: Vec::with_capacity(n),
        }
    }

    /// Uncolored vertex with the most colored neighbors, then the highest degree.
    fn select(&mut self) -> usize {
        let mut best = (0usize, 0usize);
        self.candidates.clear();
        for v in (0..self.graph.vertex_count()).filter(|&v| !self.colored[v]) {
            let key = (self.colored_neighbors[v], self.graph.degree(v));
            if self.candidates.is_empty() || key > best {
                best = key;
                self.candidates.clear();
                self.candidates.push(v);
            } else if key == best {
                self.candidates.push(v);
            }
        }
        match self.ties {
            TieBreak::LowestIndex => self.candidates[0],
            TieBreak::Seeded if self.candidates.len() == 1 => self.candidates[0],
            TieBreak::Seeded => self.candidates[self.rng.gen_range(0..self.candidates.len())],
        }
    }

    fn mark_colored(&mut self, v: usize) {
        self.colored[v] = true;
        for &u in self.graph.neighbors(v) {
            self.colored_neighbors[u] += 1;
        }
    }
}

/// Threshold heuristic: each selected vertex takes the color in `1..=k` that
/// minimizes its interference from already-colored neighbors (lowest index on
/// ties).
pub fn tsc_dsatur(g: &Graph, s: &Spectrum, k: usize, seed: RngSeed, ties: TieBreak) -> Result<SolveReport> {
    check_palette(k, 2, s)?;
    let n = g.vertex_count();
    let mut sat = Saturation::new(g, ties, seed);
    let mut colors = vec![0usize; n];
    // potential[v * k + i - 1]: interference v would get with color i
    let mut potential = vec![0i128; n * k];
    for _ in 0..n {
        let v = sat.select();
        let pot = &potential[v * k..(v + 1) * k];
        let mut color = 1;
        for i in 2..=k {
            if pot[i - 1] < pot[color - 1] {
                color = i;
            }
        }
        colors[v] = color;
        sat.mark_colored(v);
        let row = &s.unit_row(color)[..k];
        for &u in g.neighbors(v) {
            if colors[u] == 0 {
                for (p, w) in potential[u * k..(u + 1) * k].iter_mut().zip(row) {
                    *p += w;
                }
            }
        }
    }
    Ok(SolveReport::new(g, s, Coloring::from_raw(colors), Strategy::Dsatur, seed)?.with_palette(k))
}

/// Per-degree admissible interference: a vertex with `d` neighbors of which
/// `c` are colored may carry `I` units iff `I·d <= floor(c·t·scale)`.
struct ProportionalLimit {
    limits: Vec<BigInt>,
    fast: Vec<Option<i128>>,
}

impl ProportionalLimit {
    fn new(s: &Spectrum, t: &Rational, max_degree: usize) -> Self {
        let scaled_t = t * Rational::from_integer(s.scale().clone());
        let limits: Vec<BigInt> = (0..=max_degree)
            .map(|c| (&scaled_t * Rational::from_integer(BigInt::from(c))).floor().to_integer())
            .collect();
        let fast = limits.iter().map(ToPrimitive::to_i128).collect();
        Self { limits, fast }
    }

    #[inline]
    fn admits(&self, units: i128, degree: usize, colored: usize) -> bool {
        if degree == 0 {
            return true;
        }
        if let (Some(lhs), Some(lim)) = (units.checked_mul(degree as i128), self.fast[colored]) {
            return lhs <= lim;
        }
        BigInt::from(units) * BigInt::from(degree) <= self.limits[colored]
    }
}

/// Chromatic heuristic. Each selected vertex takes the first spectrum color
/// whose interference stays within `t` scaled by the vertex's fraction of
/// colored neighbors; every already-colored neighbor must satisfy the same
/// proportional test after the assignment. If no color passes, the run fails
/// and the whole coloring is cleared.
///
/// On success every final vertex interference is at most `t`.
pub fn csc_dsatur(g: &Graph, s: &Spectrum, t: &Rational, seed: RngSeed, ties: TieBreak) -> Result<SolveReport> {
    if t.is_negative() {
        return Err(invalid_param(format!("threshold {t} is negative")));
    }
    let n = g.vertex_count();
    let size = s.size();
    let limit = ProportionalLimit::new(s, t, g.max_degree());
    let mut sat = Saturation::new(g, ties, seed);
    let mut colors = vec![0usize; n];
    let mut actual = vec![0i128; n];
    let mut potential = vec![0i128; n * size];
    for _ in 0..n {
        let v = sat.select();
        let degree_v = g.degree(v);
        let colored_v = sat.colored_neighbors[v];
        let pot = &potential[v * size..(v + 1) * size];
        let chosen = (1..=size).find(|&i| {
            limit.admits(pot[i - 1], degree_v, colored_v)
                && g.neighbors(v).iter().filter(|&&u| colors[u] != 0).all(|&u| {
                    let after = actual[u] + s.unit(colors[u], i);
                    limit.admits(after, g.degree(u), sat.colored_neighbors[u] + 1)
                })
        });
        let Some(color) = chosen else {
            return Ok(SolveReport::infeasible(n, size, Strategy::Dsatur, seed));
        };
        colors[v] = color;
        actual[v] = pot[color - 1];
        sat.mark_colored(v);
        let row = s.unit_row(color);
        for &u in g.neighbors(v) {
            if colors[u] != 0 {
                actual[u] += row[colors[u] - 1];
            } else {
                for (p, w) in potential[u * size..(u + 1) * size].iter_mut().zip(row) {
                    *p += w;
                }
            }
        }
    }
    SolveReport::new(g, s, Coloring::from_raw(colors), Strategy::Dsatur, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen_er_graph, named_graph};
    use crate::interference::vertex_interferences;
    use crate::rational::{frac, int};
    use num_traits::Zero;

    #[test]
    fn paw_threshold_trace() {
        let g = named_graph("paw").unwrap();
        let s = Spectrum::exp_decay2(3).unwrap();
        let r = tsc_dsatur(&g, &s, 3, RngSeed(0), TieBreak::LowestIndex).unwrap();
        // pendant 0, center 1, peers 2 and 3
        assert_eq!(r.coloring.raw(), &[3, 1, 3, 2]);
        assert_eq!(r.max_interference, int(1));
        assert!(r.is_consistent(&g, &s));
    }

    #[test]
    fn edgeless_takes_first_color() {
        let g = Graph::empty(6);
        let s = Spectrum::exp_decay2(4).unwrap();
        let r = tsc_dsatur(&g, &s, 4, RngSeed(5), TieBreak::Seeded).unwrap();
        assert!(r.coloring.iter().all(|c| c == Some(1)));
        assert!(r.max_interference.is_zero());
    }

    #[test]
    fn threshold_parameter_validation() {
        let g = named_graph("paw").unwrap();
        let s = Spectrum::exp_decay2(3).unwrap();
        assert!(tsc_dsatur(&g, &s, 1, RngSeed(0), TieBreak::Seeded).is_err());
        assert!(tsc_dsatur(&g, &s, 4, RngSeed(0), TieBreak::Seeded).is_err());
    }

    #[test]
    fn paw_chromatic_trace() {
        let g = named_graph("paw").unwrap();
        let s = Spectrum::exp_decay2(4).unwrap();
        let r = csc_dsatur(&g, &s, &int(1), RngSeed(0), TieBreak::LowestIndex).unwrap();
        assert!(r.feasible);
        assert_eq!(r.coloring.raw(), &[2, 1, 3, 4]);
        assert_eq!(r.distinct_colors, 4);
        let finals = vertex_interferences(&g, &s, &r.coloring).unwrap();
        assert_eq!(finals, vec![frac(1, 2), frac(7, 8), frac(3, 4), frac(5, 8)]);
    }

    #[test]
    fn triangle_zero_threshold_is_proper() {
        let g = named_graph("complete(3)").unwrap();
        let s = Spectrum::identity(3).unwrap();
        let r = csc_dsatur(&g, &s, &int(0), RngSeed(1), TieBreak::Seeded).unwrap();
        assert!(r.feasible);
        assert_eq!(r.distinct_colors, 3);
        assert!(r.max_interference.is_zero());
    }

    #[test]
    fn single_vertex_takes_color_one() {
        let g = Graph::empty(1);
        let s = Spectrum::exp_decay2(1).unwrap();
        let r = csc_dsatur(&g, &s, &int(0), RngSeed(1), TieBreak::Seeded).unwrap();
        assert_eq!((r.feasible, r.distinct_colors, r.coloring.get(0)), (true, 1, Some(1)));
    }

    #[test]
    fn exhausted_spectrum_clears_everything() {
        let g = named_graph("complete(3)").unwrap();
        let s = Spectrum::identity(2).unwrap();
        let r = csc_dsatur(&g, &s, &int(0), RngSeed(1), TieBreak::Seeded).unwrap();
        assert!(!r.feasible);
        assert_eq!(r.coloring.colored_count(), 0);
        assert!(r.is_consistent(&g, &s));
        assert!(csc_dsatur(&g, &s, &int(-1), RngSeed(1), TieBreak::Seeded).is_err());
    }

    #[test]
    fn success_respects_threshold_on_random_graphs() {
        for seed in 0..40 {
            let g = gen_er_graph(25, 0.3, RngSeed(seed)).unwrap();
            let s = Spectrum::exp_decay2(25).unwrap();
            let t = frac(3 * (seed as i64 % 5 + 1), 2);
            let r = csc_dsatur(&g, &s, &t, RngSeed(seed), TieBreak::Seeded).unwrap();
            if r.feasible {
                assert!(r.max_interference <= t);
                assert!(r.is_consistent(&g, &s));
            }
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        let g = gen_er_graph(30, 0.4, RngSeed(2)).unwrap();
        let s = Spectrum::exp_decay2(6).unwrap();
        let a = tsc_dsatur(&g, &s, 6, RngSeed(11), TieBreak::Seeded).unwrap();
        let b = tsc_dsatur(&g, &s, 6, RngSeed(11), TieBreak::Seeded).unwrap();
        assert_eq!(a, b);
    }
}
