//! Harmony search over discrete color assignments.
//!
//! The objective is the sum of vertex interferences (ties broken by the
//! maximum vertex interference). Each improvised harmony picks, per vertex,
//! a value from a random memory member with probability `memory_consider_rate`
//! (then nudged one color up or down with probability `pitch_adjust_rate`), or
//! a uniformly random color otherwise. It replaces the worst memory member
//! when it is strictly better.

use rand::{Rng, RngCore};
use rand_chacha::ChaCha8Rng;

use crate::coloring::Coloring;
use crate::error::{invalid_param, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::report::{SolveReport, Strategy};
use crate::seed::RngSeed;
use crate::solvers::{check_palette, iterative_csc, InnerSolver};
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonyParams {
    pub memory_size: usize,
    pub memory_consider_rate: f64,
    pub pitch_adjust_rate: f64,
    pub max_evaluations: u64,
    pub seed: RngSeed,
}

impl Default for HarmonyParams {
    fn default() -> Self {
        Self {
            memory_size: 10,
            memory_consider_rate: 0.9,
            pitch_adjust_rate: 0.3,
            max_evaluations: 50_000,
            seed: RngSeed(0),
        }
    }
}

impl HarmonyParams {
    pub fn with_seed(self, seed: RngSeed) -> Self {
        Self { seed, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let rate_ok = |r: f64| (0.0..=1.0).contains(&r);
        if !rate_ok(self.memory_consider_rate) || !rate_ok(self.pitch_adjust_rate) {
            return Err(invalid_param("harmony rates must lie in [0, 1]"));
        }
        if self.memory_size < 2 {
            return Err(invalid_param("harmony memory needs at least 2 members"));
        }
        if self.max_evaluations < self.memory_size as u64 {
            return Err(invalid_param("evaluation budget must cover the initial memory"));
        }
        Ok(())
    }
}

/// (sum of vertex interferences, max vertex interference), in units.
type Score = (i128, i128);

/// Scores colorings over a fixed graph and palette. Dense graphs are scored
/// per vertex by counting neighbors in each color class with bitsets; sparse
/// graphs are scored by walking the edge list.
struct Evaluator<'a> {
    edges: &'a [(usize, usize)],
    table: Vec<i128>,
    k: usize,
    words: usize,
    adjacency_bits: Option<Vec<u64>>,
    class_bits: Vec<u64>,
    acc: Vec<i128>,
    evaluations: u64,
}

impl<'a> Evaluator<'a> {
    fn new(g: &'a Graph, s: &Spectrum, k: usize) -> Self {
        let n = g.vertex_count();
        let table = (1..=k).flat_map(|i| (1..=k).map(move |j| (i, j))).map(|(i, j)| s.unit(i, j)).collect();
        let words = n.div_ceil(64);
        let adjacency_bits = (n * k * words < 2 * g.edge_count()).then(|| {
            let mut bits = vec![0u64; n * words];
            for &(u, v) in g.edges() {
                bits[u * words + v / 64] |= 1 << (v % 64);
                bits[v * words + u / 64] |= 1 << (u % 64);
            }
            bits
        });
        Self {
            edges: g.edges(),
            table,
            k,
            words,
            adjacency_bits,
            class_bits: vec![0; k * words],
            acc: vec![0; n],
            evaluations: 0,
        }
    }

    fn score(&mut self, colors: &[usize]) -> Score {
        self.evaluations += 1;
        match self.adjacency_bits.take() {
            Some(adjacency) => {
                let score = self.score_dense(&adjacency, colors);
                self.adjacency_bits = Some(adjacency);
                score
            }
            None => self.score_sparse(colors),
        }
    }

    fn score_sparse(&mut self, colors: &[usize]) -> Score {
        self.acc.fill(0);
        let mut edge_sum = 0i128;
        for &(u, v) in self.edges {
            let w = self.table[(colors[u] - 1) * self.k + colors[v] - 1];
            edge_sum += w;
            self.acc[u] += w;
            self.acc[v] += w;
        }
        (2 * edge_sum, self.acc.iter().copied().max().unwrap_or(0))
    }

    fn score_dense(&mut self, adjacency: &[u64], colors: &[usize]) -> Score {
        let (k, words) = (self.k, self.words);
        self.class_bits.fill(0);
        for (v, &c) in colors.iter().enumerate() {
            self.class_bits[(c - 1) * words + v / 64] |= 1 << (v % 64);
        }
        let (mut sum, mut max) = (0i128, 0i128);
        for (v, &c) in colors.iter().enumerate() {
            let row = &adjacency[v * words..(v + 1) * words];
            let weights = &self.table[(c - 1) * k..c * k];
            let mut iv = 0i128;
            for (class, w) in self.class_bits.chunks_exact(words).zip(weights) {
                let count: u32 = row.iter().zip(class).map(|(a, b)| (a & b).count_ones()).sum();
                iv += i128::from(count) * w;
            }
            sum += iv;
            max = max.max(iv);
        }
        (sum, max)
    }
}

/// Acceptance probabilities as 32-bit fixed-point thresholds.
struct Rates {
    consider: u64,
    adjust: u64,
}

impl Rates {
    fn new(params: &HarmonyParams) -> Self {
        let fixed = |p: f64| (p * (1u64 << 32) as f64) as u64;
        Self { consider: fixed(params.memory_consider_rate), adjust: fixed(params.pitch_adjust_rate) }
    }
}

/// Picks one vertex's color from 64 random bits: the low 32 decide memory
/// consideration, the next 16 pick the value, and the top 16 decide the pitch
/// adjustment and its direction.
#[inline]
fn improvise(bits: u64, memory: &[Vec<usize>], v: usize, k: usize, rates: &Rates) -> usize {
    let pick = |range: usize, r: u64| ((r * range as u64) >> 16) as usize;
    let mid = (bits >> 32) & 0xFFFF;
    if bits & 0xFFFF_FFFF >= rates.consider {
        return 1 + pick(k, mid);
    }
    let value = memory[pick(memory.len(), mid)][v];
    let top = bits >> 48;
    // 15 bits of precision for the adjustment draw, one bit for direction
    if ((top >> 1) << 17) >= rates.adjust {
        value
    } else if top & 1 == 1 {
        (value + 1).min(k)
    } else {
        value.saturating_sub(1).max(1)
    }
}

/// Best harmony found and the number of objective evaluations spent. Stops
/// early once a harmony's maximum interference is at most `stop_at_max`, or
/// once the objective reaches zero.
fn search(g: &Graph, s: &Spectrum, k: usize, params: &HarmonyParams, stop_at_max: Option<i128>) -> (Vec<usize>, u64) {
    let n = g.vertex_count();
    let mut rng: ChaCha8Rng = params.seed.rng();
    let mut eval = Evaluator::new(g, s, k);
    let done = |score: Score| score.0 == 0 || stop_at_max.is_some_and(|m| score.1 <= m);
    if k == 1 {
        // a single color leaves exactly one candidate
        let only = vec![1; n];
        eval.score(&only);
        return (only, eval.evaluations);
    }

    let mut memory: Vec<Vec<usize>> = Vec::with_capacity(params.memory_size);
    let mut scores: Vec<Score> = Vec::with_capacity(params.memory_size);
    for _ in 0..params.memory_size {
        let harmony: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=k)).collect();
        let score = eval.score(&harmony);
        memory.push(harmony);
        scores.push(score);
        if done(score) {
            let last = memory.pop().unwrap_or_default();
            return (last, eval.evaluations);
        }
    }

    let rates = Rates::new(params);
    let mut candidate = vec![0usize; n];
    while eval.evaluations < params.max_evaluations {
        for (v, slot) in candidate.iter_mut().enumerate() {
            *slot = improvise(rng.next_u64(), &memory, v, k, &rates);
        }
        let score = eval.score(&candidate);
        if done(score) {
            return (candidate, eval.evaluations);
        }
        let worst = (0..scores.len()).max_by_key(|&i| scores[i]).unwrap_or(0);
        if score < scores[worst] {
            memory[worst].copy_from_slice(&candidate);
            scores[worst] = score;
        }
    }
    let best = (0..scores.len()).min_by_key(|&i| scores[i]).unwrap_or(0);
    (memory.swap_remove(best), eval.evaluations)
}

/// Harmony search for a k-coloring with small total interference.
///
/// Accepts any `1 <= k <= s` so that it can serve as the inner solver of the
/// iterative chromatic driver, which starts from a single color.
pub fn harmony_tsc(g: &Graph, s: &Spectrum, k: usize, params: &HarmonyParams) -> Result<SolveReport> {
    run(g, s, k, params, None)
}

fn run(g: &Graph, s: &Spectrum, k: usize, params: &HarmonyParams, stop_at_max: Option<i128>) -> Result<SolveReport> {
    check_palette(k, 1, s)?;
    params.validate()?;
    let (colors, evaluations) = search(g, s, k, params, stop_at_max);
    Ok(SolveReport::new(g, s, Coloring::from_raw(colors), Strategy::Harmony, params.seed)?
        .with_palette(k)
        .with_iterations(evaluations))
}

/// Harmony search as the inner solver of [`iterative_csc`]. Each attempt stops
/// as soon as it finds a harmony within the threshold.
#[derive(Debug, Clone, Copy)]
pub struct HarmonyInner {
    pub params: HarmonyParams,
}

impl InnerSolver for HarmonyInner {
    fn strategy(&self) -> Strategy {
        Strategy::Harmony
    }

    /// One full search per palette size; the evaluation budget already
    /// covers restarts.
    fn attempts(&self) -> usize {
        1
    }

    fn solve(&self, g: &Graph, s: &Spectrum, k: usize, t: &Rational, seed: RngSeed) -> Result<SolveReport> {
        run(g, s, k, &self.params.with_seed(seed), Some(s.threshold_units(t)))
    }
}

/// Fewest colors found by harmony search for threshold `t`, growing the
/// palette one color at a time.
pub fn harmony_csc(g: &Graph, s: &Spectrum, t: &Rational, params: &HarmonyParams) -> Result<SolveReport> {
    params.validate()?;
    iterative_csc(g, s, t, &HarmonyInner { params: *params }, params.seed)
}
