//! Exhaustive solvers for desk-sized instances: the exact minimum k-chromatic
//! threshold and the exact t-interference chromatic number.

use crate::coloring::Coloring;
use crate::error::{invalid_param, Error, Result};
use crate::graph::Graph;
use crate::interference::all_vertex_units;
use crate::rational::Rational;
use crate::spectrum::Spectrum;

/// Default cap on the size of the enumeration space.
pub const DEFAULT_CAP: u64 = 100_000_000;

/// An exact optimum with a coloring that attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult<T> {
    pub optimum: T,
    pub witness: Coloring,
    /// Complete colorings examined.
    pub enumerated: u64,
}

fn check_space(base: usize, n: usize, cap: u64) -> Result<()> {
    let space = u32::try_from(n)
        .ok()
        .and_then(|n| (base as u128).checked_pow(n))
        .filter(|&sz| sz <= cap as u128);
    match space {
        Some(_) => Ok(()),
        None => Err(Error::InstanceTooLarge { space: format!("{base}^{n}"), cap }),
    }
}

/// Exact `T_k`: the minimum over all colorings with colors `1..=k` of the
/// maximum vertex interference.
///
/// Colorings are visited in mixed-radix (odometer) order; each step recolors
/// the changed vertices and patches only their neighbors' sums.
pub fn exact_tsc(g: &Graph, s: &Spectrum, k: usize, cap: u64) -> Result<OracleResult<Rational>> {
    if k == 0 || k > s.size() {
        return Err(invalid_param(format!("k = {k} outside 1..={}", s.size())));
    }
    let n = g.vertex_count();
    check_space(k, n, cap)?;
    let mut colors = vec![1usize; n];
    let mut acc = all_vertex_units(g, s, &colors);
    let mut best = acc.iter().copied().max().unwrap_or(0);
    let mut witness = colors.clone();
    let mut enumerated = 1u64;
    'outer: while best > 0 {
        // advance the odometer, least significant digit = last vertex
        let mut pos = n;
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            let old = colors[pos];
            let new = if old == k { 1 } else { old + 1 };
            recolor(g, s, &mut colors, &mut acc, pos, new);
            if new != 1 {
                break;
            }
        }
        enumerated += 1;
        let max = acc.iter().copied().max().unwrap_or(0);
        if max < best {
            best = max;
            witness.copy_from_slice(&colors);
        }
    }
    Ok(OracleResult {
        optimum: s.units_to_rational(best),
        witness: Coloring::from_raw(witness),
        enumerated,
    })
}

fn recolor(g: &Graph, s: &Spectrum, colors: &mut [usize], acc: &mut [i128], v: usize, new: usize) {
    let old = colors[v];
    let (old_row, new_row) = (s.unit_row(old), s.unit_row(new));
    for &u in g.neighbors(v) {
        let cu = colors[u] - 1;
        let delta = new_row[cu] - old_row[cu];
        acc[u] += delta;
        acc[v] += delta;
    }
    colors[v] = new;
}

/// Exact `χ_t`: the fewest distinct spectrum colors over all complete
/// colorings whose vertex interferences are all at most `t`. `None` when no
/// such coloring exists.
///
/// Depth-first over vertices in index order. A branch is cut when a partial
/// interference already exceeds `t` (entries are non-negative, so sums only
/// grow) or when it uses as many distinct colors as the best coloring found.
pub fn exact_csc(g: &Graph, s: &Spectrum, t: &Rational, cap: u64) -> Result<OracleResult<Option<usize>>> {
    let n = g.vertex_count();
    check_space(s.size(), n, cap)?;
    let mut search = ChromaticSearch {
        g,
        s,
        limit: s.threshold_units(t),
        colors: vec![0; n],
        acc: vec![0; n],
        uses: vec![0; s.size() + 1],
        distinct: 0,
        best: usize::MAX,
        best_colors: Vec::new(),
        enumerated: 0,
    };
    if search.limit >= 0 {
        search.dfs(0);
    }
    let optimum = (search.best != usize::MAX).then_some(search.best);
    let witness = match optimum {
        Some(_) => Coloring::from_raw(search.best_colors),
        None => Coloring::uncolored(n),
    };
    Ok(OracleResult { optimum, witness, enumerated: search.enumerated })
}

struct ChromaticSearch<'a> {
    g: &'a Graph,
    s: &'a Spectrum,
    limit: i128,
    colors: Vec<usize>,
    acc: Vec<i128>,
    uses: Vec<usize>,
    distinct: usize,
    best: usize,
    best_colors: Vec<usize>,
    enumerated: u64,
}

impl ChromaticSearch<'_> {
    fn dfs(&mut self, v: usize) {
        if v == self.g.vertex_count() {
            self.enumerated += 1;
            if self.distinct < self.best {
                self.best = self.distinct;
                self.best_colors = self.colors.clone();
            }
            return;
        }
        // colors already in use first: they cannot raise the distinct count
        let size = self.s.size();
        let order = (1..=size)
            .filter(|&c| self.uses[c] > 0)
            .chain((1..=size).filter(|&c| self.uses[c] == 0))
            .collect::<Vec<_>>();
        for color in order {
            let fresh = self.uses[color] == 0;
            if self.distinct + usize::from(fresh) >= self.best {
                continue;
            }
            let row = self.s.unit_row(color);
            let mut own = 0i128;
            let fits = self.g.neighbors(v).iter().all(|&u| match self.colors[u] {
                0 => true,
                cu => {
                    own += row[cu - 1];
                    self.acc[u] + row[cu - 1] <= self.limit
                }
            });
            if !fits || own > self.limit {
                continue;
            }
            self.apply(v, color, own, 1);
            self.dfs(v + 1);
            self.apply(v, color, own, -1);
            if self.best <= 1 {
                return;
            }
        }
    }

    fn apply(&mut self, v: usize, color: usize, own: i128, sign: i128) {
        let row = self.s.unit_row(color);
        for &u in self.g.neighbors(v) {
            if self.colors[u] != 0 && u != v {
                self.acc[u] += sign * row[self.colors[u] - 1];
            }
        }
        if sign > 0 {
            self.colors[v] = color;
            self.acc[v] = own;
            self.uses[color] += 1;
            if self.uses[color] == 1 {
                self.distinct += 1;
            }
        } else {
            self.colors[v] = 0;
            self.acc[v] = 0;
            self.uses[color] -= 1;
            if self.uses[color] == 0 {
                self.distinct -= 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::named_graph;
    use crate::interference::max_interference;
    use crate::rational::int;

    #[test]
    fn paw_case_study() {
        let g = named_graph("paw").unwrap();
        let r = exact_tsc(&g, &Spectrum::exp_decay2(3).unwrap(), 3, DEFAULT_CAP).unwrap();
        assert_eq!(r.optimum, int(1));
        assert_eq!(r.enumerated, 81);
        let s4 = Spectrum::exp_decay2(4).unwrap();
        let r = exact_csc(&g, &s4, &int(1), DEFAULT_CAP).unwrap();
        assert_eq!(r.optimum, Some(3));
        assert!(max_interference(&g, &s4, &r.witness).unwrap() <= int(1));
        assert_eq!(r.witness.distinct_colors(), 3);
    }

    #[test]
    fn odd_cycle_and_triangle() {
        let c5 = named_graph("cycle(5)").unwrap();
        let id2 = Spectrum::identity(2).unwrap();
        assert_eq!(exact_tsc(&c5, &id2, 2, DEFAULT_CAP).unwrap().optimum, int(1));
        let id5 = Spectrum::identity(5).unwrap();
        assert_eq!(exact_csc(&c5, &id5, &int(0), DEFAULT_CAP).unwrap().optimum, Some(3));
        let k3 = named_graph("complete(3)").unwrap();
        assert_eq!(exact_tsc(&k3, &id2, 2, DEFAULT_CAP).unwrap().optimum, int(1));
    }

    #[test]
    fn infeasible_threshold_reports_none() {
        let k3 = named_graph("complete(3)").unwrap();
        let id2 = Spectrum::identity(2).unwrap();
        let r = exact_csc(&k3, &id2, &int(0), DEFAULT_CAP).unwrap();
        assert_eq!(r.optimum, None);
        assert_eq!(r.witness.colored_count(), 0);
        let neg = exact_csc(&k3, &id2, &int(-1), DEFAULT_CAP).unwrap();
        assert_eq!(neg.optimum, None);
    }

    #[test]
    fn cap_is_enforced() {
        let g = named_graph("cycle(12)").unwrap();
        let s = Spectrum::exp_decay2(4).unwrap();
        assert!(matches!(exact_tsc(&g, &s, 4, 1000), Err(Error::InstanceTooLarge { .. })));
        assert!(matches!(exact_csc(&g, &s, &int(1), 1000), Err(Error::InstanceTooLarge { .. })));
        assert!(exact_tsc(&g, &s, 5, DEFAULT_CAP).is_err());
    }

    #[test]
    fn empty_graph() {
        let g = Graph::empty(0);
        let s = Spectrum::identity(2).unwrap();
        assert_eq!(exact_tsc(&g, &s, 2, DEFAULT_CAP).unwrap().optimum, int(0));
        assert_eq!(exact_csc(&g, &s, &int(0), DEFAULT_CAP).unwrap().optimum, Some(0));
    }
}
