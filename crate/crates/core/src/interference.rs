//! Interference evaluations. A vertex `v` colored `c(v)` receives
//! `W(c(u), c(v))` from every colored neighbor `u`; uncolored neighbors
//! contribute nothing.

use crate::coloring::Coloring;
use crate::error::{invalid_param, Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::spectrum::Spectrum;

fn check_shapes(g: &Graph, s: &Spectrum, c: &Coloring) -> Result<()> {
    if c.len() != g.vertex_count() {
        return Err(invalid_param(format!(
            "coloring covers {} vertices but the graph has {}",
            c.len(),
            g.vertex_count()
        )));
    }
    if c.max_color() > s.size() {
        return Err(invalid_param(format!(
            "color {} outside spectrum 1..={}",
            c.max_color(),
            s.size()
        )));
    }
    Ok(())
}

fn check_complete(c: &Coloring) -> Result<()> {
    if c.is_complete() {
        Ok(())
    } else {
        Err(Error::InvalidState("coloring is incomplete".into()))
    }
}

/// Potential interference in units: what `v` would receive if colored `color`.
#[inline]
pub(crate) fn potential_units(g: &Graph, s: &Spectrum, colors: &[usize], v: usize, color: usize) -> i128 {
    let row = s.unit_row(color);
    g.neighbors(v)
        .iter()
        .filter_map(|&u| match colors[u] {
            0 => None,
            cu => Some(row[cu - 1]),
        })
        .sum()
}

/// Interference at every vertex in units; uncolored vertices read 0.
pub(crate) fn all_vertex_units(g: &Graph, s: &Spectrum, colors: &[usize]) -> Vec<i128> {
    let mut acc = vec![0i128; g.vertex_count()];
    for &(u, v) in g.edges() {
        let (cu, cv) = (colors[u], colors[v]);
        if cu != 0 && cv != 0 {
            let w = s.unit(cu, cv);
            acc[u] += w;
            acc[v] += w;
        }
    }
    acc
}

/// `I_v`: interference at a colored vertex.
pub fn vertex_interference(g: &Graph, s: &Spectrum, c: &Coloring, v: usize) -> Result<Rational> {
    check_shapes(g, s, c)?;
    let color = c
        .get(v)
        .ok_or_else(|| Error::InvalidState(format!("vertex {v} is uncolored")))?;
    Ok(s.units_to_rational(potential_units(g, s, c.raw(), v, color)))
}

/// `I_v^i`: interference `v` would receive with color `i`, neighbors fixed.
pub fn potential_interference(g: &Graph, s: &Spectrum, c: &Coloring, v: usize, i: usize) -> Result<Rational> {
    check_shapes(g, s, c)?;
    if i == 0 || i > s.size() {
        return Err(invalid_param(format!("color {i} outside spectrum 1..={}", s.size())));
    }
    Ok(s.units_to_rational(potential_units(g, s, c.raw(), v, i)))
}

/// Interference at every vertex of a complete coloring.
pub fn vertex_interferences(g: &Graph, s: &Spectrum, c: &Coloring) -> Result<Vec<Rational>> {
    check_shapes(g, s, c)?;
    check_complete(c)?;
    Ok(all_vertex_units(g, s, c.raw())
        .into_iter()
        .map(|u| s.units_to_rational(u))
        .collect())
}

/// Maximum vertex interference of a complete coloring (0 for an empty graph).
pub fn max_interference(g: &Graph, s: &Spectrum, c: &Coloring) -> Result<Rational> {
    check_shapes(g, s, c)?;
    check_complete(c)?;
    let max = all_vertex_units(g, s, c.raw()).into_iter().max().unwrap_or(0);
    Ok(s.units_to_rational(max))
}

/// Sum over edges of `W(c(u), c(v))`; half the sum of vertex interferences.
pub fn sum_edge_interference(g: &Graph, s: &Spectrum, c: &Coloring) -> Result<Rational> {
    check_shapes(g, s, c)?;
    check_complete(c)?;
    let colors = c.raw();
    let total: i128 = g.edges().iter().map(|&(u, v)| s.unit(colors[u], colors[v])).sum();
    Ok(s.units_to_rational(total))
}

/// Sum over vertices of `I_v`.
pub fn sum_vertex_interference(g: &Graph, s: &Spectrum, c: &Coloring) -> Result<Rational> {
    check_shapes(g, s, c)?;
    check_complete(c)?;
    let total: i128 = all_vertex_units(g, s, c.raw()).into_iter().sum();
    Ok(s.units_to_rational(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::named_graph;
    use crate::rational::{frac, int};
    use num_traits::Zero;

    fn paw() -> Graph {
        named_graph("paw").unwrap()
    }

    #[test]
    fn single_edge_adjacent_colors() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let s = Spectrum::exp_decay2(3).unwrap();
        let c = Coloring::from_colors(vec![1, 2]).unwrap();
        assert_eq!(vertex_interference(&g, &s, &c, 0).unwrap(), frac(1, 2));
        assert_eq!(vertex_interference(&g, &s, &c, 1).unwrap(), frac(1, 2));
    }

    #[test]
    fn isolated_vertex_is_silent() {
        let g = Graph::empty(1);
        let s = Spectrum::exp_decay2(3).unwrap();
        for color in 1..=3 {
            let c = Coloring::from_colors(vec![color]).unwrap();
            assert!(vertex_interference(&g, &s, &c, 0).unwrap().is_zero());
        }
    }

    #[test]
    fn triangle_middle_color() {
        let g = named_graph("complete(3)").unwrap();
        let s = Spectrum::exp_decay2(3).unwrap();
        let c = Coloring::from_colors(vec![1, 2, 3]).unwrap();
        assert_eq!(vertex_interference(&g, &s, &c, 1).unwrap(), int(1));
    }

    #[test]
    fn paw_center_potential() {
        // center 1, neighbors pendant 0 = red, peers 2, 3 = blue
        let g = paw();
        let s = Spectrum::exp_decay2(3).unwrap();
        let c = Coloring::from_options([Some(1), None, Some(3), Some(3)]).unwrap();
        assert_eq!(potential_interference(&g, &s, &c, 1, 1).unwrap(), frac(3, 2));
        assert!(vertex_interference(&g, &s, &c, 1).is_err());
        assert!(potential_interference(&g, &s, &c, 1, 4).is_err());
        assert!(potential_interference(&g, &s, &c, 1, 0).is_err());
        let none = Coloring::uncolored(4);
        assert!(potential_interference(&g, &s, &none, 1, 2).unwrap().is_zero());
    }

    #[test]
    fn paw_highlighted_coloring_reaches_one() {
        // center red, peers green and blue, pendant blue
        let g = paw();
        let s = Spectrum::exp_decay2(3).unwrap();
        let c = Coloring::from_colors(vec![3, 1, 2, 3]).unwrap();
        assert_eq!(max_interference(&g, &s, &c).unwrap(), int(1));
    }

    #[test]
    fn proper_coloring_under_identity() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let s = Spectrum::identity(2).unwrap();
        let c = Coloring::from_colors(vec![1, 2]).unwrap();
        assert!(max_interference(&g, &s, &c).unwrap().is_zero());
        assert!(sum_edge_interference(&g, &s, &c).unwrap().is_zero());
    }

    #[test]
    fn incomplete_and_mismatched_inputs_fail() {
        let g = paw();
        let s = Spectrum::exp_decay2(3).unwrap();
        let partial = Coloring::from_options([Some(1), None, Some(1), Some(1)]).unwrap();
        assert!(matches!(max_interference(&g, &s, &partial), Err(Error::InvalidState(_))));
        assert!(sum_edge_interference(&g, &s, &partial).is_err());
        let short = Coloring::from_colors(vec![1, 1]).unwrap();
        assert!(max_interference(&g, &s, &short).is_err());
        let wide = Coloring::from_colors(vec![1, 1, 1, 4]).unwrap();
        assert!(max_interference(&g, &s, &wide).is_err());
    }
}
