//! Upper bounds on the minimum k-chromatic threshold and on the
//! t-interference chromatic number, computed exactly.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid_param, Error, Result};
use crate::graph::Graph;
use crate::rational::{self, Rational};
use crate::spectrum::Spectrum;

/// A bound together with the quantities it was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport<V> {
    pub value: V,
    /// Whether the bound's hypothesis holds. For the chromatic bound this is
    /// the threshold condition that certifies solvability within the spectrum.
    pub precondition_holds: bool,
    pub norm: Rational,
    /// Generalized gcd of the nonzero entries, when one exists.
    pub gcd: Option<Rational>,
    pub max_degree: usize,
}

/// `‖W‖∞`: the largest row sum.
pub fn inf_norm(s: &Spectrum) -> Rational {
    s.rows()
        .map(|row| row.iter().fold(Rational::zero(), |acc, w| acc + w))
        .max()
        .unwrap_or_else(Rational::zero)
}

/// Largest rational dividing every nonzero entry of `W`.
pub fn generalized_gcd(s: &Spectrum) -> Result<Rational> {
    rational::generalized_gcd(s.entries()).ok_or(Error::UndefinedGcd)
}

/// `Δ(G)·‖W‖∞ / k`, valid for `2 <= k <= s`.
pub fn tsc_bound(g: &Graph, s: &Spectrum, k: usize) -> Result<Rational> {
    if k < 2 || k > s.size() {
        return Err(invalid_param(format!("k = {k} outside 2..={}", s.size())));
    }
    Ok(delta_norm(g, s) / Rational::from_integer(BigInt::from(k)))
}

pub fn tsc_bound_report(g: &Graph, s: &Spectrum, k: usize) -> Result<BoundReport<Rational>> {
    Ok(BoundReport {
        value: tsc_bound(g, s, k)?,
        precondition_holds: true,
        norm: inf_norm(s),
        gcd: generalized_gcd(s).ok(),
        max_degree: g.max_degree(),
    })
}

/// Right-hand side of the threshold condition, `(Δ‖W‖∞ − gcd·(|S|−1)) / |S|`.
pub fn csc_threshold_floor(g: &Graph, s: &Spectrum) -> Result<Rational> {
    let gcd = generalized_gcd(s)?;
    let size = Rational::from_integer(BigInt::from(s.size()));
    Ok((delta_norm(g, s) - gcd * (&size - Rational::one())) / size)
}

/// True iff `t' >= (Δ‖W‖∞ − gcd·(|S|−1)) / |S|`, where `t'` is the largest
/// multiple of the gcd not above `t` (the threshold the bound actually uses).
/// Equivalently, the chromatic bound is at most `|S|`. An all-zero matrix
/// makes every non-negative threshold admissible.
///
/// Testing `t` itself would not be enough: with `W` all `1/2` on a single
/// edge and `|S| = 2`, `t = 1/4` meets the raw inequality yet no coloring
/// stays within it.
pub fn csc_precondition(g: &Graph, s: &Spectrum, t: &Rational) -> bool {
    if t.is_negative() {
        return false;
    }
    match (generalized_gcd(s), csc_threshold_floor(g, s)) {
        (Ok(gcd), Ok(rhs)) => gcd_multiple_below(t, &gcd) >= rhs,
        _ => true,
    }
}

fn gcd_multiple_below(t: &Rational, gcd: &Rational) -> Rational {
    gcd * Rational::from_integer(rational::floor(&(t / gcd)))
}

/// `⌈(Δ‖W‖∞ + gcd) / (t' + gcd)⌉` where `t'` is the largest multiple of the
/// gcd not above `t`.
///
/// The value is returned whether or not [`csc_precondition`] holds; only when it
/// holds does the bound certify a solution within the spectrum.
pub fn csc_bound(g: &Graph, s: &Spectrum, t: &Rational) -> Result<BigInt> {
    if s.size() < 2 {
        return Err(invalid_param("the chromatic bound needs a spectrum of at least 2 colors"));
    }
    if t.is_negative() {
        return Err(invalid_param(format!("threshold {t} is negative")));
    }
    let gcd = generalized_gcd(s)?;
    let t_floor = gcd_multiple_below(t, &gcd);
    Ok(rational::ceil(&((delta_norm(g, s) + &gcd) / (t_floor + &gcd))))
}

pub fn csc_bound_report(g: &Graph, s: &Spectrum, t: &Rational) -> Result<BoundReport<BigInt>> {
    Ok(BoundReport {
        value: csc_bound(g, s, t)?,
        precondition_holds: csc_precondition(g, s, t),
        norm: inf_norm(s),
        gcd: Some(generalized_gcd(s)?),
        max_degree: g.max_degree(),
    })
}

fn delta_norm(g: &Graph, s: &Spectrum) -> Rational {
    Rational::from_integer(BigInt::from(g.max_degree())) * inf_norm(s)
}
