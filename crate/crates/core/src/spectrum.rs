//! Color spectra: `s` ordered colors with a symmetric non-negative
//! interference matrix of exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid_param, Error, Result};
use crate::rational::{parse_rational, Rational};

/// Largest scaled entry accepted; keeps every neighborhood sum inside `i128`.
const MAX_UNIT: i128 = 1 << 100;

/// Interference matrix over colors `1..=size`.
///
/// Besides the exact entries the spectrum keeps every entry scaled by the lcm
/// of all denominators. Those integer "units" are what the solvers add up, so
/// every interference sum stays exact without allocating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    size: usize,
    entries: Vec<Rational>,
    scale: BigInt,
    units: Vec<i128>,
}

impl Spectrum {
    /// Builds a spectrum from row-major entries.
    pub fn new(size: usize, entries: Vec<Rational>) -> Result<Self> {
        if size == 0 {
            return Err(invalid_param("spectrum size must be at least 1"));
        }
        if entries.len() != size * size {
            return Err(invalid_param(format!(
                "expected {} matrix entries, got {}",
                size * size,
                entries.len()
            )));
        }
        for i in 0..size {
            for j in 0..size {
                let w = &entries[i * size + j];
                if w.is_negative() {
                    return Err(invalid_param(format!("negative entry W[{}][{}] = {w}", i + 1, j + 1)));
                }
                if *w != entries[j * size + i] {
                    return Err(invalid_param(format!("matrix is not symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        let scale = entries.iter().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let units = entries
            .iter()
            .map(|w| {
                let scaled = w.numer() * (&scale / w.denom());
                scaled
                    .to_i128()
                    .filter(|u| *u <= MAX_UNIT)
                    .ok_or_else(|| invalid_param("matrix entries span too many orders of magnitude"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { size, entries, scale, units })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(invalid_param("interference matrix must be square"));
        }
        Self::new(size, rows.into_iter().flatten().collect())
    }

    /// `W_ij = base^(-|i-j|)`.
    pub fn exp_decay(size: usize, base: &Rational) -> Result<Self> {
        if size == 0 {
            return Err(invalid_param("spectrum size must be at least 1"));
        }
        if *base <= Rational::one() {
            return Err(invalid_param(format!("decay base must exceed 1, got {base}")));
        }
        let inv = base.recip();
        let powers: Vec<Rational> = std::iter::successors(Some(Rational::one()), |p| Some(p * &inv))
            .take(size)
            .collect();
        let entries = (0..size)
            .flat_map(|i| (0..size).map(move |j| (i, j)))
            .map(|(i, j)| powers[i.abs_diff(j)].clone())
            .collect();
        Self::new(size, entries)
    }

    /// Base-2 exponential decay, the matrix used throughout the experiments.
    pub fn exp_decay2(size: usize) -> Result<Self> {
        Self::exp_decay(size, &Rational::from_integer(BigInt::from(2)))
    }

    pub fn identity(size: usize) -> Result<Self> {
        let entries = (0..size * size)
            .map(|idx| if idx / size == idx % size { Rational::one() } else { Rational::zero() })
            .collect();
        Self::new(size, entries)
    }

    /// Number of colors `s`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Exact entry `W(i, j)` for 1-based colors.
    pub fn weight(&self, i: usize, j: usize) -> &Rational {
        &self.entries[(i - 1) * self.size + (j - 1)]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.size)
    }

    /// Common denominator that turns every entry into an integer unit.
    pub fn scale(&self) -> &BigInt {
        &self.scale
    }

    /// Scaled entry for 1-based colors.
    #[inline]
    pub fn unit(&self, i: usize, j: usize) -> i128 {
        self.units[(i - 1) * self.size + (j - 1)]
    }

    /// Scaled row of 1-based color `i`, indexed by `j - 1`.
    #[inline]
    pub fn unit_row(&self, i: usize) -> &[i128] {
        &self.units[(i - 1) * self.size..i * self.size]
    }

    /// Converts a sum of units back to an exact rational.
    pub fn units_to_rational(&self, units: i128) -> Rational {
        Rational::new(BigInt::from(units), self.scale.clone())
    }

    /// Largest integer unit count not exceeding `t`, saturated to `i128`.
    ///
    /// An interference of `u` units is at most `t` exactly when
    /// `u <= threshold_units(t)`.
    pub fn threshold_units(&self, t: &Rational) -> i128 {
        let scaled = (t * Rational::from_integer(self.scale.clone())).floor().to_integer();
        scaled.to_i128().unwrap_or(if scaled.is_negative() { i128::MIN } else { i128::MAX })
    }

    /// Spectrum restricted to its first `k` colors.
    pub fn prefix(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.size {
            return Err(invalid_param(format!("prefix size {k} outside 1..={}", self.size)));
        }
        let entries = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .map(|(i, j)| self.entries[i * self.size + j].clone())
            .collect();
        Self::new(k, entries)
    }

    /// Parses a CSV matrix; each entry is an integer, a decimal or `a/b`.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split(',')
                .map(|cell| {
                    parse_rational(cell).map_err(|e| Error::Parse { line: idx + 1, message: e.to_string() })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse { line: 0, message: "empty matrix".into() });
        }
        Self::from_rows(rows)
    }

    pub fn to_csv(&self) -> String {
        self.rows()
            .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .map(|line| line + "\n")
            .collect()
    }
}
