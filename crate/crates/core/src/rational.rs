//! Helpers over `BigRational`: parsing, integer rounding, and the generalized gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid_param, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses an integer (`3`), a decimal (`0.25`) or a fraction (`3/8`) exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(invalid_param("empty number"));
    }
    let bad = || invalid_param(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(invalid_param(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, fracpart)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if fracpart.is_empty() && whole_digits.is_empty()
            || !whole_digits.chars().all(|c| c.is_ascii_digit())
            || !fracpart.chars().all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let digits = format!("{whole_digits}{fracpart}");
        let mut num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), fracpart.len());
        return Ok(Rational::new(num, den));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Ceiling of a rational as an exact integer.
pub fn ceil(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// Floor of a rational as an exact integer.
pub fn floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Largest rational `g` with every nonzero value an integer multiple of `g`.
///
/// Returns `None` when all values are zero.
pub fn generalized_gcd<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Option<Rational> {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    let mut any = false;
    for v in values {
        if v.is_zero() {
            continue;
        }
        any = true;
        num_gcd = num_gcd.gcd(&v.numer().abs());
        den_lcm = den_lcm.lcm(v.denom());
    }
    any.then(|| Rational::new(num_gcd, den_lcm))
}

/// True when `y / x` is an integer. `x` must be nonzero.
pub fn divides(x: &Rational, y: &Rational) -> bool {
    (y / x).is_integer()
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
