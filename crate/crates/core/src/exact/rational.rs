//! Rational scalar helpers.
//!
//! All quantities in the crate are [`Rational`]s: arbitrary precision,
//! always reduced, denominator positive.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("malformed rational {0:?} (expected \"p\" or \"p/q\")")]
    Malformed(String),
}

/// `num / den` as a reduced rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"-p"` or `"p/q"`. Surrounding whitespace is ignored.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| ParseRationalError::Malformed(t.to_string()))?;
    let den = BigInt::from_str(den).map_err(|_| ParseRationalError::Malformed(t.to_string()))?;
    if den.is_zero() {
        return Err(ParseRationalError::ZeroDenominator(t.to_string()));
    }
    Ok(Rational::new(num, den))
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Sign as -1, 0 or 1.
pub fn signum(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// The rational with the smallest denominator (then smallest absolute
/// numerator) in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi);
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else if hi.is_negative() {
        -simplest_positive(&-hi, &-lo)
    } else {
        Rational::zero()
    }
}

// Continued-fraction walk; both bounds strictly positive.
fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    if &fl + Rational::one() <= *hi {
        return fl + Rational::one();
    }
    // lo and hi share the integer part and lo is not an integer.
    let lo_frac = lo - &fl;
    let hi_frac = hi - &fl;
    if hi_frac.is_zero() {
        return fl;
    }
    let inner = simplest_positive(&hi_frac.recip(), &lo_frac.recip());
    fl + inner.recip()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Renders `q` in scientific notation with `digits` significant digits,
/// rounding half away from zero. Only used for human-facing columns.
pub fn to_sci(q: &Rational, digits: usize) -> String {
    assert!(digits >= 1);
    if q.is_zero() {
        return format!("0.{}e0", "0".repeat(digits - 1));
    }
    let neg = q.is_negative();
    let a = q.abs();
    // Find exponent e with 10^e <= a < 10^(e+1).
    let ten = int(10);
    let mut e: i64 = 0;
    let mut scaled = a.clone();
    while scaled >= ten {
        scaled /= &ten;
        e += 1;
    }
    while scaled < Rational::one() {
        scaled *= &ten;
        e -= 1;
    }
    let factor = Rational::from_integer(num_traits::pow(BigInt::from(10), digits - 1));
    let mut mantissa = (scaled * factor + rat(1, 2)).floor().to_integer();
    let limit = num_traits::pow(BigInt::from(10), digits);
    if mantissa >= limit {
        mantissa /= 10;
        e += 1;
    }
    let m = mantissa.to_string();
    let (head, tail) = m.split_at(1);
    let sign = if neg { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{e}")
    } else {
        format!("{sign}{head}.{tail}e{e}")
    }
}
