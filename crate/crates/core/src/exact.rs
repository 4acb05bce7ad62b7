//! Exact scalars and the combinatorial primitives used everywhere else.
//!
//! [`Rational`] is `num`'s arbitrary-precision ratio, which is always kept in
//! lowest terms with a positive denominator, so `==` is exact equality of
//! values. Indices (n, m, k, p, N, s) are plain machine integers; only the
//! values built from them are arbitrary precision.

use num::bigint::Sign;
use num::traits::{One, Pow, Signed, ToPrimitive, Zero};
use num::{BigInt, BigRational, BigUint};

use crate::error::{Error, Result};

/// Arbitrary-precision exact fraction.
pub type Rational = BigRational;

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// `num / den` as a [`Rational`]. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn natural_to_rational(value: &Natural) -> Rational {
    Rational::from_integer(BigInt::from_biguint(Sign::Plus, value.clone()))
}

/// C(n, k), zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    // each partial product c * (n - i) / (i + 1) is itself C(n, i + 1)
    (0..k).fold(Natural::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// C(n, k) lifted to a rational.
pub fn binomial_q(n: u64, k: u64) -> Rational {
    natural_to_rational(&binomial(n, k))
}

/// Rising factorial (a)_k = a(a+1)...(a+k-1); 1 for k = 0.
pub fn pochhammer(a: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..k {
        acc *= &factor;
        factor += BigInt::one();
    }
    acc
}

pub fn factorial(k: u64) -> Natural {
    (1..=k).fold(Natural::one(), |acc, i| acc * i)
}

/// Exact integer power, negative exponents allowed for nonzero bases.
pub fn rational_pow(x: &Rational, e: i64) -> Result<Rational> {
    if e < 0 && x.is_zero() {
        return Err(Error::domain(format!(
            "zero raised to negative power {e}"
        )));
    }
    let base = if e < 0 { x.recip() } else { x.clone() };
    Ok(Pow::pow(base, e.unsigned_abs()))
}

/// Returns `Some(j)` when `a = -j` for a natural number j.
pub fn as_nonpositive_integer(a: &Rational) -> Option<u64> {
    if a.is_integer() && !a.is_positive() {
        (-a.to_integer()).to_u64()
    } else {
        None
    }
}

/// Returns `Some(j)` when `a` is a natural number (including zero).
pub fn as_natural(a: &Rational) -> Option<u64> {
    if a.is_integer() && !a.is_negative() {
        a.to_integer().to_u64()
    } else {
        None
    }
}

/// Parses the `a/b` text format. The sign, if any, belongs to the numerator;
/// `b` may be omitted and must be positive.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("malformed rational {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num: BigInt = parse_signed_digits(num).ok_or_else(bad)?;
    let den: BigInt = match den {
        None => BigInt::one(),
        Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => {
            d.parse().map_err(|_| bad())?
        }
        Some(_) => return Err(bad()),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

fn parse_signed_digits(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let value: BigInt = digits.parse().ok()?;
    Some(if text.starts_with('-') { -value } else { value })
}

/// Parses either the `a/b` format or a plain decimal such as `-0.125`,
/// converting the latter exactly.
pub fn parse_exact(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    if let Some((whole, frac)) = trimmed.split_once('.') {
        let bad = || Error::Parse(format!("malformed decimal {trimmed:?}"));
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.strip_prefix(['+', '-']).unwrap_or(whole);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{whole_digits}{frac}");
        let mantissa: BigInt = digits.parse().map_err(|_| bad())?;
        let scale = Pow::pow(BigInt::from(10u32), frac.len() as u64);
        let value = Rational::new(mantissa, scale);
        return Ok(if negative { -value } else { value });
    }
    parse_rational(trimmed)
}

/// Renders with 15 significant digits. Used only for display next to the
/// exact value.
pub fn to_decimal(x: &Rational) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let value = x.to_f64().unwrap_or(f64::NAN);
    format_f64(value)
}

/// 15-significant-digit rendering of a float, plain notation when the
/// exponent is moderate.
pub fn format_f64(value: f64) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let exponent = value.abs().log10().floor() as i32;
    if (-5..15).contains(&exponent) {
        let mut decimals = (14 - exponent).max(0) as usize;
        let text = format!("{value:.decimals$}");
        // rounding can carry into the next power of ten (9.99.. -> 10.0..)
        let rounded: f64 = text.parse().unwrap_or(value);
        if rounded.abs().log10().floor() as i32 > exponent && decimals > 0 {
            decimals -= 1;
            return format!("{value:.decimals$}");
        }
        text
    } else {
        format!("{value:.14e}")
    }
}
