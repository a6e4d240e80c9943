//! Exact rational scalars and their canonical text form.
//!
//! Everything in this crate computes over arbitrary-precision rationals; no
//! floating point is used anywhere. Rationals cross the JSON boundary as
//! strings `"p/q"` (or `"p"` when the denominator is 1) with `q > 0` and
//! `gcd(p, q) = 1`, which [`format_rat`] produces and [`parse_rat`] accepts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The scalar type used throughout: an arbitrary-precision rational number.
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Error raised when a rational string does not have the canonical shape.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {literal:?}: {reason}")]
pub struct RatParseError {
    pub literal: String,
    pub reason: String,
}

fn parse_int(s: &str, literal: &str) -> Result<BigInt, RatParseError> {
    s.parse::<BigInt>().map_err(|_| RatParseError {
        literal: literal.to_string(),
        reason: "expected an integer".to_string(),
    })
}

/// Parses `"p"` or `"p/q"` into a rational, reducing to lowest terms.
pub fn parse_rat(s: &str) -> Result<Rat, RatParseError> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s, s)?)),
        Some((num, den)) => {
            let n = parse_int(num, s)?;
            let d = parse_int(den, s)?;
            if d.is_zero() {
                return Err(RatParseError {
                    literal: s.to_string(),
                    reason: "zero denominator".to_string(),
                });
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Formats a rational in canonical form: lowest terms, positive denominator,
/// and no `/1` suffix for integers.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` is a (possibly negative) integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
