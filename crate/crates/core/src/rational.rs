//! Exact rational scalars.
//!
//! All structure constants, cochain coefficients and linear-algebra entries
//! are arbitrary-precision rationals. `num_rational::BigRational` already
//! guarantees the canonical form we need (lowest terms, positive
//! denominator, zero as 0/1), so the toolkit uses it directly under the
//! [`Rat`] alias together with a strict text format: `p`, `-p` or `p/q`
//! with `q > 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::CoreError;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q` (`q` a positive integer). No whitespace.
pub fn parse_rat(s: &str) -> Result<Rat, CoreError> {
    let bad = || CoreError::BadRational(s.to_string());
    let (num_s, den_s) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let num: BigInt = num_s.parse().map_err(|_| bad())?;
    let den: BigInt = match den_s {
        Some(d) => {
            if d.starts_with('+') || d.starts_with('-') {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if den.is_zero() || den.is_negative() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Canonical text form: integer when the denominator is 1, else `p/q`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
