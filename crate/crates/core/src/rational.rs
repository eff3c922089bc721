//! Exact rational scalars. Every coordinate and weight in this crate is a
//! `Q`; no floating point enters any predicate.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{input_err, Error, Result};

pub type Q = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics if `d` is zero.
pub fn q_ratio(n: i64, d: i64) -> Q {
    assert!(d != 0, "zero denominator");
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_usize(n: usize) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses "a" or "a/b" with optional leading sign. Rejects zero denominators.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    if s.is_empty() {
        return input_err("empty rational");
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| Error::Input(format!("bad rational '{s}'")))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Input(format!("bad rational '{s}'")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return input_err(format!("zero denominator in '{s}'"));
    }
    Ok(Q::new(num, den))
}

/// Formats as "a" when integral, "a/b" otherwise, with the sign on the
/// numerator. Round-trips through `parse_q`.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Out-of-range magnitudes only; sign survives.
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/4", "22/7"] {
            let v = parse_q(s).unwrap();
            assert_eq!(format_q(&v), s);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse_q("2/4").unwrap(), q_ratio(1, 2));
        assert_eq!(parse_q("6/3").unwrap(), q(2));
        assert_eq!(format_q(&parse_q("6/3").unwrap()), "2");
        assert_eq!(parse_q("-2/-4").unwrap(), q_ratio(1, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "a", "1/0", "1//2", "1.5", "2 /3"] {
            assert!(parse_q(s).is_err(), "accepted {s:?}");
        }
    }
}
