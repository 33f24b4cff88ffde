//! Exact rationals and their string encoding.
//!
//! Values are `num_rational::BigRational`, which keeps every fraction in
//! lowest terms with a positive denominator. The wire format is a string
//! `"p/q"`, or `"p"` when the denominator is one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`. The denominator must be positive; the result
/// is reduced.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidInput(format!("malformed rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let digits_ok = |t: &str, signed: bool| {
        let t = if signed {
            t.strip_prefix('-').unwrap_or(t)
        } else {
            t
        };
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits_ok(num, true) || !digits_ok(den, false) {
        return Err(bad());
    }
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn format(r: &Rational) -> String {
    r.to_string()
}

pub fn in_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= Rational::one()
}

fn is_power_of_two(n: &BigInt) -> bool {
    n.is_positive() && {
        let mut m = n.clone();
        while m.is_even() {
            m >>= 1;
        }
        m.is_one()
    }
}

/// True when the denominator is a power of two.
pub fn is_dyadic(r: &Rational) -> bool {
    is_power_of_two(r.denom())
}

/// True for `2^k` with `k` any integer.
pub fn is_power_of_two_rational(r: &Rational) -> bool {
    r.is_positive()
        && ((r.numer().is_one() && is_power_of_two(r.denom()))
            || (r.denom().is_one() && is_power_of_two(r.numer())))
}

pub(crate) mod serde_str {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("1/4").unwrap(), frac(1, 4));
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-2/6").unwrap(), frac(-1, 3));
        assert_eq!(parse("0").unwrap(), int(0));
        for bad in [
            "", "1/0", "1/-2", "a", "1/", "/2", " 1", "1.5", "+1", "1/2/3",
        ] {
            assert!(parse(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn format_lowest_terms() {
        assert_eq!(format(&frac(2, 10)), "1/5");
        assert_eq!(format(&int(1)), "1");
        assert_eq!(format(&frac(-3, 9)), "-1/3");
    }

    #[test]
    fn dyadic_tests() {
        assert!(is_dyadic(&frac(3, 8)));
        assert!(is_dyadic(&int(1)));
        assert!(!is_dyadic(&frac(1, 3)));
        assert!(is_power_of_two_rational(&frac(1, 4)));
        assert!(is_power_of_two_rational(&int(8)));
        assert!(is_power_of_two_rational(&int(1)));
        assert!(!is_power_of_two_rational(&frac(2, 3)));
        assert!(!is_power_of_two_rational(&frac(3, 4)));
        assert!(!is_power_of_two_rational(&int(6)));
    }
}
