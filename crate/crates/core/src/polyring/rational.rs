//! Exact rational scalars.
//!
//! Coefficients are `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator. This module only adds the
//! serialization convention used across the crate: always `"num/den"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `"num/den"` form; integers keep the `/1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"num/den"` or a bare integer. Rejects zero denominators and
/// anything with a decimal point.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_sign_and_gcd() {
        let r = parse_rational("4/-6").unwrap();
        assert_eq!(format_rational(&r), "-2/3");
        assert_eq!(format_rational(&rational(0)), "0/1");
        assert_eq!(format_rational(&rational(7)), "7/1");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational(" 12 ").unwrap(), rational(12));
    }
}
