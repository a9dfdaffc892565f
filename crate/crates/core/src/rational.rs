//! Exact rational scalars. `num`'s `BigRational` already maintains the
//! reduced-fraction invariant (positive denominator, coprime parts), so this
//! module only adds constructors, parsing and formatting helpers.

use crate::error::Error;
use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

pub type Q = BigRational;
pub type Z = BigInt;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Parses "p/q" or "p".
pub fn parse_q(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let den: BigInt = den
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(num, den))
}

/// Formats as "p" or "p/q".
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Integer power with a signed base and non-negative exponent.
pub fn zpow(base: i64, exp: u32) -> Z {
    BigInt::from(base).pow(exp)
}

pub fn binomial(n: u32, k: u32) -> Z {
    if k > n {
        return Z::zero();
    }
    let mut acc = Z::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign_of(x: &Q) -> i32 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub fn is_negative(x: &Q) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let x = parse_q(s).unwrap();
            assert_eq!(format_q(&x), s);
        }
        assert_eq!(format_q(&parse_q("4/8").unwrap()), "1/2");
        assert_eq!(format_q(&parse_q("3/-6").unwrap()), "-1/2");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), Z::from(10));
        assert_eq!(binomial(20, 10), Z::from(184756));
        assert_eq!(binomial(3, 5), Z::zero());
    }
}
