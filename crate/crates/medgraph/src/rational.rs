//! Exact rational helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number used for all weights and function values.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Formats `a` as `n` or `n/d`.
pub fn fmt_q(a: &Q) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Parses `n`, `-n` or `n/d`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let n: BigInt = a.trim().parse().ok()?;
        let d: BigInt = b.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Q::new(n, d))
    } else {
        Some(Q::from_integer(s.parse().ok()?))
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(vals: impl IntoIterator<Item = &'a Q>) -> BigInt {
    use num_integer::Integer;
    vals.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn is_nonnegative(a: &Q) -> bool {
    !a.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "7", "-3", "3/4", "10/4"] {
            let a = parse_q(s).unwrap();
            assert_eq!(parse_q(&fmt_q(&a)).unwrap(), a);
        }
        assert_eq!(fmt_q(&parse_q("10/4").unwrap()), "5/2");
        assert!(parse_q("1/0").is_none());
        assert!(parse_q("x").is_none());
    }

    #[test]
    fn lcm_of_denominators() {
        let v = [ratio(1, 4), ratio(1, 6), q(3)];
        assert_eq!(common_denominator(&v), BigInt::from(12));
    }
}
