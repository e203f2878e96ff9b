//! Arbitrary-precision rationals, always held in lowest terms with a
//! positive denominator. Backed by `num_rational::BigRational`, which
//! maintains exactly that invariant; this module adds the square-root,
//! parsing, and rendering helpers the rest of the crate needs.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational number: reduced `numerator/denominator`, denominator > 0.
pub type ExactRational = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> ExactRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact square root of a non-negative rational.
///
/// Returns `r >= 0` with `r*r == q`, `Error::NegativeInput` for `q < 0`, and
/// `Error::NotASquare` when no rational root exists.
pub fn rat_sqrt(q: &ExactRational) -> Result<ExactRational> {
    if q.is_negative() {
        return Err(Error::NegativeInput);
    }
    if q.is_zero() {
        return Ok(ExactRational::zero());
    }
    let num = int_sqrt(q.numer())?;
    let den = int_sqrt(q.denom())?;
    Ok(BigRational::new_raw(num, den))
}

/// Exact square root of a non-negative integer, or `NotASquare`.
fn int_sqrt(n: &BigInt) -> Result<BigInt> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Ok(r)
    } else {
        Err(Error::NotASquare)
    }
}

/// Parse `p` or `p/q` (optionally signed) into an exact rational.
///
/// Unlike `BigRational::from_str` this rejects a zero denominator instead of
/// panicking.
pub fn parse_rational(text: &str) -> Result<ExactRational> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num_text
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer '{num_text}'")))?;
    let den: BigInt = match den_text {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer '{d}'")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(BigRational::new(num, den))
}

/// True when the rational is an integer (denominator 1).
pub fn is_integer(q: &ExactRational) -> bool {
    q.denom().is_one()
}

/// Height of a reduced rational: max(|numerator|, denominator).
pub fn height(q: &ExactRational) -> BigInt {
    let n = q.numer().abs();
    let d = q.denom().clone();
    if n >= d {
        n
    } else {
        d
    }
}

/// gcd of two integers as used by the table fast path.
pub fn gcd_u128(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Floor square root of a u128, plus exactness: `Some(r)` iff `r*r == n`.
pub fn exact_sqrt_u128(n: u128) -> Option<u128> {
    if n == 0 {
        return Some(0);
    }
    // Quadratic residues mod 16 are {0,1,4,9}; rejects ~3/4 of inputs early.
    if !matches!(n & 15, 0 | 1 | 4 | 9) {
        return None;
    }
    let mut r = (n as f64).sqrt() as u128;
    while r.checked_mul(r).map_or(true, |sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).map_or(false, |sq| sq <= n) {
        r += 1;
    }
    if r * r == n {
        Some(r)
    } else {
        None
    }
}

/// Sign of a `BigInt` as -1, 0, or 1.
pub fn int_signum(n: &BigInt) -> i32 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_square() {
        assert_eq!(rat_sqrt(&ratio(169, 4)).unwrap(), ratio(13, 2));
    }

    #[test]
    fn sqrt_of_zero() {
        assert_eq!(rat_sqrt(&rat(0)).unwrap(), rat(0));
    }

    #[test]
    fn sqrt_of_nonsquare() {
        assert_eq!(rat_sqrt(&rat(8)), Err(Error::NotASquare));
    }

    #[test]
    fn sqrt_of_negative() {
        assert_eq!(rat_sqrt(&rat(-4)), Err(Error::NegativeInput));
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_rational("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(ratio(3, 2).to_string(), "3/2");
        assert_eq!(rat(5).to_string(), "5");
        assert_eq!(ratio(-1, 6).to_string(), "-1/6");
    }

    #[test]
    fn heights() {
        assert_eq!(height(&ratio(3, 2)), BigInt::from(3));
        assert_eq!(height(&ratio(-1, 6)), BigInt::from(6));
        assert_eq!(height(&rat(20)), BigInt::from(20));
    }

    #[test]
    fn u128_sqrt() {
        assert_eq!(exact_sqrt_u128(0), Some(0));
        assert_eq!(exact_sqrt_u128(1), Some(1));
        assert_eq!(exact_sqrt_u128(169), Some(13));
        assert_eq!(exact_sqrt_u128(8), None);
        let big = (1u128 << 40) * (1u128 << 40);
        assert_eq!(exact_sqrt_u128(big), Some(1u128 << 40));
        assert_eq!(exact_sqrt_u128(big + 1), None);
    }
}
