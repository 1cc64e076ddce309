//! Exact scalars and polynomials in the degeneracy parameter λ.
//!
//! Scalars are arbitrary-precision rationals, always held in lowest terms
//! with a positive denominator. Every quantity the rest of the crate deals
//! with is a polynomial in λ over those rationals ([`LambdaPoly`]), so the
//! classical limit λ → 0 is just evaluation at zero.

mod falling;
mod poly;

pub use falling::{binomial_lambda, classical_falling, degenerate_falling};
pub use poly::LambdaPoly;
pub(crate) use poly::ZERO;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{CheckedDiv, One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical form.
pub type BigRat = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> BigRat {
    BigRat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(value))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn factorial_rat(n: usize) -> BigRat {
    BigRat::from_integer(factorial(n))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Binary operation on two rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat_arith(a: &BigRat, b: &BigRat, op: RatOp) -> Result<BigRat> {
    match op {
        RatOp::Add => Ok(a + b),
        RatOp::Sub => Ok(a - b),
        RatOp::Mul => Ok(a * b),
        RatOp::Div => a.checked_div(b).ok_or(Error::DivisionByZero),
    }
}

pub fn rat_cmp(a: &BigRat, b: &BigRat) -> Ordering {
    a.cmp(b)
}

/// Renders a rational as `a/b`, or `a` when the denominator is one.
pub fn render_rat(q: &BigRat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses an exact rational written as `p/q` or `p`. Decimal notation is
/// rejected.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let err = || Error::Parse {
        what: "rational",
        input: s.to_string(),
    };
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = parse_integer(num).ok_or_else(err)?;
    let den: BigInt = match den {
        Some(d) => parse_integer(d).ok_or_else(err)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err());
    }
    Ok(BigRat::new(num, den))
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic() {
        assert_eq!(rat_arith(&rat(1, 2), &rat(1, 3), RatOp::Add).unwrap(), rat(5, 6));
        let product = rat_arith(&rat(2, 4), &int(2), RatOp::Mul).unwrap();
        assert_eq!(product, int(1));
        assert!(product.denom().is_one());
        assert_eq!(
            rat_arith(&int(1), &int(0), RatOp::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(rat_cmp(&rat(1, 3), &rat(1, 2)), Ordering::Less);
    }

    #[test]
    fn zero_is_canonical() {
        let z = rat_arith(&rat(1, 7), &rat(1, 7), RatOp::Sub).unwrap();
        assert!(z.numer().is_zero());
        assert!(z.denom().is_one());
    }

    #[test]
    fn rational_text() {
        assert_eq!(render_rat(&rat(-2, 4)), "-1/2");
        assert_eq!(render_rat(&int(7)), "7");
        assert_eq!(parse_rat("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("12").unwrap(), int(12));
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
        assert!(parse_rat("+1").is_err());
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
    }
}
