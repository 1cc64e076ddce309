use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{parse_rat, render_rat, BigRat};
use crate::error::{Error, Result};

/// Polynomial in λ with rational coefficients, dense, ascending powers.
///
/// Stored as integer numerators over one shared denominator. In canonical
/// form the denominator is positive and coprime to the content of the
/// numerators, and the numerator list never ends in a zero, so the zero
/// polynomial is an empty list over 1 and structural equality is polynomial
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LambdaPoly {
    num: Vec<BigInt>,
    den: BigInt,
}

pub(crate) static ZERO: LazyLock<LambdaPoly> = LazyLock::new(LambdaPoly::zero);

impl Default for LambdaPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl LambdaPoly {
    fn canonical(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        while num.last().is_some_and(Zero::is_zero) {
            num.pop();
        }
        if num.is_empty() {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -&*c);
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            num.iter_mut().for_each(|c| *c /= &g);
            den /= &g;
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self {
            num: Vec::new(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The indeterminate λ itself.
    pub fn lambda() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_ints(&[c])
    }

    /// `a + b·λ`
    pub fn linear(a: BigRat, b: BigRat) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn from_coeffs(coeffs: Vec<BigRat>) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::canonical(num, den)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::canonical(coeffs.iter().map(|&c| BigInt::from(c)).collect(), BigInt::one())
    }

    /// Coefficients in ascending powers of λ.
    pub fn coeffs(&self) -> Vec<BigRat> {
        (0..self.num.len()).map(|k| self.coeff(k)).collect()
    }

    /// Coefficient of λ^k, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigRat {
        match self.num.get(k) {
            Some(c) => BigRat::new(c.clone(), self.den.clone()),
            None => BigRat::zero(),
        }
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.num.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num.len() == 1 && self.num[0].is_one() && self.den.is_one()
    }

    /// The value as a rational if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.num.len() {
            0 | 1 => Some(self.coeff(0)),
            _ => None,
        }
    }

    /// Substitutes a rational value for λ.
    pub fn eval_at(&self, lambda: &BigRat) -> BigRat {
        let acc = self
            .num
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * lambda + BigRat::from_integer(c.clone()));
        acc / BigRat::from_integer(self.den.clone())
    }

    /// Substitutes λ and returns the (constant) result as a polynomial.
    pub fn substitute(&self, lambda: &BigRat) -> Self {
        Self::constant(self.eval_at(lambda))
    }

    pub fn scale(&self, factor: &BigRat) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self::canonical(
            self.num.iter().map(|c| c * factor.numer()).collect(),
            &self.den * factor.denom(),
        )
    }

    pub fn scale_int(&self, factor: i64) -> Self {
        self.scale(&super::int(factor))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// Re-applies canonicalization; a no-op on every value this type hands out.
    pub fn normalized(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    fn add_scaled(&mut self, other: &Self, sign: bool) {
        if other.is_zero() {
            return;
        }
        let mut num = std::mem::take(&mut self.num);
        let den = if self.den == other.den {
            std::mem::take(&mut self.den)
        } else {
            let g = self.den.gcd(&other.den);
            let mine = &other.den / &g;
            num.iter_mut().for_each(|c| *c *= &mine);
            &self.den * mine
        };
        let theirs = &den / &other.den;
        if num.len() < other.num.len() {
            num.resize(other.num.len(), BigInt::zero());
        }
        for (a, b) in num.iter_mut().zip(&other.num) {
            let b = b * &theirs;
            if sign {
                *a += b;
            } else {
                *a -= b;
            }
        }
        *self = Self::canonical(num, den);
    }
}

impl AddAssign<&LambdaPoly> for LambdaPoly {
    fn add_assign(&mut self, rhs: &LambdaPoly) {
        self.add_scaled(rhs, true);
    }
}

impl SubAssign<&LambdaPoly> for LambdaPoly {
    fn sub_assign(&mut self, rhs: &LambdaPoly) {
        self.add_scaled(rhs, false);
    }
}

impl Add<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        let mut num = vec![BigInt::zero(); self.num.len() + rhs.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                num[i + j] += a * b;
            }
        }
        LambdaPoly::canonical(num, &self.den * &rhs.den)
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($imp:ident $method:ident),*) => {$(
        impl $imp<LambdaPoly> for LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: LambdaPoly) -> LambdaPoly {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&LambdaPoly> for LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: &LambdaPoly) -> LambdaPoly {
                (&self).$method(rhs)
            }
        }
        impl $imp<LambdaPoly> for &LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: LambdaPoly) -> LambdaPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for LambdaPoly {
    fn sum<I: Iterator<Item = LambdaPoly>>(iter: I) -> Self {
        iter.fold(LambdaPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for LambdaPoly {
    fn product<I: Iterator<Item = LambdaPoly>>(iter: I) -> Self {
        iter.fold(LambdaPoly::one(), |acc, p| &acc * &p)
    }
}

impl From<BigRat> for LambdaPoly {
    fn from(c: BigRat) -> Self {
        Self::constant(c)
    }
}

/// Canonical rendering: ascending powers joined by `" + "`, each term
/// `c`, `c*L` or `c*L^k`, with `c` rendered as `a/b` (or `a` when integral).
impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            f.write_str(&render_rat(c))?;
            match k {
                0 => {}
                1 => f.write_str("*L")?,
                _ => write!(f, "*L^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LambdaPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "polynomial",
            input: s.to_string(),
        };
        let mut coeffs: Vec<BigRat> = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let (coeff, power) = match term.split_once("*L") {
                None => (term, 0usize),
                Some((c, "")) => (c, 1),
                Some((c, rest)) => {
                    let exp = rest.strip_prefix('^').ok_or_else(err)?;
                    if exp.is_empty() || !exp.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(err());
                    }
                    (c, exp.parse().map_err(|_| err())?)
                }
            };
            let coeff = parse_rat(coeff).map_err(|_| err())?;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigRat::zero());
            }
            coeffs[power] += coeff;
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn p(c: &[i64]) -> LambdaPoly {
        LambdaPoly::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
    }

    #[test]
    fn eval_constant_term() {
        let q = p(&[1, 0, -1]).scale(&rat(1, 6));
        assert_eq!(q.eval_at(&int(0)), rat(1, 6));
        assert_eq!(q.eval_at(&int(1)), int(0));
    }

    #[test]
    fn cancellation_is_canonical() {
        let l = LambdaPoly::lambda();
        let z = &l + &(-&l);
        assert!(z.is_zero());
        assert!(z.coeffs().is_empty());
        assert_eq!(z.degree(), -1);
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn scale_by_zero_is_zero() {
        assert!(p(&[3, 4]).scale(&int(0)).is_zero());
        assert_eq!(p(&[0, 0, 0]), LambdaPoly::zero());
    }

    #[test]
    fn canonical_rendering() {
        let q = LambdaPoly::linear(rat(-1, 2), rat(1, 2));
        assert_eq!(q.to_string(), "-1/2 + 1/2*L");
        assert_eq!(p(&[1, -1]).to_string(), "1 + -1*L");
        let b2 = p(&[1, 0, -1]).scale(&rat(1, 6));
        assert_eq!(b2.to_string(), "1/6 + -1/6*L^2");
        assert_eq!(LambdaPoly::lambda().scale(&rat(1, 2)).to_string(), "1/2*L");
        assert_eq!(p(&[0, 0, 0, 5]).to_string(), "5*L^3");
    }

    #[test]
    fn parse_rendered() {
        for s in ["0", "1", "-1/2 + 1/2*L", "1/6 + -1/6*L^2", "5*L^3", "3 + -1*L^12"] {
            let q: LambdaPoly = s.parse().unwrap();
            assert_eq!(q.to_string(), s);
        }
        assert_eq!("2*L + 1".parse::<LambdaPoly>().unwrap(), p(&[1, 2]));
        assert_eq!("1 + 1".parse::<LambdaPoly>().unwrap(), p(&[2]));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "L", "1*X", "1*L^", "1*L^-2", "0.5", "1 + ", "1/0*L"] {
            assert!(s.parse::<LambdaPoly>().is_err(), "{s}");
        }
    }
}
