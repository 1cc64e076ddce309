//! Truncated formal power series in t with λ-polynomial coefficients.
//!
//! Coefficients are stored raw: `coeffs[k]` is the coefficient of `t^k`,
//! not divided by `k!`. EGF views convert at the boundary through
//! [`TruncatedSeries::from_egf`] and [`TruncatedSeries::egf_coefficients`].

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial_lambda, degenerate_falling, factorial_rat, int, BigRat, LambdaPoly, ZERO};
use crate::numbers::{StirlingKind, StirlingTable};

/// Power series known exactly through `t^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<LambdaPoly>,
}

impl TruncatedSeries {
    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients beyond `order`.
    pub fn new(order: usize, mut coeffs: Vec<LambdaPoly>) -> Self {
        coeffs.resize(order + 1, LambdaPoly::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, LambdaPoly::one())
    }

    pub fn constant(order: usize, c: LambdaPoly) -> Self {
        Self::new(order, vec![c])
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        Self::new(order, vec![LambdaPoly::zero(), LambdaPoly::one()])
    }

    /// Series with coefficients `values[n] / n!`.
    pub fn from_egf(order: usize, values: &[LambdaPoly]) -> Self {
        let coeffs = values
            .iter()
            .take(order + 1)
            .enumerate()
            .map(|(n, v)| v.scale(&(BigRat::one() / factorial_rat(n))))
            .collect();
        Self::new(order, coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LambdaPoly] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero past the order.
    pub fn coeff(&self, k: usize) -> &LambdaPoly {
        self.coeffs.get(k).unwrap_or(&*ZERO)
    }

    /// `n! · [t^n]` for every `n` up to the order.
    pub fn egf_coefficients(&self) -> Vec<LambdaPoly> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&factorial_rat(n)))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order.min(self.order()), self.coeffs.clone())
    }

    pub fn scale(&self, factor: &LambdaPoly) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn scale_rat(&self, factor: &BigRat) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect(),
        }
    }

    /// Multiplies by `t`, dropping the coefficient pushed past the order.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(LambdaPoly::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        Self { coeffs }
    }

    /// `f(-t)`
    pub fn negate_variable(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// d/dt; the result is one order shorter.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::OrderTooSmall { degree: 1, order: 0 });
        }
        Ok(Self {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale_int(k as i64 + 1))
                .collect(),
        })
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut out = Self::one(self.order());
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// Multiplicative inverse; the constant term must be a nonzero rational.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::NotInvertible(self.coeffs[0].to_string()))?;
        let inv_c0 = BigRat::one() / c0;
        let mut out: Vec<LambdaPoly> = vec![LambdaPoly::constant(inv_c0.clone())];
        for n in 1..=self.order() {
            let acc: LambdaPoly = (1..=n).map(|k| &self.coeffs[k] * &out[n - k]).sum();
            out.push(-acc.scale(&inv_c0));
        }
        Ok(Self { coeffs: out })
    }

    /// Classical exponential `exp(f)` of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out = vec![LambdaPoly::one()];
        for n in 1..=self.order() {
            let acc: LambdaPoly = (1..=n)
                .map(|k| &self.coeffs[k].scale_int(k as i64) * &out[n - k])
                .sum();
            out.push(acc.scale(&BigRat::new(1.into(), (n as i64).into())));
        }
        Ok(Self { coeffs: out })
    }

    /// Evaluates `Σ values[k]·self^k` by Horner's scheme. `self` must have
    /// zero constant term so that only `values[0..=order]` matter.
    pub fn eval_polynomial(&self, values: &[LambdaPoly]) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let top = values.len().min(order + 1);
        let mut acc = Self::zero(order);
        for v in values[..top].iter().rev() {
            acc = &acc * self;
            acc.coeffs[0] += v;
        }
        Ok(acc)
    }

    /// Substitution `self(g(t))`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        let order = self.order().min(g.order());
        g.truncate(order).eval_polynomial(&self.coeffs)
    }

    fn zip_with(&self, rhs: &Self, op: impl Fn(&LambdaPoly, &LambdaPoly) -> LambdaPoly) -> Self {
        let order = self.order().min(rhs.order());
        Self {
            coeffs: (0..=order)
                .map(|k| op(&self.coeffs[k], &rhs.coeffs[k]))
                .collect(),
        }
    }
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![LambdaPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Degenerate exponential `e_λ(t)`: coefficient of `t^k` is `(1)_{k,λ}/k!`.
pub fn e_lambda_series(order: usize) -> TruncatedSeries {
    e_lambda_x_series(&BigRat::one(), order)
}

/// `e_λ^x(t)`: coefficient of `t^k` is `(x)_{k,λ}/k!`.
pub fn e_lambda_x_series(x: &BigRat, order: usize) -> TruncatedSeries {
    let values: Vec<LambdaPoly> = (0..=order).map(|k| degenerate_falling(x, k)).collect();
    TruncatedSeries::from_egf(order, &values)
}

/// Degenerate logarithm `log_λ(1+t)`, the compositional inverse of
/// `e_λ(t) - 1`.
pub fn log_lambda_series(order: usize) -> TruncatedSeries {
    let mut coeffs = vec![LambdaPoly::zero()];
    for n in 1..=order {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        coeffs.push(binomial_lambda(n - 1).scale(&BigRat::new(sign.into(), (n as i64).into())));
    }
    TruncatedSeries::new(order, coeffs)
}

/// Applies `((t-1)d/dt)_{n,λ}`: folds `g ↦ (t-1)g' - jλ·g` for
/// `j = 0, …, n-1`. Each step drops one order, so the result has order
/// `f.order() - n`.
pub fn apply_weighted_derivation(f: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    if n > f.order() {
        return Err(Error::OrderTooSmall {
            degree: n,
            order: f.order(),
        });
    }
    let mut g = f.clone();
    for j in 0..n {
        let d = g.derivative()?;
        let weight = LambdaPoly::linear(BigRat::zero(), int(-(j as i64)));
        g = &(&d.shift_up() - &d) + &g.truncate(d.order()).scale(&weight);
    }
    Ok(g)
}

/// `{n k}_λ = n!·[t^n] (e_λ(t)-1)^k / k!`, read off series powers.
pub fn stirling2_from_series(nmax: usize) -> StirlingTable {
    let base = &e_lambda_series(nmax) - &TruncatedSeries::one(nmax);
    StirlingTable::from_series_powers(StirlingKind::SecondDegenerate, nmax, &base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(c: &[i64]) -> LambdaPoly {
        LambdaPoly::from_ints(c)
    }

    fn series(order: usize, c: &[&[i64]]) -> TruncatedSeries {
        TruncatedSeries::new(order, c.iter().map(|x| p(x)).collect())
    }

    #[test]
    fn arithmetic() {
        let prod = &series(2, &[&[1], &[1]]) * &series(2, &[&[1], &[-1]]);
        assert_eq!(prod, series(2, &[&[1], &[], &[-1]]));

        let f = series(3, &[&[1], &[2, 1], &[0, 0, 3]]);
        assert_eq!(&f + &TruncatedSeries::zero(3), f);

        let t = TruncatedSeries::variable(1);
        assert_eq!(&t * &t, TruncatedSeries::zero(1));
    }

    #[test]
    fn mixed_orders_truncate_to_smaller() {
        let a = series(5, &[&[1], &[1], &[1], &[1], &[1], &[1]]);
        let b = series(2, &[&[1], &[1], &[1]]);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a * &b).coeffs(), series(2, &[&[1], &[2], &[3]]).coeffs());
    }

    #[test]
    fn compose_basics() {
        let f = series(3, &[&[1], &[1]]);
        let g = series(3, &[&[], &[], &[1]]);
        assert_eq!(f.compose(&g).unwrap(), series(3, &[&[1], &[], &[1]]));

        let h = series(4, &[&[3], &[1, 2], &[0, 5], &[7], &[1, 1]]);
        assert_eq!(h.compose(&TruncatedSeries::variable(4)).unwrap(), h);

        let bad = series(3, &[&[1], &[1]]);
        assert_eq!(f.compose(&bad), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn e_lambda_coefficients() {
        let e = e_lambda_series(6);
        assert_eq!(e.coeff(0), &LambdaPoly::one());
        assert_eq!(e.coeff(1), &LambdaPoly::one());
        assert_eq!(e.coeff(2), &p(&[1, -1]).scale(&rat(1, 2)));
        for k in 0..=6 {
            assert_eq!(
                e.coeff(k).eval_at(&int(0)),
                BigRat::one() / factorial_rat(k)
            );
        }
    }

    #[test]
    fn e_lambda_x_coefficients() {
        assert_eq!(e_lambda_x_series(&int(1), 8), e_lambda_series(8));
        assert_eq!(e_lambda_x_series(&int(0), 8), TruncatedSeries::one(8));
        assert_eq!(e_lambda_x_series(&int(2), 4).coeff(2), &p(&[2, -1]));
    }

    #[test]
    fn log_lambda_coefficients() {
        let l = log_lambda_series(5);
        assert!(l.coeff(0).is_zero());
        assert_eq!(l.coeff(1), &LambdaPoly::one());
        assert_eq!(l.coeff(2), &p(&[-1, 1]).scale(&rat(1, 2)));
        assert_eq!(l.coeff(3), &(&p(&[2, -1]) * &p(&[1, -1])).scale(&rat(1, 6)));
    }

    #[test]
    fn log_inverts_exp() {
        let n = 12;
        let em1 = &e_lambda_series(n) - &TruncatedSeries::one(n);
        let t = TruncatedSeries::variable(n);
        assert_eq!(log_lambda_series(n).compose(&em1).unwrap(), t);
        let one_plus_t = &TruncatedSeries::one(n) + &t;
        assert_eq!(e_lambda_series(n).compose(&log_lambda_series(n)).unwrap(), one_plus_t);
    }

    #[test]
    fn inverse_and_exp() {
        let n = 8;
        let e = e_lambda_series(n);
        let inv = e.inverse().unwrap();
        assert_eq!(&e * &inv, TruncatedSeries::one(n));

        // exp(t) over the rationals
        let exp_t = TruncatedSeries::variable(n).exp().unwrap();
        for k in 0..=n {
            assert_eq!(exp_t.coeff(k), &LambdaPoly::constant(BigRat::one() / factorial_rat(k)));
        }
        assert!(e.exp().is_err());
        assert!(matches!(
            TruncatedSeries::variable(3).inverse(),
            Err(Error::NotInvertible(_))
        ));
        let lam = TruncatedSeries::constant(3, LambdaPoly::lambda());
        assert!(lam.inverse().is_err());
    }

    #[test]
    fn weighted_derivation_small() {
        let half: Vec<LambdaPoly> = (0..=6)
            .map(|m| LambdaPoly::constant(BigRat::new(1.into(), (1i64 << m).into())))
            .collect();
        let f = TruncatedSeries::new(6, half);
        assert_eq!(apply_weighted_derivation(&f, 0).unwrap(), f);
        let once = apply_weighted_derivation(&f, 1).unwrap();
        assert_eq!(once.order(), 5);
        assert_eq!(once.coeff(0), &LambdaPoly::constant(rat(-1, 2)));
        let twice = apply_weighted_derivation(&f, 2).unwrap();
        assert_eq!(twice.order(), 4);
        assert_eq!(twice.coeff(0), &LambdaPoly::lambda().scale(&rat(1, 2)));
        assert_eq!(
            apply_weighted_derivation(&f, 7),
            Err(Error::OrderTooSmall { degree: 7, order: 6 })
        );
    }

    #[test]
    fn stirling_from_series_small() {
        let s = stirling2_from_series(6);
        for n in 0..=6 {
            assert!(s.entry(n, n).is_one());
        }
        assert_eq!(s.entry(2, 1), &p(&[1, -1]));
        assert_eq!(s.entry(3, 1), &p(&[1, -3, 2]));
    }
}
