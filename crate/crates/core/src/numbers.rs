//! Degenerate Stirling numbers of both kinds and the degenerate Bernoulli,
//! Euler and Bell numbers built from them, plus classical (λ = 0) oracles
//! that share no code with the λ paths.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{
    binomial, binomial_lambda, degenerate_falling, factorial_rat, int, rat, BigRat, LambdaPoly,
    ZERO,
};
use crate::series::{log_lambda_series, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    SecondDegenerate,
    FirstDegenerate,
}

/// Triangle of degenerate Stirling numbers, `entry(n, k)` for
/// `0 <= k <= n <= nmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<LambdaPoly>>,
}

impl StirlingTable {
    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn nmax(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<LambdaPoly>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[LambdaPoly] {
        &self.rows[n]
    }

    /// Entry `(n, k)`, zero when `k > n`.
    ///
    /// Panics if `n > nmax`.
    pub fn entry(&self, n: usize, k: usize) -> &LambdaPoly {
        self.rows[n].get(k).unwrap_or(&*ZERO)
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&LambdaPoly> {
        self.rows.get(n).map(|row| row.get(k).unwrap_or(&*ZERO))
    }

    /// `entry(n, k) = n!/k! · [t^n] base^k`, for a base series of valuation 1.
    pub(crate) fn from_series_powers(
        kind: StirlingKind,
        nmax: usize,
        base: &TruncatedSeries,
    ) -> Self {
        let mut rows: Vec<Vec<LambdaPoly>> = (0..=nmax).map(|n| Vec::with_capacity(n + 1)).collect();
        let mut power = TruncatedSeries::one(nmax);
        for k in 0..=nmax {
            let inv_k = BigRat::one() / factorial_rat(k);
            for (n, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(power.coeff(n).scale(&(factorial_rat(n) * &inv_k)));
            }
            power = &power * base;
        }
        Self { kind, rows }
    }

    pub(crate) fn from_rows(kind: StirlingKind, rows: Vec<Vec<LambdaPoly>>) -> Self {
        Self { kind, rows }
    }
}

/// `{n k}_λ` by the row recurrence `{n+1 k} = {n k-1} + (k - nλ){n k}`.
pub fn stirling2_table(nmax: usize) -> StirlingTable {
    let mut rows = vec![vec![LambdaPoly::one()]];
    for n in 0..nmax {
        let prev = &rows[n];
        let next: Vec<LambdaPoly> = (0..=n + 1)
            .map(|k| {
                let mut v = if k > 0 { prev[k - 1].clone() } else { LambdaPoly::zero() };
                if k <= n {
                    let weight = LambdaPoly::linear(int(k as i64), int(-(n as i64)));
                    v += &(&weight * &prev[k]);
                }
                v
            })
            .collect();
        rows.push(next);
    }
    StirlingTable::from_rows(StirlingKind::SecondDegenerate, rows)
}

/// `S_{1,λ}(n,k) = n!·[t^n] (log_λ(1+t))^k / k!`.
pub fn stirling1_table(nmax: usize) -> StirlingTable {
    StirlingTable::from_series_powers(StirlingKind::FirstDegenerate, nmax, &log_lambda_series(nmax))
}

/// Independent route to `{n k}_λ`: expand `(x)_{n,λ}` as a polynomial in x
/// and peel off the falling-factorial basis `(x)_k` by synthetic division
/// by `x - k`.
pub fn stirling2_basis_expansion(nmax: usize) -> StirlingTable {
    let mut rows = Vec::with_capacity(nmax + 1);
    // (x)_{n,λ} as coefficients in x, each a λ-polynomial.
    let mut in_x: Vec<LambdaPoly> = vec![LambdaPoly::one()];
    for n in 0..=nmax {
        let mut rest = in_x.clone();
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let (quotient, remainder) = divide_by_root(&rest, k as i64);
            row.push(remainder);
            rest = quotient;
        }
        rows.push(row);
        // multiply by (x - nλ)
        let shift = LambdaPoly::linear(BigRat::zero(), int(-(n as i64)));
        let mut next = vec![LambdaPoly::zero(); in_x.len() + 1];
        for (i, c) in in_x.iter().enumerate() {
            next[i + 1] += c;
            next[i] += &(c * &shift);
        }
        in_x = next;
    }
    StirlingTable::from_rows(StirlingKind::SecondDegenerate, rows)
}

/// Divides `Σ p_i x^i` by `x - root`, returning quotient and remainder.
fn divide_by_root(p: &[LambdaPoly], root: i64) -> (Vec<LambdaPoly>, LambdaPoly) {
    if p.is_empty() {
        return (Vec::new(), LambdaPoly::zero());
    }
    let root = int(root);
    let mut quotient = vec![LambdaPoly::zero(); p.len() - 1];
    let mut carry = LambdaPoly::zero();
    for i in (0..p.len()).rev() {
        let value = &p[i] + &carry.scale(&root);
        if i == 0 {
            return (quotient, value);
        }
        quotient[i - 1] = value.clone();
        carry = value;
    }
    unreachable!()
}

fn signed_factorial(k: usize) -> BigRat {
    let f = factorial_rat(k);
    if k % 2 == 1 {
        -f
    } else {
        f
    }
}

/// `β_{n,λ} = Σ_k (-1)^k k! {n k}_λ C(k-λ,k)/(k+1)`, using a prebuilt table.
pub fn bernoulli_with(s2: &StirlingTable, n: usize) -> LambdaPoly {
    (0..=n)
        .map(|k| {
            let w = signed_factorial(k) * rat(1, k as i64 + 1);
            &s2.entry(n, k).scale(&w) * &binomial_lambda(k)
        })
        .sum()
}

/// `ℰ_{n,λ} = Σ_k (-1)^k k! {n k}_λ (1/2)^k`
pub fn euler_with(s2: &StirlingTable, n: usize) -> LambdaPoly {
    (0..=n)
        .map(|k| {
            let w = signed_factorial(k) * BigRat::new(BigInt::one(), BigInt::one() << k);
            s2.entry(n, k).scale(&w)
        })
        .sum()
}

/// `φ_{n,λ}(x) = Σ_k {n k}_λ x^k`
pub fn bell_with(s2: &StirlingTable, n: usize, x: &BigRat) -> LambdaPoly {
    let mut power = BigRat::one();
    let mut acc = LambdaPoly::zero();
    for k in 0..=n {
        acc += &s2.entry(n, k).scale(&power);
        power *= x;
    }
    acc
}

/// `Σ_k C(n,k) (x)_{n-k,λ} numbers[k]`, the Appell-type convolution shared by
/// the degenerate Bernoulli and Euler polynomials.
pub fn appell_convolution(numbers: &[LambdaPoly], n: usize, x: &BigRat) -> LambdaPoly {
    (0..=n)
        .map(|k| {
            let c = BigRat::from_integer(binomial(n, k));
            &degenerate_falling(x, n - k).scale(&c) * &numbers[k]
        })
        .sum()
}

pub fn bernoulli_deg(n: usize) -> LambdaPoly {
    bernoulli_with(&stirling2_table(n), n)
}

pub fn euler_deg(n: usize) -> LambdaPoly {
    euler_with(&stirling2_table(n), n)
}

pub fn bell_deg(n: usize, x: &BigRat) -> LambdaPoly {
    bell_with(&stirling2_table(n), n, x)
}

/// `β_{0..=nmax, λ}`
pub fn bernoulli_sequence(nmax: usize) -> Vec<LambdaPoly> {
    let s2 = stirling2_table(nmax);
    (0..=nmax).map(|n| bernoulli_with(&s2, n)).collect()
}

/// `ℰ_{0..=nmax, λ}`
pub fn euler_sequence(nmax: usize) -> Vec<LambdaPoly> {
    let s2 = stirling2_table(nmax);
    (0..=nmax).map(|n| euler_with(&s2, n)).collect()
}

pub fn bell_sequence(nmax: usize, x: &BigRat) -> Vec<LambdaPoly> {
    let s2 = stirling2_table(nmax);
    (0..=nmax).map(|n| bell_with(&s2, n, x)).collect()
}

/// Degenerate Bernoulli polynomial `β_{n,λ}(x)`.
pub fn bernoulli_deg_poly(n: usize, x: &BigRat) -> LambdaPoly {
    appell_convolution(&bernoulli_sequence(n), n, x)
}

/// Degenerate Euler polynomial `ℰ_{n,λ}(x)`.
pub fn euler_deg_poly(n: usize, x: &BigRat) -> LambdaPoly {
    appell_convolution(&euler_sequence(n), n, x)
}

/// Classical values at index n: Bernoulli `B_n` (with `B_1 = -1/2`), Euler
/// `E_n = E_n(0)` from `2/(e^t+1)`, and the Bell number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalValues {
    pub bernoulli: BigRat,
    pub euler: BigRat,
    pub bell: BigInt,
}

pub fn classical_oracles(n: usize) -> ClassicalValues {
    ClassicalValues {
        bernoulli: classical_bernoulli(n).swap_remove(n),
        euler: classical_euler(n).swap_remove(n),
        bell: classical_bell(n).swap_remove(n),
    }
}

/// `B_0..=B_nmax` from `Σ_{k=0}^{n} C(n+1,k) B_k = 0`.
pub fn classical_bernoulli(nmax: usize) -> Vec<BigRat> {
    let mut b: Vec<BigRat> = Vec::with_capacity(nmax + 1);
    b.push(BigRat::one());
    for n in 1..=nmax {
        let s: BigRat = (0..n)
            .map(|k| BigRat::from_integer(binomial(n + 1, k)) * &b[k])
            .sum();
        b.push(-s / BigRat::from_integer(BigInt::from(n + 1)));
    }
    b
}

/// `E_0..=E_nmax` as `n!·[t^n] 2/(e^t+1)`, inverting `(e^t+1)/2` over the
/// rationals.
pub fn classical_euler(nmax: usize) -> Vec<BigRat> {
    let half_sum: Vec<BigRat> = (0..=nmax)
        .map(|k| {
            let c = BigRat::one() / factorial_rat(k) / int(2);
            if k == 0 {
                BigRat::one()
            } else {
                c
            }
        })
        .collect();
    let mut inv: Vec<BigRat> = vec![BigRat::one()];
    for n in 1..=nmax {
        let s: BigRat = (1..=n).map(|k| &half_sum[k] * &inv[n - k]).sum();
        inv.push(-s);
    }
    inv.into_iter()
        .enumerate()
        .map(|(n, c)| c * factorial_rat(n))
        .collect()
}

/// Bell numbers `Bell_0..=Bell_nmax` from the Bell triangle.
pub fn classical_bell(nmax: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for _ in 0..nmax {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().cloned().unwrap_or_else(BigInt::zero));
        for v in &row {
            let last = next.last().unwrap().clone();
            next.push(last + v);
        }
        out.push(next[0].clone());
        row = next;
    }
    out
}

/// Classical `Σ_k C(n,k) x^{n-k} c_k`, the λ = 0 Appell polynomial at x.
pub fn classical_appell(numbers: &[BigRat], n: usize, x: &BigRat) -> BigRat {
    let mut acc = BigRat::zero();
    for k in 0..=n {
        let mut power = BigRat::one();
        for _ in 0..n - k {
            power *= x;
        }
        acc += BigRat::from_integer(binomial(n, k)) * power * &numbers[k];
    }
    acc
}
