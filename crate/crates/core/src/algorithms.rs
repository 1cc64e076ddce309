//! Degenerate A- and B-algorithm tables.
//!
//! A table starts from a seed sequence in row 0 and each following row is
//! one column narrower:
//!
//! * B: `a(n,m) = (m - (n-1)λ)·a(n-1,m) - (m+1)·a(n-1,m+1)`
//! * A: `b(n,m) = (m+1 - (n-1)λ)·b(n-1,m) - (m+1)·b(n-1,m+1)`
//!
//! Column 0 is the final sequence. Its EGF is tied to the seed's OGF `F` by
//! `F(1 - e_λ(t))` for B and `e_λ(t)·F(1 - e_λ(t))` for A.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial_lambda, factorial_rat, int, BigRat, LambdaPoly};
use crate::numbers::{stirling2_table, StirlingTable};
use crate::series::{e_lambda_series, log_lambda_series, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmKind {
    A,
    B,
}

impl fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgorithmKind::A => "A",
            AlgorithmKind::B => "B",
        })
    }
}

impl AlgorithmKind {
    /// Weight on `prev(m)` when building row `n`.
    fn weight(self, n: usize, m: usize) -> LambdaPoly {
        let base = match self {
            AlgorithmKind::B => m,
            AlgorithmKind::A => m + 1,
        };
        LambdaPoly::linear(int(base as i64), int(-(n as i64 - 1)))
    }
}

/// Seed (row 0) of an algorithm table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceSpec {
    /// `C(n-λ, n)/(n+1)`
    BernoulliSeed,
    /// `(1/2)^n`
    HalfPowers,
    /// `0` at `n = 0`, then `(-1)^n/n!`
    BellSeed,
    Custom(Vec<LambdaPoly>),
}

impl SequenceSpec {
    /// The three seeds with closed forms.
    pub const SHIPPED: [SequenceSpec; 3] = [
        SequenceSpec::BernoulliSeed,
        SequenceSpec::HalfPowers,
        SequenceSpec::BellSeed,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SequenceSpec::BernoulliSeed => "bernoulli_seed",
            SequenceSpec::HalfPowers => "half_powers",
            SequenceSpec::BellSeed => "bell_seed",
            SequenceSpec::Custom(_) => "custom",
        }
    }

    pub fn value(&self, n: usize) -> Result<LambdaPoly> {
        Ok(match self {
            SequenceSpec::BernoulliSeed => {
                binomial_lambda(n).scale(&BigRat::new(1.into(), (n as i64 + 1).into()))
            }
            SequenceSpec::HalfPowers => {
                LambdaPoly::constant(BigRat::new(1.into(), num_bigint::BigInt::one() << n))
            }
            SequenceSpec::BellSeed if n == 0 => LambdaPoly::zero(),
            SequenceSpec::BellSeed => {
                let sign = if n % 2 == 0 { int(1) } else { int(-1) };
                LambdaPoly::constant(sign / factorial_rat(n))
            }
            SequenceSpec::Custom(values) => {
                values.get(n).cloned().ok_or(Error::SeedTooShort {
                    required: n + 1,
                    got: values.len(),
                })?
            }
        })
    }

    /// Entries `0..count`.
    pub fn values(&self, count: usize) -> Result<Vec<LambdaPoly>> {
        if let SequenceSpec::Custom(values) = self {
            if values.len() < count {
                return Err(Error::SeedTooShort {
                    required: count,
                    got: values.len(),
                });
            }
        }
        (0..count).map(|n| self.value(n)).collect()
    }
}

/// Trapezoidal table: row `n` holds columns `0..=width-n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgorithmTable {
    kind: AlgorithmKind,
    seed: SequenceSpec,
    rows: Vec<Vec<LambdaPoly>>,
}

impl AlgorithmTable {
    pub fn kind(&self) -> AlgorithmKind {
        self.kind
    }

    pub fn seed(&self) -> &SequenceSpec {
        &self.seed
    }

    /// Highest seed index used.
    pub fn width(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<LambdaPoly>] {
        &self.rows
    }

    pub fn entry(&self, n: usize, m: usize) -> Option<&LambdaPoly> {
        self.rows.get(n).and_then(|row| row.get(m))
    }

    /// Column 0, one entry per row.
    pub fn final_sequence(&self) -> Vec<LambdaPoly> {
        self.rows.iter().map(|row| row[0].clone()).collect()
    }

    /// Row `n` as the series `Σ_m entry(n,m) t^m`, of order `width - n`.
    pub fn row_series(&self, n: usize) -> TruncatedSeries {
        let row = &self.rows[n];
        TruncatedSeries::new(row.len() - 1, row.clone())
    }

    /// Evaluates every entry at a rational λ.
    pub fn substitute(&self, lambda: &BigRat) -> Vec<Vec<LambdaPoly>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|v| v.substitute(lambda)).collect())
            .collect()
    }
}

/// Builds rows `0..=rows` from seed entries `0..=rows`.
pub fn build_table(kind: AlgorithmKind, seed: &SequenceSpec, rows: usize) -> Result<AlgorithmTable> {
    build_table_with_width(kind, seed, rows, rows)
}

/// Like [`build_table`] but reads seed entries `0..=width` (`width >= rows`).
pub fn build_table_with_width(
    kind: AlgorithmKind,
    seed: &SequenceSpec,
    rows: usize,
    width: usize,
) -> Result<AlgorithmTable> {
    let width = width.max(rows);
    let mut table = vec![seed.values(width + 1)?];
    for n in 1..=rows {
        let prev = &table[n - 1];
        let next: Vec<LambdaPoly> = (0..=width - n)
            .map(|m| {
                let keep = &kind.weight(n, m) * &prev[m];
                &keep - &prev[m + 1].scale_int(m as i64 + 1)
            })
            .collect();
        table.push(next);
    }
    Ok(AlgorithmTable {
        kind,
        seed: seed.clone(),
        rows: table,
    })
}

/// Final-sequence entry `n` from the Stirling closed forms:
///
/// * B: `Σ_k (-1)^k k! {n k}_λ seed(k)`
/// * A: `Σ_k (-1)^k k! ({n+1 k+1}_λ + nλ{n k+1}_λ) seed(k)`
pub fn closed_form_final(kind: AlgorithmKind, seed: &SequenceSpec, n: usize) -> Result<LambdaPoly> {
    let s2 = stirling2_table(n + 1);
    closed_form_final_with(&s2, kind, &seed.values(n + 1)?, n)
}

/// [`closed_form_final`] against a prebuilt table (`nmax >= n + 1` for A,
/// `>= n` for B) and seed values `0..=n`.
pub fn closed_form_final_with(
    s2: &StirlingTable,
    kind: AlgorithmKind,
    seed: &[LambdaPoly],
    n: usize,
) -> Result<LambdaPoly> {
    if seed.len() <= n {
        return Err(Error::SeedTooShort {
            required: n + 1,
            got: seed.len(),
        });
    }
    let n_lambda = LambdaPoly::linear(BigRat::zero(), int(n as i64));
    Ok((0..=n)
        .map(|k| {
            let coeff = match kind {
                AlgorithmKind::B => s2.entry(n, k).clone(),
                AlgorithmKind::A => s2.entry(n + 1, k + 1) + &(&n_lambda * s2.entry(n, k + 1)),
            };
            let f = factorial_rat(k);
            let signed = if k % 2 == 1 { -f } else { f };
            &coeff.scale(&signed) * &seed[k]
        })
        .sum())
}

/// Two series that an identity claims are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPair {
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
}

impl SeriesPair {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// EGF of the final sequence (lhs) against the transformed seed OGF (rhs):
/// `F(1 - e_λ(t))` for B, `e_λ(t)·G(1 - e_λ(t))` for A.
pub fn transform_check(kind: AlgorithmKind, seed: &SequenceSpec, order: usize) -> Result<SeriesPair> {
    let finals = build_table(kind, seed, order)?.final_sequence();
    let lhs = TruncatedSeries::from_egf(order, &finals);
    let e = e_lambda_series(order);
    let u = &TruncatedSeries::one(order) - &e;
    let mut rhs = u.eval_polynomial(&seed.values(order + 1)?)?;
    if kind == AlgorithmKind::A {
        rhs = &e * &rhs;
    }
    Ok(SeriesPair { lhs, rhs })
}

/// Seed side (lhs) against the final EGF substituted at `log_λ(1-t)` (rhs):
/// `F(t)` for B, `(1-t)·G(t)` for A.
pub fn inverse_transform_check(
    kind: AlgorithmKind,
    seed: &SequenceSpec,
    order: usize,
) -> Result<SeriesPair> {
    let mut lhs = TruncatedSeries::new(order, seed.values(order + 1)?);
    if kind == AlgorithmKind::A {
        let one_minus_t = &TruncatedSeries::one(order) - &TruncatedSeries::variable(order);
        lhs = &one_minus_t * &lhs;
    }
    let finals = build_table(kind, seed, order)?.final_sequence();
    let egf = TruncatedSeries::from_egf(order, &finals);
    let rhs = egf.compose(&log_lambda_series(order).negate_variable())?;
    Ok(SeriesPair { lhs, rhs })
}

/// Classical (λ-free) table over the rationals:
///
/// * B: `a(n,m) = m·a(n-1,m) - (m+1)·a(n-1,m+1)`
/// * A: `b(n,m) = (m+1)·(b(n-1,m) - b(n-1,m+1))`
pub fn classical_table(kind: AlgorithmKind, seed: &[BigRat], rows: usize) -> Vec<Vec<BigRat>> {
    let width = seed.len() - 1;
    let rows = rows.min(width);
    let mut table = vec![seed.to_vec()];
    for n in 1..=rows {
        let prev = &table[n - 1];
        let next = (0..=width - n)
            .map(|m| {
                let mm = int(m as i64);
                let m1 = int(m as i64 + 1);
                match kind {
                    AlgorithmKind::B => &mm * &prev[m] - &m1 * &prev[m + 1],
                    AlgorithmKind::A => &m1 * (&prev[m] - &prev[m + 1]),
                }
            })
            .collect();
        table.push(next);
    }
    table
}
