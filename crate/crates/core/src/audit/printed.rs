use std::fmt;

use crate::algorithms::SequenceSpec;
use crate::exact::{rat, LambdaPoly};

/// The three published B-algorithm example matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixId {
    BernoulliB,
    HalfPowersB,
    BellB,
}

impl MatrixId {
    pub const ALL: [MatrixId; 3] = [MatrixId::BernoulliB, MatrixId::HalfPowersB, MatrixId::BellB];

    pub fn name(self) -> &'static str {
        match self {
            MatrixId::BernoulliB => "bernoulli_B",
            MatrixId::HalfPowersB => "half_powers_B",
            MatrixId::BellB => "bell_B",
        }
    }

    /// The seed the matrix is stated to start from.
    pub fn seed(self) -> SequenceSpec {
        match self {
            MatrixId::BernoulliB => SequenceSpec::BernoulliSeed,
            MatrixId::HalfPowersB => SequenceSpec::HalfPowers,
            MatrixId::BellB => SequenceSpec::BellSeed,
        }
    }
}

impl fmt::Display for MatrixId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedEntry {
    pub matrix: MatrixId,
    pub row: usize,
    pub col: usize,
    pub printed: LambdaPoly,
}

fn p(c: &[i64]) -> LambdaPoly {
    LambdaPoly::from_ints(c)
}

fn frac(num: i64, den: i64) -> LambdaPoly {
    LambdaPoly::constant(rat(num, den))
}

fn product(factors: &[&[i64]], num: i64, den: i64) -> LambdaPoly {
    let prod: LambdaPoly = factors.iter().map(|f| p(f)).product();
    prod.scale(&rat(num, den))
}

/// Every explicitly displayed entry of the published matrices, as printed.
/// Factors are written as ascending λ-coefficients, so `[1, -1]` is `1-λ`.
pub fn printed_corpus() -> Vec<PrintedEntry> {
    use MatrixId::*;
    let one_minus = [1, -1];
    let two_minus = [2, -1];
    let lam = [0, 1];
    let cells: Vec<(MatrixId, usize, usize, LambdaPoly)> = vec![
        (BernoulliB, 0, 0, p(&[1])),
        (BernoulliB, 0, 1, product(&[&one_minus], 1, 2)),
        (BernoulliB, 0, 2, product(&[&two_minus, &one_minus], 1, 6)),
        (BernoulliB, 1, 0, product(&[&one_minus], -1, 2)),
        (BernoulliB, 1, 1, product(&[&one_minus, &[-1, 2]], 1, 6)),
        (BernoulliB, 1, 2, product(&[&two_minus, &one_minus, &[-1, 3]], 1, 24)),
        (BernoulliB, 2, 0, product(&[&[1, 0, -1]], 1, 6)),
        (BernoulliB, 2, 1, product(&[&lam, &one_minus, &one_minus], -1, 12)),
        (BernoulliB, 2, 2, product(&[&two_minus, &one_minus, &[1, -6, 27]], -1, 120)),
        (BernoulliB, 3, 0, product(&[&lam, &one_minus, &one_minus, &[1, -2]], 1, 4)),
        (BernoulliB, 3, 1, product(&[&one_minus, &[-2, 18, -11, 37]], 1, 60)),
        (HalfPowersB, 0, 0, frac(1, 1)),
        (HalfPowersB, 0, 1, frac(1, 2)),
        (HalfPowersB, 0, 2, frac(1, 4)),
        (HalfPowersB, 0, 3, frac(1, 8)),
        (HalfPowersB, 0, 4, frac(1, 16)),
        (HalfPowersB, 1, 0, frac(-1, 2)),
        (HalfPowersB, 1, 1, frac(0, 1)),
        (HalfPowersB, 1, 2, frac(-1, 8)),
        (HalfPowersB, 1, 3, frac(1, 8)),
        (HalfPowersB, 2, 0, frac(0, 1)),
        (HalfPowersB, 2, 1, frac(1, 4)),
        (HalfPowersB, 2, 2, product(&[&[-5, 1]], 1, 8)),
        (HalfPowersB, 3, 0, frac(1, 4)),
        (HalfPowersB, 3, 1, product(&[&[8, -9]], 1, 12)),
        (BellB, 0, 0, p(&[0])),
        (BellB, 0, 1, p(&[-1])),
        (BellB, 0, 2, p(&[1])),
        (BellB, 0, 3, p(&[-1])),
        (BellB, 0, 4, p(&[1])),
        (BellB, 1, 0, p(&[1])),
        (BellB, 1, 1, p(&[-2])),
        (BellB, 1, 2, p(&[5])),
        (BellB, 1, 3, p(&[-7])),
        (BellB, 1, 4, p(&[9])),
        (BellB, 2, 0, p(&[2, -1])),
        (BellB, 2, 1, p(&[-12, 2])),
        (BellB, 2, 2, p(&[31, -5])),
        (BellB, 2, 3, p(&[-57, 7])),
        (BellB, 3, 0, p(&[6, -8, 2])),
        (BellB, 3, 1, p(&[-74, 36, -4])),
    ];
    cells
        .into_iter()
        .map(|(matrix, row, col, printed)| PrintedEntry {
            matrix,
            row,
            col,
            printed,
        })
        .collect()
}
