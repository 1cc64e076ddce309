//! Exact degenerate A- and B-algorithms.
//!
//! Everything is computed symbolically over Q[λ]: degenerate Stirling,
//! Bernoulli, Euler and Bell numbers, the two algorithm tables built from a
//! seed sequence, and the generating-function identities tying seeds to
//! final sequences. The [`audit`] module checks every identity along several
//! independent routes and compares a set of published example matrices
//! against recomputed values.

pub mod algorithms;
pub mod audit;
pub mod cli;
pub mod error;
pub mod exact;
pub mod numbers;
pub mod series;

pub use error::{Error, Result};
pub use exact::{BigRat, LambdaPoly};
pub use series::TruncatedSeries;
