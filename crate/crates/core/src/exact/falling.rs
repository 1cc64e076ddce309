use num_traits::One;

use super::{factorial_rat, int, BigRat, LambdaPoly};

/// `C(k-λ, k) = (k-λ)(k-1-λ)···(1-λ)/k!`
pub fn binomial_lambda(k: usize) -> LambdaPoly {
    let numer: LambdaPoly = (1..=k)
        .map(|j| LambdaPoly::linear(int(j as i64), -BigRat::one()))
        .product();
    numer.scale(&(BigRat::one() / factorial_rat(k)))
}

/// Degenerate falling factorial `(x)_{n,λ} = x(x-λ)···(x-(n-1)λ)`.
pub fn degenerate_falling(x: &BigRat, n: usize) -> LambdaPoly {
    (0..n)
        .map(|i| LambdaPoly::linear(x.clone(), int(-(i as i64))))
        .product()
}

/// Classical falling factorial `(p)_n = p(p-1)···(p-n+1)` of a λ-polynomial.
pub fn classical_falling(p: &LambdaPoly, n: usize) -> LambdaPoly {
    (0..n)
        .map(|i| p - &LambdaPoly::from_int(i as i64))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(c: &[i64]) -> LambdaPoly {
        LambdaPoly::from_ints(c)
    }

    #[test]
    fn binomial_lambda_small() {
        assert_eq!(binomial_lambda(0), LambdaPoly::one());
        assert_eq!(binomial_lambda(1), p(&[1, -1]));
        assert_eq!(binomial_lambda(2), p(&[2, -3, 1]).scale(&rat(1, 2)));
        for k in 1..=12 {
            assert_eq!(binomial_lambda(k).degree(), k as isize);
        }
    }

    #[test]
    fn binomial_lambda_classical_limit() {
        for k in 0..=30 {
            assert_eq!(binomial_lambda(k).eval_at(&int(0)), int(1), "k={k}");
        }
    }

    #[test]
    fn degenerate_falling_small() {
        assert_eq!(degenerate_falling(&int(1), 0), LambdaPoly::one());
        assert_eq!(degenerate_falling(&int(1), 2), p(&[1, -1]));
        assert_eq!(degenerate_falling(&int(1), 3), p(&[1, -3, 2]));
    }

    #[test]
    fn degenerate_falling_classical_limit() {
        for x in [rat(1, 2), rat(-3, 4), int(5), int(0)] {
            let mut power = BigRat::one();
            for n in 0..=20 {
                assert_eq!(degenerate_falling(&x, n).eval_at(&int(0)), power);
                power *= &x;
            }
        }
    }

    #[test]
    fn classical_falling_small() {
        assert_eq!(classical_falling(&LambdaPoly::lambda(), 0), LambdaPoly::one());
        assert_eq!(classical_falling(&p(&[2, -1]), 2), &p(&[2, -1]) * &p(&[1, -1]));
        assert_eq!(classical_falling(&p(&[1, -1]), 1), p(&[1, -1]));
    }
}
