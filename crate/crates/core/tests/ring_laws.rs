use degen::exact::{rat, BigRat};
use degen::LambdaPoly;
use proptest::prelude::*;

fn arb_poly() -> impl Strategy<Value = LambdaPoly> {
    (prop::collection::vec(-9i64..=9, 0..=6), 1i64..=6).prop_map(|(coeffs, den)| {
        LambdaPoly::from_ints(&coeffs).scale(&rat(1, den))
    })
}

fn arb_rat() -> impl Strategy<Value = BigRat> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn addition_commutes_and_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a - &a, LambdaPoly::zero());
    }

    #[test]
    fn multiplication_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LambdaPoly::one(), a.clone());
    }

    #[test]
    fn canonical_form_is_idempotent(a in arb_poly(), b in arb_poly()) {
        let sum = &a + &b;
        prop_assert_eq!(sum.normalized(), sum.clone());
        prop_assert_eq!(sum.normalized().normalized(), sum.normalized());
    }

    #[test]
    fn render_parse_round_trip(a in arb_poly()) {
        let text = a.to_string();
        let back: LambdaPoly = text.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in arb_poly(), b in arb_poly(), q in arb_rat()) {
        prop_assert_eq!((&a * &b).eval_at(&q), a.eval_at(&q) * b.eval_at(&q));
        prop_assert_eq!((&a + &b).eval_at(&q), a.eval_at(&q) + b.eval_at(&q));
    }
}
