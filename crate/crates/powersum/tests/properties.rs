//! Property-based invariants over the exact-arithmetic layer and the
//! generating-function pipeline.

use proptest::prelude::*;

use powersum::{
    binomial, binomial_poly, naive_power_sum, power_genfun, power_sum_formula, rising_genfun,
    BigInt, BigRational, GenFun, IntPoly, InvPermMatrix, PermMatrix, PowerSumFormula,
};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-100i64..=100, 0..=9)
        .prop_map(|cs| IntPoly::from_coeffs(cs.into_iter().map(BigInt::from).collect()))
}

proptest! {
    // Ring laws on small dense polynomials.
    #[test]
    fn poly_mul_distributes_over_add(p in int_poly(), q in int_poly(), r in int_poly()) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
    }

    #[test]
    fn poly_mul_is_commutative_and_associative(p in int_poly(), q in int_poly(), r in int_poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    // Evaluation is a ring homomorphism.
    #[test]
    fn poly_eval_respects_ring_ops(p in int_poly(), q in int_poly(), x in -20i64..=20) {
        let x = big(x);
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
    }

    #[test]
    fn taylor_shift_agrees_with_substitution(p in int_poly(), c in -5i64..=5, x in -10i64..=10) {
        let shifted = p.taylor_shift(&big(c));
        prop_assert_eq!(shifted.eval(&big(x)), p.eval(&big(x + c)));
    }

    // Rational construction always lands in canonical form.
    #[test]
    fn rational_canonical_form(a in -10_000i64..=10_000, b in prop::sample::select(vec![-720i64, -64, -7, -2, -1, 1, 2, 3, 30, 719])) {
        let r = BigRational::new(big(a), big(b));
        prop_assert!(r.denom() > &BigInt::from(0));
        let again = BigRational::new(r.numer().clone(), r.denom().clone());
        prop_assert_eq!(&again, &r);
        if a == 0 {
            prop_assert_eq!(r.denom(), &BigInt::from(1));
        }
    }

    // The polynomial extension of C(n+shift, d) matches the multiplicative
    // binomial at every admissible integer point.
    #[test]
    fn binomial_poly_matches_binomial(d in 1usize..=14, offset in 0usize..=28, n in 0i64..=30) {
        let shift = -(d as i64) + offset as i64;
        prop_assume!(shift <= d as i64);
        prop_assume!(n >= (d as i64 - shift).max(0));
        let by_poly = binomial_poly(shift, d).eval(&BigRational::from_integer(big(n)));
        let by_product = BigRational::from_integer(binomial((n + shift) as u64, d as u64));
        prop_assert_eq!(by_poly, by_product);
    }

    // Linearity of generating functions over a common denominator.
    #[test]
    fn genfun_linear_combination_is_coefficientwise(
        c1 in -50i64..=50,
        c2 in -50i64..=50,
        j1 in 1usize..=8,
        j2 in 1usize..=8,
    ) {
        prop_assume!(j1 != j2);
        let g1 = rising_genfun(j1).unwrap();
        let g2 = rising_genfun(j2).unwrap();
        let combined = GenFun::linear_combination(&[
            (big(c1), g1.clone()),
            (big(c2), g2.clone()),
        ]);
        for m in 0..=30u64 {
            let expected = big(c1) * g1.series_coefficient(m) + big(c2) * g2.series_coefficient(m);
            prop_assert_eq!(combined.series_coefficient(m), expected);
        }
    }

    // Pointwise series correctness of the power pipeline.
    #[test]
    fn power_series_coefficients_are_powers(t in 1usize..=8, m in 0u64..=30) {
        let inv = InvPermMatrix::build(t).unwrap();
        let g = power_genfun(t, &inv).unwrap();
        let expected = if m == 0 { BigInt::from(0) } else { num_traits::Pow::pow(BigInt::from(m), t) };
        prop_assert_eq!(g.series_coefficient(m), expected);
        prop_assert_eq!(g.prefix_sum().series_coefficient(m), naive_power_sum(t, m));
    }

    // Closed forms evaluate to the brute-force sums.
    #[test]
    fn formula_matches_naive_sums(t in 1usize..=8, n in 0u64..=200) {
        let f = power_sum_formula(t, None).unwrap();
        prop_assert_eq!(f.eval(&BigInt::from(n)).unwrap(), naive_power_sum(t, n));
    }

    // Corner submatrix structure survives the dense view.
    #[test]
    fn nesting_in_dense_view(n in 2usize..=16) {
        let a = PermMatrix::build(n).unwrap();
        let a_small = PermMatrix::build(n - 1).unwrap();
        for i in 2..=n {
            for j in 1..n {
                prop_assert_eq!(a.entry(i, j), a_small.entry(i - 1, j));
            }
        }
        let b = InvPermMatrix::build(n).unwrap();
        let b_small = InvPermMatrix::build(n - 1).unwrap();
        for i in 1..n {
            for j in 2..=n {
                prop_assert_eq!(b.entry(i, j), b_small.entry(i, j - 1));
            }
        }
    }

    // Serialization round-trips are the identity.
    #[test]
    fn matrix_json_round_trip(n in 1usize..=12) {
        let a = PermMatrix::build(n).unwrap();
        prop_assert_eq!(PermMatrix::from_json(&a.to_json()).unwrap(), a);
        let b = InvPermMatrix::build(n).unwrap();
        prop_assert_eq!(InvPermMatrix::from_json(&b.to_json()).unwrap(), b);
    }

    #[test]
    fn formula_json_round_trip(t in 1usize..=16) {
        let f = power_sum_formula(t, None).unwrap();
        prop_assert_eq!(PowerSumFormula::from_json(&f.to_json()).unwrap(), f);
    }
}
