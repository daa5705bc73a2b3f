//! Exact arithmetic: arbitrary-precision integers, normalized rationals and
//! dense polynomials over both.
//!
//! Integers and rationals are the `num-bigint` / `num-rational` types;
//! `BigRational` already maintains the canonical form this crate relies on
//! (positive denominator, reduced fraction, zero as 0/1). Everything here is
//! immutable after construction and safe to share across threads.

mod poly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{Coefficient, IntPoly, Poly, RatPoly};

use num_traits::{One, Zero};

/// Exact factorial.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Binomial coefficient `C(n, k)` by the multiplicative formula; every
/// intermediate division is exact.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// The integer product `(n + shift)(n + shift - 1) ... (n + shift - d + 1)`
/// as a polynomial in `n`.
pub(crate) fn falling_product(shift: i64, d: usize) -> IntPoly {
    let mut p = IntPoly::one();
    for i in 0..d as i64 {
        p = p * IntPoly::from_coeffs(vec![BigInt::from(shift - i), BigInt::one()]);
    }
    p
}

/// The polynomial `C(n + shift, d)` in the variable `n`, i.e.
/// `(1/d!) * (n + shift)(n + shift - 1) ... (n + shift - d + 1)`.
///
/// This is the polynomial extension of the binomial coefficient: at integer
/// points `n >= -shift` it agrees with the combinatorial value. The product
/// stays in the integers; the single division by `d!` happens per
/// coefficient at the end.
pub fn binomial_poly(shift: i64, d: usize) -> RatPoly {
    assert!(d >= 1, "binomial_poly requires degree d >= 1");
    let den = factorial(d);
    RatPoly::from_coeffs(
        falling_product(shift, d)
            .coeffs()
            .iter()
            .map(|c| BigRational::new(c.clone(), den.clone()))
            .collect(),
    )
}
