//! Exact closed-form polynomials for power sums of natural numbers.
//!
//! The pipeline works entirely in exact arithmetic. The coefficient matrix
//! that expresses rising factorials in the monomial basis is built from a
//! first-order column recurrence, its inverse from a mirrored recurrence
//! (never by generic inversion). One column of the inverse weighs the
//! rising-factorial generating functions `j! x / (1-x)^(j+1)` into `G{k^t}`;
//! dividing by one more `(1 - x)` turns termwise powers into running sums,
//! and symbolic extraction of the `x^n` coefficient yields the closed form
//! `S_t(n) = sum_{k=1}^n k^t` as a polynomial with rational coefficients.
//!
//! One inverse matrix of order `n` answers every power `t <= n`, so a single
//! build can be cached and reused across powers.
//!
//! ```
//! use powersum::{power_sum_formula, BigInt};
//!
//! let f = power_sum_formula(4, None).unwrap();
//! assert_eq!(f.to_string(), "n^5/5 + n^4/2 + n^3/3 - n/30");
//! assert_eq!(f.eval(&BigInt::from(3)).unwrap(), BigInt::from(98));
//! ```
//!
//! Two independent derivations ship alongside the pipeline for
//! cross-checking: brute-force summation and a Bernoulli-number construction
//! of the same polynomial.

pub mod cli;
pub mod closedform;
pub mod error;
pub mod exact;
pub mod genfun;
pub mod genmatrix;
pub mod render;
pub mod selftest;

pub use closedform::{
    bernoulli_numbers, faulhaber_via_bernoulli, naive_power_sum, power_sum_formula,
    PowerSumFormula,
};
pub use error::{Error, Result};
pub use exact::{binomial, binomial_poly, factorial, BigInt, BigRational, IntPoly, Poly, RatPoly};
pub use genfun::{eulerian_row, power_genfun, rising_genfun, GenFun};
pub use genmatrix::{verify_inverse, InvPermMatrix, PermMatrix};
