//! Ordinary generating functions for the pipeline.
//!
//! Every series handled here has zero constant term, so a `GenFun` stores the
//! value `x * Q(x) / (1 - x)^p` with the leading factor `x` implicit: just
//! the integer numerator `Q` and the pole order `p`. The series convention is
//! `G{a} = sum_{m>=1} a_m x^m`, i.e. the coefficient of `x^m` is the `m`-th
//! term of the sequence.
//!
//! The building blocks: the rising factorial of length `j` has
//! `G{P_j} = j! x / (1-x)^(j+1)`; a power `k^t` is a column-weighted linear
//! combination of those; and dividing by one more `(1-x)` turns termwise
//! values into running sums.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, BigInt, IntPoly};
use crate::genmatrix::InvPermMatrix;

/// The rational function `x * Q(x) / (1 - x)^p` viewed as a formal power
/// series with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFun {
    numerator: IntPoly,
    pole_order: usize,
}

impl GenFun {
    pub fn new(numerator: IntPoly, pole_order: usize) -> Self {
        assert!(pole_order >= 1, "pole order must be positive");
        GenFun { numerator, pole_order }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    /// The generating function of the prefix sums of this one: same
    /// numerator, one more power of `(1 - x)` in the denominator.
    pub fn prefix_sum(&self) -> GenFun {
        GenFun::new(self.numerator.clone(), self.pole_order + 1)
    }

    /// Exact coefficient of `x^m` in the series expansion, via the binomial
    /// series of the pole: `sum_k q_k * C(m-1-k+p-1, p-1)`.
    pub fn series_coefficient(&self, m: u64) -> BigInt {
        let p = self.pole_order as u64;
        let mut acc = BigInt::zero();
        for (k, q) in self.numerator.coeffs().iter().enumerate() {
            let k = k as u64;
            if k + 1 > m {
                break; // the leading x and x^k of the numerator already exceed m
            }
            acc += q * binomial(m - 1 - k + p - 1, p - 1);
        }
        acc
    }

    /// Combines `sum_i c_i * g_i` over the common denominator
    /// `(1-x)^max(p_i)`: each numerator is padded with the missing powers of
    /// `(1 - x)`.
    pub fn linear_combination(terms: &[(BigInt, GenFun)]) -> GenFun {
        assert!(!terms.is_empty(), "linear combination of no terms");
        let pole = terms.iter().map(|(_, g)| g.pole_order).max().unwrap();
        let one_minus_x = IntPoly::from_coeffs(vec![BigInt::one(), -BigInt::one()]);
        let mut numerator = IntPoly::zero();
        for (c, g) in terms {
            let padded = &g.numerator.scale(c) * &one_minus_x.pow(pole - g.pole_order);
            numerator = numerator + padded;
        }
        GenFun::new(numerator, pole)
    }

    pub fn to_json(&self) -> GenFunJson {
        GenFunJson {
            numerator: self.numerator.coeffs().iter().map(BigInt::to_string).collect(),
            pole_order: self.pole_order,
            form: GENFUN_FORM.to_owned(),
        }
    }

    pub fn from_json(json: &GenFunJson) -> Result<Self> {
        if json.form != GENFUN_FORM {
            return Err(Error::InvalidSerialization(format!(
                "expected form {GENFUN_FORM:?}, found {:?}",
                json.form
            )));
        }
        if json.pole_order == 0 {
            return Err(Error::InvalidSerialization("pole order must be positive".into()));
        }
        let coeffs = json
            .numerator
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| Error::InvalidSerialization(format!("bad coefficient {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GenFun::new(IntPoly::from_coeffs(coeffs), json.pole_order))
    }
}

/// Schema descriptor embedded in the wire format.
pub const GENFUN_FORM: &str = "x*Q(x)/(1-x)^p";

/// Wire format: numerator coefficients ascending, as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenFunJson {
    pub numerator: Vec<String>,
    pub pole_order: usize,
    pub form: String,
}

/// `G{P_j}` for the rising factorial of length `j >= 1`:
/// numerator `j!`, pole order `j + 1`.
pub fn rising_genfun(j: usize) -> Result<GenFun> {
    if j == 0 {
        return Err(Error::UnsupportedPower);
    }
    Ok(GenFun::new(IntPoly::constant(factorial(j)), j + 1))
}

/// `G{k^t}` read off the inverse matrix: column `n+1-t` supplies the weights
/// of the rising-factorial basis, combined over the common pole `t + 1`.
///
/// The packed column does not depend on the matrix order, so any cached
/// inverse of order `n >= t` yields the identical result.
pub fn power_genfun(t: usize, inv: &InvPermMatrix) -> Result<GenFun> {
    let n = inv.order();
    if t == 0 || t > n {
        return Err(Error::PowerOutOfRange { power: t, order: n });
    }
    let column = inv.column(n + 1 - t); // packed rows 1..=t
    let terms: Vec<(BigInt, GenFun)> = column
        .iter()
        .enumerate()
        .map(|(idx, b)| Ok((b.clone(), rising_genfun(idx + 1)?)))
        .collect::<Result<_>>()?;
    Ok(GenFun::linear_combination(&terms))
}

/// Row `t` of the descent-count triangle, `E(t, 0..t-1)`, by the recurrence
/// `E(t, k) = (k+1) E(t-1, k) + (t-k) E(t-1, k-1)`.
///
/// Exists purely as an independent oracle for the `power_genfun` numerators;
/// the pipeline never consumes it.
pub fn eulerian_row(t: usize) -> Vec<BigInt> {
    assert!(t >= 1, "eulerian_row requires t >= 1");
    let mut row = vec![BigInt::one()];
    for m in 2..=t {
        let mut next = vec![BigInt::zero(); m];
        for k in 0..m {
            let mut e = BigInt::zero();
            if k < row.len() {
                e += &row[k] * (k as u64 + 1);
            }
            if k >= 1 {
                e += &row[k - 1] * ((m - k) as u64);
            }
            next[k] = e;
        }
        row = next;
    }
    row
}
