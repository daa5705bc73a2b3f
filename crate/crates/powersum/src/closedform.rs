//! Symbolic coefficient extraction: from the prefix-sum generating function
//! to the closed-form polynomial `S_t(n) = sum_{k=1}^n k^t`, plus two
//! derivations that are independent of the matrix pipeline and exist to
//! check it (a Bernoulli-number construction and brute-force summation).

use num_bigint::Sign;
use num_traits::{Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, falling_product, BigInt, BigRational, IntPoly, RatPoly};
use crate::genfun::{power_genfun, GenFun};
use crate::genmatrix::InvPermMatrix;

/// The closed form of `sum_{k=1}^n k^t`: a degree-`(t+1)` polynomial in `n`
/// with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumFormula {
    power: usize,
    polynomial: RatPoly,
}

impl PowerSumFormula {
    pub fn new(power: usize, polynomial: RatPoly) -> Self {
        PowerSumFormula { power, polynomial }
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn polynomial(&self) -> &RatPoly {
        &self.polynomial
    }

    /// Exact evaluation at a nonnegative integer. The value of a power sum
    /// is always an integer; a non-integral result can only mean the
    /// polynomial was corrupted, so it is reported as an error rather than
    /// truncated.
    pub fn eval(&self, n: &BigInt) -> Result<BigInt> {
        if n.sign() == Sign::Minus {
            return Err(Error::NegativeEvaluationPoint(n.clone()));
        }
        let value = self.polynomial.eval(&BigRational::from_integer(n.clone()));
        if !value.is_integer() {
            return Err(Error::NonIntegralResult { n: n.clone(), value });
        }
        Ok(value.to_integer())
    }

    pub fn to_json(&self) -> FormulaJson {
        FormulaJson {
            power: self.power,
            coefficients: self
                .polynomial
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(degree, c)| CoefficientJson {
                    degree,
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &FormulaJson) -> Result<Self> {
        let degree = json.coefficients.iter().map(|c| c.degree).max().unwrap_or(0);
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        for c in &json.coefficients {
            let num: BigInt = c.num.parse().map_err(|_| {
                Error::InvalidSerialization(format!("bad numerator {:?}", c.num))
            })?;
            let den: BigInt = c.den.parse().map_err(|_| {
                Error::InvalidSerialization(format!("bad denominator {:?}", c.den))
            })?;
            if den.is_zero() || !den.is_positive() {
                return Err(Error::InvalidSerialization(
                    "denominator must be positive".into(),
                ));
            }
            coeffs[c.degree] = BigRational::new(num, den);
        }
        Ok(PowerSumFormula::new(json.power, RatPoly::from_coeffs(coeffs)))
    }
}

/// Wire format: ascending degree, zero coefficients omitted, decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaJson {
    pub power: usize,
    pub coefficients: Vec<CoefficientJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientJson {
    pub degree: usize,
    pub num: String,
    pub den: String,
}

/// Symbolically extracts the `x^n` coefficient of `g` as a polynomial in `n`.
///
/// Expanding the pole gives `sum_k q_k * C(n-1-k+p-1, p-1)`; each term is the
/// binomial polynomial `C(n + (p-2-k), p-1)`. The polynomial extension agrees
/// with the true series coefficient for every integer `n >= 1`: whenever the
/// combinatorial value would vanish, the falling product hits a zero factor.
///
/// All terms share the denominator `(p-1)!`, so the sum is accumulated over
/// the integers and divided once at the end.
pub fn extract_coefficient_poly(g: &GenFun) -> RatPoly {
    let p = g.pole_order();
    assert!(p >= 2, "coefficient extraction needs a pole of order >= 2");
    let d = p - 1;
    let mut acc = IntPoly::zero();
    for (k, q) in g.numerator().coeffs().iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        let shift = p as i64 - 2 - k as i64;
        acc = acc + falling_product(shift, d).scale(q);
    }
    let den = factorial(d);
    RatPoly::from_coeffs(
        acc.coeffs().iter().map(|c| BigRational::new(c.clone(), den.clone())).collect(),
    )
}

/// The full pipeline: inverse matrix -> `G{k^t}` -> prefix sum -> symbolic
/// coefficient extraction.
///
/// A cached inverse of any order `>= t` may be supplied so one matrix can
/// answer every power up to its order; without one, the matrix of order
/// exactly `t` is built.
pub fn power_sum_formula(t: usize, cache: Option<&InvPermMatrix>) -> Result<PowerSumFormula> {
    if t == 0 {
        return Err(Error::UnsupportedPower);
    }
    let built;
    let inv = match cache {
        Some(m) => {
            if m.order() < t {
                return Err(Error::PowerOutOfRange { power: t, order: m.order() });
            }
            m
        }
        None => {
            built = InvPermMatrix::build(t)?;
            &built
        }
    };
    let prefix = power_genfun(t, inv)?.prefix_sum();
    Ok(PowerSumFormula::new(t, extract_coefficient_poly(&prefix)))
}

/// Brute-force oracle: `sum_{k=1}^n k^t` by direct exponentiation and
/// addition in exact integers. The empty sum is 0.
pub fn naive_power_sum(t: usize, n: u64) -> BigInt {
    (1..=n).map(|k| Pow::pow(BigInt::from(k), t)).sum()
}

/// Bernoulli numbers `B_0..B_upto` in the `B_1 = +1/2` convention, from the
/// recurrence `sum_{j=0}^m C(m+1, j) B_j = m + 1`.
pub fn bernoulli_numbers(upto: usize) -> Vec<BigRational> {
    let mut numbers: Vec<BigRational> = Vec::with_capacity(upto + 1);
    for m in 0..=upto {
        let mut sum = BigRational::zero();
        for (j, b) in numbers.iter().enumerate() {
            sum += BigRational::from_integer(binomial(m as u64 + 1, j as u64)) * b;
        }
        let m_plus_1 = BigRational::from_integer(BigInt::from(m as u64 + 1));
        numbers.push((m_plus_1.clone() - sum) / m_plus_1);
    }
    numbers
}

/// Independent derivation of the same closed form without any matrix or
/// generating function: `S_t(n) = (1/(t+1)) sum_{k=0}^t C(t+1, k) B_k
/// n^(t+1-k)`, with `B_1 = +1/2` so the sum runs through `n` inclusive.
pub fn faulhaber_via_bernoulli(t: usize) -> Result<PowerSumFormula> {
    if t == 0 {
        return Err(Error::UnsupportedPower);
    }
    let bernoulli = bernoulli_numbers(t);
    let divisor = BigRational::from_integer(BigInt::from(t as u64 + 1));
    let mut coeffs = vec![BigRational::zero(); t + 2];
    for (k, b) in bernoulli.iter().enumerate() {
        let degree = t + 1 - k;
        coeffs[degree] =
            BigRational::from_integer(binomial(t as u64 + 1, k as u64)) * b / &divisor;
    }
    Ok(PowerSumFormula::new(t, RatPoly::from_coeffs(coeffs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn rpoly(cs: &[(i64, i64)]) -> RatPoly {
        RatPoly::from_coeffs(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn extraction_reproduces_classic_forms() {
        // t = 1: n(n+1)/2
        let f = power_sum_formula(1, None).unwrap();
        assert_eq!(f.polynomial(), &rpoly(&[(0, 1), (1, 2), (1, 2)]));

        // t = 2: n/6 + n^2/2 + n^3/3, pinned by naive sums at n = 1..10
        let f = power_sum_formula(2, None).unwrap();
        assert_eq!(f.polynomial(), &rpoly(&[(0, 1), (1, 6), (1, 2), (1, 3)]));
        for n in 1..=10u64 {
            assert_eq!(f.eval(&BigInt::from(n)).unwrap(), naive_power_sum(2, n));
        }
    }

    #[test]
    fn fourth_power_matches_golden_form() {
        // n(n+1)(2n+1)(3n^2+3n-1)/30 expanded
        let expected = rpoly(&[(0, 1), (-1, 30), (0, 1), (1, 3), (1, 2), (1, 5)]);
        let f = power_sum_formula(4, None).unwrap();
        assert_eq!(f.polynomial(), &expected);
        assert_eq!(f.eval(&BigInt::from(3)).unwrap(), BigInt::from(98));
    }

    #[test]
    fn twelfth_power_matches_golden_form() {
        let expected = rpoly(&[
            (0, 1),
            (-691, 2730),
            (0, 1),
            (5, 3),
            (0, 1),
            (-33, 10),
            (0, 1),
            (22, 7),
            (0, 1),
            (-11, 6),
            (0, 1),
            (1, 1),
            (1, 2),
            (1, 13),
        ]);
        let f = power_sum_formula(12, None).unwrap();
        assert_eq!(f.polynomial(), &expected);
    }

    #[test]
    fn cached_inverse_answers_smaller_powers() {
        let inv = InvPermMatrix::build(12).unwrap();
        for t in 1..=12usize {
            assert_eq!(
                power_sum_formula(t, Some(&inv)).unwrap(),
                power_sum_formula(t, None).unwrap(),
                "t={t}"
            );
        }
        assert_eq!(
            power_sum_formula(13, Some(&inv)).unwrap_err(),
            Error::PowerOutOfRange { power: 13, order: 12 }
        );
        assert_eq!(power_sum_formula(0, None).unwrap_err(), Error::UnsupportedPower);
    }

    #[test]
    fn evaluation_edges() {
        let f = power_sum_formula(4, None).unwrap();
        assert_eq!(f.eval(&BigInt::zero()).unwrap(), BigInt::zero());
        let f1 = power_sum_formula(1, None).unwrap();
        assert_eq!(f1.eval(&BigInt::from(100)).unwrap(), BigInt::from(5050));
        assert!(matches!(
            f.eval(&BigInt::from(-1)),
            Err(Error::NegativeEvaluationPoint(_))
        ));
    }

    #[test]
    fn corrupted_polynomial_is_reported() {
        let broken = PowerSumFormula::new(1, rpoly(&[(0, 1), (1, 3)])); // n/3
        assert!(matches!(
            broken.eval(&BigInt::from(1)),
            Err(Error::NonIntegralResult { .. })
        ));
    }

    #[test]
    fn naive_oracle_values() {
        assert_eq!(naive_power_sum(4, 3), BigInt::from(98));
        assert_eq!(naive_power_sum(9, 0), BigInt::zero());
        assert_eq!(naive_power_sum(12, 2), BigInt::from(4097));
    }

    #[test]
    fn bernoulli_sequence() {
        let b = bernoulli_numbers(12);
        assert_eq!(b[0], BigRational::one());
        assert_eq!(b[1], rat(1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], BigRational::zero());
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[12], rat(-691, 2730));
        // every odd index past 1 vanishes
        for odd in [3usize, 5, 7, 9, 11] {
            assert!(b[odd].is_zero(), "B_{odd}");
        }
    }

    #[test]
    fn faulhaber_agrees_with_pipeline() {
        assert_eq!(
            faulhaber_via_bernoulli(1).unwrap().polynomial(),
            &rpoly(&[(0, 1), (1, 2), (1, 2)])
        );
        for t in [1usize, 2, 3, 4, 7, 12] {
            assert_eq!(
                faulhaber_via_bernoulli(t).unwrap(),
                power_sum_formula(t, None).unwrap(),
                "t={t}"
            );
        }
        assert_eq!(faulhaber_via_bernoulli(0).unwrap_err(), Error::UnsupportedPower);
    }

    #[test]
    fn telescoping_identity_small() {
        for t in 1..=8usize {
            let s = power_sum_formula(t, None).unwrap();
            let shifted = s.polynomial().taylor_shift(&rat(-1, 1));
            let difference = s.polynomial() - &shifted;
            assert_eq!(difference, RatPoly::monomial(BigRational::one(), t), "t={t}");
        }
    }

    #[test]
    fn json_round_trip_drops_zero_terms() {
        let f = power_sum_formula(12, None).unwrap();
        let json = f.to_json();
        assert_eq!(json.coefficients.len(), 8);
        assert_eq!(PowerSumFormula::from_json(&json).unwrap(), f);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: FormulaJson = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, json);
    }
}
