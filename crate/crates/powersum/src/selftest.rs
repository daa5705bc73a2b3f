//! Runtime self-test: every module's invariant suite, runnable from the CLI.
//!
//! Each suite checks one documented invariant family, scaled by the
//! `max_power` bound where the invariant is power- or order-indexed. The
//! random suites draw from a fixed-seed generator so consecutive runs emit
//! byte-identical reports.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::closedform::{faulhaber_via_bernoulli, naive_power_sum, power_sum_formula};
use crate::exact::{binomial, binomial_poly, factorial, BigInt, BigRational, IntPoly, RatPoly};
use crate::genfun::{eulerian_row, power_genfun, rising_genfun, GenFun};
use crate::genmatrix::{verify_inverse, InvPermMatrix, PermMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub status: SuiteStatus,
    /// Failure description or skip reason; empty on pass.
    pub detail: String,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.status != SuiteStatus::Fail
    }
}

fn push(out: &mut Vec<SuiteOutcome>, name: &'static str, result: Result<(), String>) {
    out.push(match result {
        Ok(()) => SuiteOutcome { name, status: SuiteStatus::Pass, detail: String::new() },
        Err(detail) => SuiteOutcome { name, status: SuiteStatus::Fail, detail },
    });
}

fn skip(out: &mut Vec<SuiteOutcome>, name: &'static str, reason: &str) {
    out.push(SuiteOutcome { name, status: SuiteStatus::Skip, detail: reason.to_owned() });
}

/// Runs every suite bounded by `max_power` and reports one outcome per
/// suite. Suites never panic; failures carry the first offending case.
pub fn run(max_power: usize) -> Vec<SuiteOutcome> {
    let p = max_power.max(1);
    let mut out = Vec::new();

    push(&mut out, "rational-canonical-form", rational_canonical_form());
    push(&mut out, "poly-ring-laws", poly_ring_laws());
    push(&mut out, "binomial-poly-oracle", binomial_poly_oracle());

    push(&mut out, "inverse-identity", inverse_identity(2 * p));
    push(&mut out, "rising-factorial-columns", rising_factorial_columns(p.min(20)));
    push(&mut out, "perm-nesting", perm_nesting(p));
    push(&mut out, "inv-nesting", inv_nesting(p));
    push(&mut out, "last-row-factorials", last_row_factorials(p));
    push(&mut out, "extension-consistency", extension_consistency(p));
    push(&mut out, "inverse-alternating-signs", inverse_alternating_signs(p.min(16)));
    push(&mut out, "golden-matrices", golden_matrices());

    push(&mut out, "numerator-eulerian", numerator_eulerian(p.min(20)));
    push(&mut out, "numerator-palindrome", numerator_palindrome(p.min(20)));
    push(&mut out, "numerator-sum-factorial", numerator_sum_factorial(p.min(20)));
    push(&mut out, "series-pointwise", series_pointwise(p.min(10)));
    push(&mut out, "genfun-linearity", genfun_linearity());
    push(&mut out, "column-independence", column_independence(p.min(16)));

    if p >= 4 {
        push(&mut out, "golden-formula-t4", golden_formula_t4());
    } else {
        skip(&mut out, "golden-formula-t4", "needs max power >= 4");
    }
    if p >= 12 {
        push(&mut out, "golden-formula-t12", golden_formula_t12());
    } else {
        skip(&mut out, "golden-formula-t12", "needs max power >= 12");
    }
    push(&mut out, "oracle-faulhaber", oracle_faulhaber(p));
    push(&mut out, "oracle-naive-eval", oracle_naive_eval(p.min(10)));
    push(&mut out, "telescoping", telescoping(p.min(24)));
    push(&mut out, "formula-structure", formula_structure(p));
    push(&mut out, "integrality-sampling", integrality_sampling(p.min(16)));

    out
}

fn rational_canonical_form() -> Result<(), String> {
    for a in -30i64..=30 {
        for b in (-20i64..=20).filter(|&b| b != 0) {
            let r = BigRational::new(BigInt::from(a), BigInt::from(b));
            if !r.denom().is_positive() {
                return Err(format!("{a}/{b} normalized to non-positive denominator"));
            }
            let renormalized = BigRational::new(r.numer().clone(), r.denom().clone());
            if renormalized != r {
                return Err(format!("normalization of {a}/{b} is not idempotent"));
            }
            if a == 0 && !r.denom().is_one() {
                return Err(format!("zero from 0/{b} is not 0/1"));
            }
        }
    }
    Ok(())
}

fn random_poly(rng: &mut ChaCha8Rng) -> IntPoly {
    let degree = rng.gen_range(0..=8usize);
    IntPoly::from_coeffs(
        (0..=degree).map(|_| BigInt::from(rng.gen_range(-100i64..=100))).collect(),
    )
}

fn poly_ring_laws() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5157_0001);
    for trial in 0..40 {
        let p = random_poly(&mut rng);
        let q = random_poly(&mut rng);
        let r = random_poly(&mut rng);
        if &(&p + &q) * &r != &(&p * &r) + &(&q * &r) {
            return Err(format!("distributivity failed on trial {trial}"));
        }
        if &p * &q != &q * &p {
            return Err(format!("commutativity failed on trial {trial}"));
        }
        if &(&p * &q) * &r != &p * &(&q * &r) {
            return Err(format!("associativity failed on trial {trial}"));
        }
    }
    Ok(())
}

fn binomial_poly_oracle() -> Result<(), String> {
    for d in 1..=14usize {
        for shift in -(d as i64)..=(d as i64) {
            let poly = binomial_poly(shift, d);
            for n in 0..=30i64 {
                if n < (d as i64 - shift).max(0) {
                    continue;
                }
                let by_poly = poly.eval(&BigRational::from_integer(BigInt::from(n)));
                let by_product = BigRational::from_integer(binomial((n + shift) as u64, d as u64));
                if by_poly != by_product {
                    return Err(format!("C(n+{shift}, {d}) mismatch at n = {n}"));
                }
            }
        }
    }
    Ok(())
}

fn inverse_identity(max_order: usize) -> Result<(), String> {
    for n in 1..=max_order {
        let a = PermMatrix::build(n).map_err(|e| e.to_string())?;
        let b = InvPermMatrix::build(n).map_err(|e| e.to_string())?;
        if !verify_inverse(&a, &b).map_err(|e| e.to_string())? {
            return Err(format!("product is not the identity at order {n}"));
        }
    }
    Ok(())
}

fn rising_factorial_columns(max_order: usize) -> Result<(), String> {
    for n in 1..=max_order {
        let a = PermMatrix::build(n).map_err(|e| e.to_string())?;
        for j in 1..=n {
            let poly = a.column_poly(j).map_err(|e| e.to_string())?;
            for m in 1..=10u64 {
                let direct: BigInt = (0..j as u64).map(|r| BigInt::from(m + r)).product();
                if poly.eval(&BigInt::from(m)) != direct {
                    return Err(format!("column {j} of order {n} wrong at m = {m}"));
                }
            }
        }
    }
    Ok(())
}

fn perm_nesting(max_order: usize) -> Result<(), String> {
    for n in 2..=max_order.max(2) {
        let big = PermMatrix::build(n).map_err(|e| e.to_string())?;
        let small = PermMatrix::build(n - 1).map_err(|e| e.to_string())?;
        // delete row 1 and column n
        for i in 2..=n {
            for j in 1..n {
                if big.entry(i, j) != small.entry(i - 1, j) {
                    return Err(format!("order {n} disagrees with order {} at ({i},{j})", n - 1));
                }
            }
        }
    }
    Ok(())
}

fn inv_nesting(max_order: usize) -> Result<(), String> {
    for n in 2..=max_order.max(2) {
        let big = InvPermMatrix::build(n).map_err(|e| e.to_string())?;
        let small = InvPermMatrix::build(n - 1).map_err(|e| e.to_string())?;
        // delete row n and column 1
        for i in 1..n {
            for j in 2..=n {
                if big.entry(i, j) != small.entry(i, j - 1) {
                    return Err(format!("order {n} disagrees with order {} at ({i},{j})", n - 1));
                }
            }
        }
    }
    Ok(())
}

fn last_row_factorials(max_order: usize) -> Result<(), String> {
    for n in 1..=max_order {
        let a = PermMatrix::build(n).map_err(|e| e.to_string())?;
        for j in 1..=n {
            if a.entry(n, j) != factorial(j - 1) {
                return Err(format!("a[{n}][{j}] is not ({j}-1)!"));
            }
        }
    }
    Ok(())
}

fn extension_consistency(max_order: usize) -> Result<(), String> {
    for n in 2..=max_order.max(2) {
        let grown = PermMatrix::build(n - 1).map_err(|e| e.to_string())?.extend();
        if grown != PermMatrix::build(n).map_err(|e| e.to_string())? {
            return Err(format!("matrix extension to order {n} diverges"));
        }
        let grown_inv = InvPermMatrix::build(n - 1).map_err(|e| e.to_string())?.extend();
        if grown_inv != InvPermMatrix::build(n).map_err(|e| e.to_string())? {
            return Err(format!("inverse extension to order {n} diverges"));
        }
    }
    Ok(())
}

fn inverse_alternating_signs(max_order: usize) -> Result<(), String> {
    for n in 1..=max_order {
        let b = InvPermMatrix::build(n).map_err(|e| e.to_string())?;
        for j in 1..=n {
            for (idx, entry) in b.column(j).iter().enumerate() {
                let i = idx + 1;
                if entry.is_zero() {
                    return Err(format!("structural entry b[{i}][{j}] of order {n} is zero"));
                }
                let expect_negative = (n + 1 - j - i) % 2 == 1;
                if entry.is_negative() != expect_negative {
                    return Err(format!("sign of b[{i}][{j}] wrong at order {n}"));
                }
            }
        }
    }
    Ok(())
}

fn golden_matrices() -> Result<(), String> {
    let goldens: [(usize, &[&[i64]]); 5] = [
        (2, &[&[0, 1], &[1, 1]]),
        (3, &[&[0, 0, 1], &[0, 1, 3], &[1, 1, 2]]),
        (4, &[&[0, 0, 0, 1], &[0, 0, 1, 6], &[0, 1, 3, 11], &[1, 1, 2, 6]]),
        (5, &[
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 10],
            &[0, 0, 1, 6, 35],
            &[0, 1, 3, 11, 50],
            &[1, 1, 2, 6, 24],
        ]),
        (6, &[
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 1, 15],
            &[0, 0, 0, 1, 10, 85],
            &[0, 0, 1, 6, 35, 225],
            &[0, 1, 3, 11, 50, 274],
            &[1, 1, 2, 6, 24, 120],
        ]),
    ];
    for (n, rows) in goldens {
        let a = PermMatrix::build(n).map_err(|e| e.to_string())?;
        let expected: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().copied().map(BigInt::from).collect()).collect();
        if a.rows() != expected {
            return Err(format!("matrix of order {n} deviates from its golden value"));
        }
    }

    let inv4 = InvPermMatrix::build(4).map_err(|e| e.to_string())?;
    let expected4: Vec<Vec<BigInt>> = [
        [-1i64, 1, -1, 1],
        [7, -3, 1, 0],
        [-6, 1, 0, 0],
        [1, 0, 0, 0],
    ]
    .iter()
    .map(|r| r.iter().copied().map(BigInt::from).collect())
    .collect();
    if inv4.rows() != expected4 {
        return Err("inverse of order 4 deviates from its golden value".into());
    }

    let inv12 = InvPermMatrix::build(12).map_err(|e| e.to_string())?;
    let column1 = [
        -1i64, 2047, -86526, 611501, -1379400, 1323652, -627396, 159027, -22275, 1705, -66, 1,
    ];
    let got: Vec<BigInt> = inv12.column(1).to_vec();
    if got != column1.iter().copied().map(BigInt::from).collect::<Vec<_>>() {
        return Err("first column of the order-12 inverse deviates".into());
    }
    Ok(())
}

fn numerator_eulerian(max_power: usize) -> Result<(), String> {
    for t in 1..=max_power {
        let inv = InvPermMatrix::build(t).map_err(|e| e.to_string())?;
        let g = power_genfun(t, &inv).map_err(|e| e.to_string())?;
        if g.numerator().coeffs() != eulerian_row(t) {
            return Err(format!("numerator of G{{k^{t}}} differs from the triangle oracle"));
        }
    }
    Ok(())
}

fn numerator_palindrome(max_power: usize) -> Result<(), String> {
    for t in 1..=max_power {
        let inv = InvPermMatrix::build(t).map_err(|e| e.to_string())?;
        let coeffs = power_genfun(t, &inv).map_err(|e| e.to_string())?.numerator().coeffs().to_vec();
        let mut reversed = coeffs.clone();
        reversed.reverse();
        if coeffs != reversed {
            return Err(format!("numerator of G{{k^{t}}} is not palindromic"));
        }
    }
    Ok(())
}

fn numerator_sum_factorial(max_power: usize) -> Result<(), String> {
    for t in 1..=max_power {
        let inv = InvPermMatrix::build(t).map_err(|e| e.to_string())?;
        let sum: BigInt = power_genfun(t, &inv)
            .map_err(|e| e.to_string())?
            .numerator()
            .coeffs()
            .iter()
            .sum();
        if sum != factorial(t) {
            return Err(format!("numerator coefficients of G{{k^{t}}} do not sum to {t}!"));
        }
    }
    Ok(())
}

fn series_pointwise(max_power: usize) -> Result<(), String> {
    for t in 1..=max_power {
        let inv = InvPermMatrix::build(t).map_err(|e| e.to_string())?;
        let g = power_genfun(t, &inv).map_err(|e| e.to_string())?;
        let prefix = g.prefix_sum();
        for m in 0..=40u64 {
            let power = if m == 0 { BigInt::zero() } else { num_traits::Pow::pow(BigInt::from(m), t) };
            if g.series_coefficient(m) != power {
                return Err(format!("coefficient of x^{m} in G{{k^{t}}} is not {m}^{t}"));
            }
            if prefix.series_coefficient(m) != naive_power_sum(t, m) {
                return Err(format!("prefix coefficient of x^{m} for t = {t} is wrong"));
            }
        }
    }
    Ok(())
}

fn genfun_linearity() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5157_0002);
    for trial in 0..20 {
        let c1 = BigInt::from(rng.gen_range(-50i64..=50));
        let c2 = BigInt::from(rng.gen_range(-50i64..=50));
        let j1 = rng.gen_range(1..=8usize);
        let j2 = loop {
            let j = rng.gen_range(1..=8usize);
            if j != j1 {
                break j;
            }
        };
        let g1 = rising_genfun(j1).map_err(|e| e.to_string())?;
        let g2 = rising_genfun(j2).map_err(|e| e.to_string())?;
        let combined =
            GenFun::linear_combination(&[(c1.clone(), g1.clone()), (c2.clone(), g2.clone())]);
        for m in 0..=30u64 {
            let expected = &c1 * g1.series_coefficient(m) + &c2 * g2.series_coefficient(m);
            if combined.series_coefficient(m) != expected {
                return Err(format!("linearity broke on trial {trial} at m = {m}"));
            }
        }
    }
    Ok(())
}

fn column_independence(max_order: usize) -> Result<(), String> {
    for t in 1..=max_order {
        let reference = power_genfun(t, &InvPermMatrix::build(t).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        for n in t..=max_order {
            let inv = InvPermMatrix::build(n).map_err(|e| e.to_string())?;
            if power_genfun(t, &inv).map_err(|e| e.to_string())? != reference {
                return Err(format!("G{{k^{t}}} changes when read from the order-{n} inverse"));
            }
        }
    }
    Ok(())
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn golden_formula_t4() -> Result<(), String> {
    let expected = RatPoly::from_coeffs(vec![
        rat(0, 1),
        rat(-1, 30),
        rat(0, 1),
        rat(1, 3),
        rat(1, 2),
        rat(1, 5),
    ]);
    let f = power_sum_formula(4, None).map_err(|e| e.to_string())?;
    if f.polynomial() != &expected {
        return Err("closed form for t = 4 deviates from its golden value".into());
    }
    Ok(())
}

fn golden_formula_t12() -> Result<(), String> {
    let expected = RatPoly::from_coeffs(vec![
        rat(0, 1),
        rat(-691, 2730),
        rat(0, 1),
        rat(5, 3),
        rat(0, 1),
        rat(-33, 10),
        rat(0, 1),
        rat(22, 7),
        rat(0, 1),
        rat(-11, 6),
        rat(0, 1),
        rat(1, 1),
        rat(1, 2),
        rat(1, 13),
    ]);
    let f = power_sum_formula(12, None).map_err(|e| e.to_string())?;
    if f.polynomial() != &expected {
        return Err("closed form for t = 12 deviates from its golden value".into());
    }
    Ok(())
}

fn oracle_faulhaber(max_power: usize) -> Result<(), String> {
    // one shared inverse answers every power
    let inv = InvPermMatrix::build(max_power).map_err(|e| e.to_string())?;
    for t in 1..=max_power {
        let pipeline = power_sum_formula(t, Some(&inv)).map_err(|e| e.to_string())?;
        let bernoulli = faulhaber_via_bernoulli(t).map_err(|e| e.to_string())?;
        if pipeline != bernoulli {
            return Err(format!("pipeline and Bernoulli formulas disagree at t = {t}"));
        }
    }
    Ok(())
}

fn oracle_naive_eval(max_power: usize) -> Result<(), String> {
    for t in 1..=max_power {
        let f = power_sum_formula(t, None).map_err(|e| e.to_string())?;
        for n in 0..=50u64 {
            let direct = naive_power_sum(t, n);
            let evaluated = f.eval(&BigInt::from(n)).map_err(|e| e.to_string())?;
            if evaluated != direct {
                return Err(format!("t = {t}, n = {n}: formula {evaluated} vs naive {direct}"));
            }
        }
    }
    Ok(())
}

fn telescoping(max_power: usize) -> Result<(), String> {
    for t in 1..=max_power {
        let s = power_sum_formula(t, None).map_err(|e| e.to_string())?;
        let shifted = s.polynomial().taylor_shift(&rat(-1, 1));
        if s.polynomial() - &shifted != RatPoly::monomial(BigRational::one(), t) {
            return Err(format!("S_{t}(n) - S_{t}(n-1) is not n^{t}"));
        }
    }
    Ok(())
}

fn formula_structure(max_power: usize) -> Result<(), String> {
    for t in 1..=max_power {
        let f = power_sum_formula(t, None).map_err(|e| e.to_string())?;
        let poly = f.polynomial();
        if poly.degree() != Some(t + 1) {
            return Err(format!("degree of S_{t} is not {}", t + 1));
        }
        if !poly.coeff(0).is_zero() {
            return Err(format!("S_{t} has a nonzero constant term"));
        }
        if poly.coeff(t + 1) != rat(1, (t + 1) as i64) {
            return Err(format!("leading coefficient of S_{t} is not 1/{}", t + 1));
        }
        if poly.coeff(t) != rat(1, 2) {
            return Err(format!("coefficient of n^{t} in S_{t} is not 1/2"));
        }
        if f.eval(&BigInt::one()).map_err(|e| e.to_string())? != BigInt::one() {
            return Err(format!("S_{t}(1) is not 1"));
        }
    }
    Ok(())
}

fn integrality_sampling(max_power: usize) -> Result<(), String> {
    use num_bigint::RandBigInt;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5157_0003);
    let bound = num_traits::pow(BigInt::from(10), 50);
    let samples: Vec<BigInt> =
        (0..200).map(|_| rng.gen_bigint_range(&BigInt::zero(), &bound)).collect();
    for t in 1..=max_power {
        let f = power_sum_formula(t, None).map_err(|e| e.to_string())?;
        for n in &samples {
            // eval() itself rejects non-integral values
            let value = f.eval(n).map_err(|e| format!("t = {t}: {e}"))?;
            if value.is_negative() {
                return Err(format!("S_{t}({n}) is negative"));
            }
        }
    }
    Ok(())
}
