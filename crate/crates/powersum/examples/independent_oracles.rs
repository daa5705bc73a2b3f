//! The three independent routes to the same answers: the matrix pipeline,
//! the Bernoulli-number construction, and brute-force summation. Disagreement
//! anywhere would mean a bug, so the library ships all of them.
//!
//! Run with: cargo run --example independent_oracles

use powersum::{
    bernoulli_numbers, eulerian_row, faulhaber_via_bernoulli, naive_power_sum, power_genfun,
    power_sum_formula, BigInt, InvPermMatrix,
};

fn main() -> powersum::Result<()> {
    // The numerator of G{k^t} matches the descent-count triangle row.
    let inv = InvPermMatrix::build(6)?;
    for t in 1..=6 {
        let numerator = power_genfun(t, &inv)?.numerator().coeffs().to_vec();
        assert_eq!(numerator, eulerian_row(t));
        let printable: Vec<String> = numerator.iter().map(BigInt::to_string).collect();
        println!("numerator of G{{k^{t}}}: [{}]", printable.join(", "));
    }
    println!();

    // Bernoulli numbers in the B_1 = +1/2 convention.
    let bernoulli = bernoulli_numbers(12);
    for (k, b) in bernoulli.iter().enumerate() {
        println!("B_{k:<2} = {b}");
    }
    println!();

    // Pipeline vs Bernoulli construction vs naive sums.
    for t in 1..=10usize {
        let pipeline = power_sum_formula(t, None)?;
        let bernoulli_form = faulhaber_via_bernoulli(t)?;
        assert_eq!(pipeline, bernoulli_form);
        for n in 0..=30u64 {
            assert_eq!(pipeline.eval(&BigInt::from(n))?, naive_power_sum(t, n));
        }
        println!("t = {t:<2}: pipeline == Bernoulli form, matches naive sums for n <= 30");
    }
    Ok(())
}
