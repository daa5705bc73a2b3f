//! Time the closed-form derivation against brute force. The closed form is
//! derived once in milliseconds and then evaluates at any n instantly; the
//! naive sum has to walk all n terms.
//!
//! Run with: cargo run --release --example benchmark

use std::time::Instant;

use powersum::{faulhaber_via_bernoulli, naive_power_sum, power_sum_formula, BigInt};

fn main() -> powersum::Result<()> {
    let t = 50usize;
    let n = 1_000_000u64;
    println!("deriving sum k^{t} and evaluating at n = {n}\n");

    let start = Instant::now();
    let pipeline = power_sum_formula(t, None)?;
    let derive_matrix = start.elapsed();

    let start = Instant::now();
    let bernoulli = faulhaber_via_bernoulli(t)?;
    let derive_bernoulli = start.elapsed();
    assert_eq!(pipeline, bernoulli);

    let start = Instant::now();
    let exact = pipeline.eval(&BigInt::from(n))?;
    let eval_time = start.elapsed();

    let start = Instant::now();
    let brute = naive_power_sum(t, n);
    let naive_time = start.elapsed();
    assert_eq!(exact, brute);

    let digits = exact.to_string();
    println!("matrix pipeline derivation: {derive_matrix:>12?}");
    println!("bernoulli derivation:       {derive_bernoulli:>12?}");
    println!("closed-form evaluation:     {eval_time:>12?}");
    println!("naive summation:            {naive_time:>12?}");
    println!(
        "\nresult: {} ... {} ({} digits), all methods agree",
        &digits[..10],
        &digits[digits.len() - 10..],
        digits.len()
    );
    Ok(())
}
