//! Assemble ordinary generating functions: the rising-factorial blocks, the
//! combination giving G{k^t}, and the prefix-sum transform.
//!
//! Run with: cargo run --example generating_functions

use powersum::{naive_power_sum, power_genfun, rising_genfun, BigInt, InvPermMatrix};

fn main() -> powersum::Result<()> {
    // G{m(m+1)...(m+j-1)} = j! x / (1-x)^(j+1)
    for j in 1..=4 {
        println!("G{{P_{j}}} = {}", rising_genfun(j)?);
    }
    println!();

    // One column of the inverse matrix weighs those blocks into G{k^t}.
    let inv = InvPermMatrix::build(4)?;
    let g = power_genfun(4, &inv)?;
    println!("G{{k^4}}     = {g}");

    // Dividing by (1-x) once more turns k^4 into running sums of k^4.
    let sums = g.prefix_sum();
    println!("G{{sum k^4}} = {sums}");
    println!();

    // The series coefficients really are the powers and their prefix sums.
    for m in 1..=6u64 {
        let power = g.series_coefficient(m);
        let prefix = sums.series_coefficient(m);
        println!(
            "x^{m}: {power} = {m}^4, {prefix} = 1^4 + ... + {m}^4 (naive: {})",
            naive_power_sum(4, m)
        );
        assert_eq!(power, num_traits::Pow::pow(BigInt::from(m), 4usize));
        assert_eq!(prefix, naive_power_sum(4, m));
    }
    Ok(())
}
