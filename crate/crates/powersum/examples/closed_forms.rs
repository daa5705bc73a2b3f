//! Derive closed-form polynomials for power sums and evaluate them exactly
//! at points far beyond anything brute force could reach.
//!
//! Run with: cargo run --example closed_forms

use powersum::render::poly_latex;
use powersum::{power_sum_formula, BigInt};

fn main() -> powersum::Result<()> {
    for t in [1usize, 2, 4, 12] {
        let f = power_sum_formula(t, None)?;
        println!("sum k^{t} = {f}");
    }
    println!();

    let f4 = power_sum_formula(4, None)?;
    println!("LaTeX for t = 4: {}", poly_latex(f4.polynomial()));
    println!();

    // Exact evaluation at a 30-digit point: the result is a single integer,
    // no rounding anywhere.
    let n: BigInt = "123456789012345678901234567890".parse().unwrap();
    let value = f4.eval(&n)?;
    println!("sum of k^4 up to n = {n}:");
    println!("{value}");
    Ok(())
}
