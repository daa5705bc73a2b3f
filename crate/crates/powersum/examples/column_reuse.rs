//! One inverse matrix answers every power up to its order: column n+1-t
//! holds exactly the weights for G{k^t}, so the expensive object is built
//! once and shared.
//!
//! Run with: cargo run --example column_reuse

use powersum::{power_sum_formula, BigInt, InvPermMatrix};

fn main() -> powersum::Result<()> {
    let inv = InvPermMatrix::build(20)?;
    println!("built one inverse of order {}\n", inv.order());

    let n = BigInt::from(1000);
    for t in 1..=20 {
        let f = power_sum_formula(t, Some(&inv))?;
        let value = f.eval(&n)?;
        println!("sum_{{k=1}}^{{1000}} k^{t:<2} = {value}");
    }

    // Asking beyond the cached order is reported, not silently recomputed.
    let too_big = power_sum_formula(21, Some(&inv));
    println!("\npower 21 from an order-20 cache: {}", too_big.unwrap_err());
    Ok(())
}
