//! The JSON wire formats: matrices, generating functions and formulas all
//! serialize big integers as decimal strings, because entries overflow what
//! JSON numbers can carry.
//!
//! Run with: cargo run --example wire_formats

use powersum::{power_genfun, power_sum_formula, InvPermMatrix, PermMatrix, PowerSumFormula};

fn main() -> powersum::Result<()> {
    let matrix = PermMatrix::build(4)?;
    println!("matrix:\n{}\n", serde_json::to_string_pretty(&matrix.to_json()).unwrap());

    let inv = InvPermMatrix::build(4)?;
    let genfun = power_genfun(4, &inv)?;
    println!("generating function:\n{}\n", serde_json::to_string_pretty(&genfun.to_json()).unwrap());

    let formula = power_sum_formula(4, None)?;
    let json = formula.to_json();
    println!("formula:\n{}\n", serde_json::to_string_pretty(&json).unwrap());

    // Round-tripping restores the exact object.
    let restored = PowerSumFormula::from_json(&json)?;
    assert_eq!(restored, formula);
    println!("round-trip restored: {restored}");
    Ok(())
}
