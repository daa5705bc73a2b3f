//! Build the generation matrix and its inverse, verify the product, and
//! grow a matrix incrementally instead of rebuilding it.
//!
//! Run with: cargo run --example build_matrices

use powersum::render::matrix_grid;
use powersum::{verify_inverse, InvPermMatrix, PermMatrix};

fn main() -> powersum::Result<()> {
    // Column j of A holds the coefficients of m(m+1)...(m+j-1) in the
    // descending basis (m^n, ..., m).
    let a = PermMatrix::build(6)?;
    println!("A_6:\n{}\n", matrix_grid(&a.rows()));

    let b = InvPermMatrix::build(6)?;
    println!("A_6^-1:\n{}\n", matrix_grid(&b.rows()));

    println!("A_6 * A_6^-1 == I: {}\n", verify_inverse(&a, &b)?);

    // Both matrices nest: the order-n matrix is a corner submatrix of the
    // order-(n+1) one, so growing by one order computes only one new column.
    let a7 = a.extend();
    let b7 = b.extend();
    println!("extended to order {}, still inverse: {}", a7.order(), verify_inverse(&a7, &b7)?);

    // Columns expand to rising factorials: column 4 of A_6 is m(m+1)(m+2)(m+3).
    let poly = a.column_poly(4)?;
    let at_two = poly.eval(&2.into());
    println!("column 4 of A_6 evaluated at m = 2: {at_two} (= 2*3*4*5)");
    Ok(())
}
