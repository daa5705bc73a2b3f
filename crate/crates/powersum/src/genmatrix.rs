//! The permutation generation matrix and its inverse.
//!
//! Column `j` of the order-`n` matrix `A` holds the coefficients of the
//! rising factorial `P_j(m) = m(m+1)...(m+j-1)` in the descending monomial
//! basis `(m^n, ..., m)`, so `(P_1, ..., P_n) = (m^n, ..., m) * A`. Both `A`
//! and its inverse `B` are anti-triangular with respect to the secondary
//! diagonal (`a[i][j] = 0` for `i + j < n + 1`, `b[i][j] = 0` for
//! `i + j > n + 1`) and are produced entirely by first-order column
//! recurrences, never by generic inversion:
//!
//! * `a[i][j] = (j-1) * a[i][j-1] + a[i+1][j-1]` going left to right,
//! * `b[i][j] = -i * b[i][j+1] + b[i-1][j+1]` going right to left, with
//!   `b[1][j] = (-1)^(j+n)`.
//!
//! Only the structurally-nonzero triangle is stored, column-packed: entries
//! grow factorially (`a[n][j] = (j-1)!`), so materializing the zero half
//! would waste real memory at large orders. Indexing on the public surface is
//! 1-based in `(row, column)` to match the recurrences above; the mapping to
//! packed storage is private. A packed column turns out not to depend on the
//! ambient order, which is exactly the nesting property: the order-`n` matrix
//! contains the order-`(n-1)` one as a corner submatrix.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{BigInt, IntPoly};

/// Default cap on user-supplied orders. Entries grow factorially, so an
/// accidentally huge order would exhaust memory long before it finished;
/// callers that mean it can raise the cap.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Checks an order against a configured cap.
pub fn check_order_cap(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        return Err(Error::OrderCapExceeded { order, cap });
    }
    Ok(())
}

/// The order-`n` permutation generation matrix `A`.
///
/// `columns[j-1]` stores the entries of column `j` for rows
/// `n+1-j ..= n` (top to bottom), the only rows that may be nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermMatrix {
    order: usize,
    columns: Vec<Vec<BigInt>>,
}

/// The inverse of the permutation generation matrix.
///
/// `columns[j-1]` stores the entries of column `j` for rows
/// `1 ..= n+1-j` (top to bottom).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvPermMatrix {
    order: usize,
    columns: Vec<Vec<BigInt>>,
}

/// Column `j` packed entries from column `j-1`: one step of the forward
/// recurrence. Independent of the ambient order.
fn perm_next_column(prev: &[BigInt], j: usize) -> Vec<BigInt> {
    let mut col = Vec::with_capacity(j);
    col.push(BigInt::one()); // secondary diagonal
    for q in 1..j {
        let mut entry = &prev[q - 1] * (j as u64 - 1);
        if let Some(below) = prev.get(q) {
            entry += below;
        }
        col.push(entry);
    }
    col
}

/// Column `j` packed entries of the inverse from column `j+1`. The top entry
/// alternates sign along the first row; `next.len() + 1` rows are filled.
fn inv_next_column(next: &[BigInt]) -> Vec<BigInt> {
    let len = next.len() + 1;
    let top = if len.is_multiple_of(2) { -BigInt::one() } else { BigInt::one() };
    let mut col = Vec::with_capacity(len);
    col.push(top);
    for i in 2..=len {
        let mut entry = next[i - 2].clone();
        if let Some(right) = next.get(i - 1) {
            entry -= right * (i as u64);
        }
        col.push(entry);
    }
    col
}

impl PermMatrix {
    /// Builds the order-`n` matrix column by column, left to right.
    pub fn build(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder);
        }
        let mut columns: Vec<Vec<BigInt>> = Vec::with_capacity(order);
        columns.push(vec![BigInt::one()]);
        for j in 2..=order {
            let next = perm_next_column(&columns[j - 2], j);
            columns.push(next);
        }
        Ok(PermMatrix { order, columns })
    }

    /// Grows an order-`n` matrix into the order-`n+1` one. The existing
    /// packed columns carry over unchanged; only the new last column is
    /// computed.
    pub fn extend(&self) -> PermMatrix {
        let order = self.order + 1;
        let mut columns = self.columns.clone();
        columns.push(perm_next_column(self.columns.last().unwrap(), order));
        PermMatrix { order, columns }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Packed column `j` (1-based): entries for rows `n+1-j ..= n`.
    pub fn column(&self, j: usize) -> &[BigInt] {
        assert!(j >= 1 && j <= self.order, "column index out of range");
        &self.columns[j - 1]
    }

    /// Entry at 1-based `(i, j)`, materializing structural zeros.
    pub fn entry(&self, i: usize, j: usize) -> BigInt {
        assert!(i >= 1 && i <= self.order && j >= 1 && j <= self.order);
        if i + j < self.order + 1 {
            BigInt::zero()
        } else {
            self.columns[j - 1][i - (self.order + 1 - j)].clone()
        }
    }

    fn packed_get(&self, i: usize, j: usize) -> Option<&BigInt> {
        if i + j < self.order + 1 {
            None
        } else {
            Some(&self.columns[j - 1][i - (self.order + 1 - j)])
        }
    }

    /// Dense row-major view.
    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (1..=self.order)
            .map(|i| (1..=self.order).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Reads column `j` as the polynomial `sum_i a[i][j] * m^(n+1-i)`, the
    /// expanded rising factorial of length `j`.
    pub fn column_poly(&self, j: usize) -> Result<IntPoly> {
        if j == 0 || j > self.order {
            return Err(Error::ColumnOutOfRange { column: j, order: self.order });
        }
        let packed = &self.columns[j - 1];
        let mut coeffs = Vec::with_capacity(j + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(packed.iter().rev().cloned());
        Ok(IntPoly::from_coeffs(coeffs))
    }

    /// Rebuilds a matrix from packed columns, validating the shape.
    pub fn from_columns(order: usize, columns: Vec<Vec<BigInt>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder);
        }
        if columns.len() != order || columns.iter().enumerate().any(|(idx, c)| c.len() != idx + 1) {
            return Err(Error::InvalidSerialization(
                "permutation matrix columns must have lengths 1..=order".into(),
            ));
        }
        Ok(PermMatrix { order, columns })
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson::pack("perm", self.order, &self.columns)
    }

    pub fn from_json(json: &MatrixJson) -> Result<Self> {
        let (order, columns) = json.unpack("perm")?;
        PermMatrix::from_columns(order, columns)
    }
}

impl InvPermMatrix {
    /// Builds the order-`n` inverse column by column, right to left.
    pub fn build(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder);
        }
        let mut reversed: Vec<Vec<BigInt>> = Vec::with_capacity(order);
        reversed.push(vec![BigInt::one()]); // column n
        for _ in (1..order).rev() {
            let next = inv_next_column(reversed.last().unwrap());
            reversed.push(next);
        }
        reversed.reverse();
        Ok(InvPermMatrix { order, columns: reversed })
    }

    /// Grows an order-`n` inverse into the order-`n+1` one by prepending a
    /// fresh first column; everything else carries over unchanged.
    pub fn extend(&self) -> InvPermMatrix {
        let order = self.order + 1;
        let mut columns = Vec::with_capacity(order);
        columns.push(inv_next_column(&self.columns[0]));
        columns.extend(self.columns.iter().cloned());
        InvPermMatrix { order, columns }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Packed column `j` (1-based): entries for rows `1 ..= n+1-j`.
    pub fn column(&self, j: usize) -> &[BigInt] {
        assert!(j >= 1 && j <= self.order, "column index out of range");
        &self.columns[j - 1]
    }

    /// Entry at 1-based `(i, j)`, materializing structural zeros.
    pub fn entry(&self, i: usize, j: usize) -> BigInt {
        assert!(i >= 1 && i <= self.order && j >= 1 && j <= self.order);
        if i + j > self.order + 1 {
            BigInt::zero()
        } else {
            self.columns[j - 1][i - 1].clone()
        }
    }

    fn packed_get(&self, i: usize, j: usize) -> Option<&BigInt> {
        if i + j > self.order + 1 {
            None
        } else {
            Some(&self.columns[j - 1][i - 1])
        }
    }

    /// Dense row-major view.
    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (1..=self.order)
            .map(|i| (1..=self.order).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Rebuilds a matrix from packed columns, validating the shape.
    pub fn from_columns(order: usize, columns: Vec<Vec<BigInt>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder);
        }
        if columns.len() != order
            || columns.iter().enumerate().any(|(idx, c)| c.len() != order - idx)
        {
            return Err(Error::InvalidSerialization(
                "inverse matrix columns must have lengths order..=1".into(),
            ));
        }
        Ok(InvPermMatrix { order, columns })
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson::pack("inv", self.order, &self.columns)
    }

    pub fn from_json(json: &MatrixJson) -> Result<Self> {
        let (order, columns) = json.unpack("inv")?;
        InvPermMatrix::from_columns(order, columns)
    }
}

/// Multiplies `a * b` in exact integers and compares against the identity.
/// The structural zero pattern narrows each dot product to the index range
/// where both factors can be nonzero.
pub fn verify_inverse(a: &PermMatrix, b: &InvPermMatrix) -> Result<bool> {
    let n = a.order();
    if n != b.order() {
        return Err(Error::OrderMismatch { left: n, right: b.order() });
    }
    for i in 1..=n {
        for k in 1..=n {
            let mut sum = BigInt::zero();
            // a[i][j] vanishes for j < n+1-i, b[j][k] for j > n+1-k
            for j in (n + 1 - i)..=(n + 1 - k).min(n) {
                if let (Some(x), Some(y)) = (a.packed_get(i, j), b.packed_get(j, k)) {
                    sum += x * y;
                }
            }
            let expected = if i == k { BigInt::one() } else { BigInt::zero() };
            if sum != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Wire format for both matrix kinds: decimal strings because entries exceed
/// the 64-bit range, columns holding only the structurally-nonzero entries
/// top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub order: usize,
    pub kind: String,
    pub columns: Vec<Vec<String>>,
}

impl MatrixJson {
    fn pack(kind: &str, order: usize, columns: &[Vec<BigInt>]) -> MatrixJson {
        MatrixJson {
            order,
            kind: kind.to_owned(),
            columns: columns
                .iter()
                .map(|col| col.iter().map(BigInt::to_string).collect())
                .collect(),
        }
    }

    fn unpack(&self, expected_kind: &str) -> Result<(usize, Vec<Vec<BigInt>>)> {
        if self.kind != expected_kind {
            return Err(Error::InvalidSerialization(format!(
                "expected kind \"{expected_kind}\", found \"{}\"",
                self.kind
            )));
        }
        let columns = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|s| {
                        s.parse::<BigInt>().map_err(|_| {
                            Error::InvalidSerialization(format!("bad integer entry {s:?}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((self.order, columns))
    }
}
