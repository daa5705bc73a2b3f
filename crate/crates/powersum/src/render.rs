//! Text and LaTeX rendering of formulas, generating functions and matrices.
//!
//! Closed forms print in descending degree with unit coefficients and zero
//! terms suppressed, e.g. `n^5/5 + n^4/2 + n^3/3 - n/30`. Generating
//! functions print as `x(1+11x+11x^2+x^3)/(1-x)^5`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::closedform::PowerSumFormula;
use crate::exact::{BigInt, BigRational, IntPoly, RatPoly};
use crate::genfun::GenFun;

fn signed_join(terms: &[(bool, String)]) -> String {
    let mut out = String::new();
    for (idx, (negative, body)) in terms.iter().enumerate() {
        if idx == 0 {
            if *negative {
                out.push('-');
            }
        } else {
            out.push_str(if *negative { " - " } else { " + " });
        }
        out.push_str(body);
    }
    out
}

fn text_term(magnitude: &BigRational, degree: usize) -> String {
    let num = magnitude.numer();
    let den = magnitude.denom();
    let mut body = String::new();
    if degree == 0 {
        body.push_str(&num.to_string());
    } else {
        if !num.is_one() {
            body.push_str(&num.to_string());
        }
        body.push('n');
        if degree > 1 {
            body.push_str(&format!("^{degree}"));
        }
    }
    if !den.is_one() {
        body.push_str(&format!("/{den}"));
    }
    body
}

fn latex_term(magnitude: &BigRational, degree: usize) -> String {
    let num = magnitude.numer();
    let den = magnitude.denom();
    let variable = match degree {
        0 => String::new(),
        1 => "n".to_owned(),
        d => format!("n^{{{d}}}"),
    };
    let numerator = if degree == 0 {
        num.to_string()
    } else if num.is_one() {
        variable.clone()
    } else {
        format!("{num} {variable}")
    };
    if den.is_one() {
        numerator
    } else {
        format!("\\frac{{{numerator}}}{{{den}}}")
    }
}

/// Polynomial in `n`, descending degree, `text` or `latex` flavor selected by
/// the term renderer.
fn poly_render(p: &RatPoly, term: fn(&BigRational, usize) -> String) -> String {
    let terms: Vec<(bool, String)> = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(degree, c)| (c.is_negative(), term(&c.abs(), degree)))
        .collect();
    if terms.is_empty() {
        return "0".to_owned();
    }
    signed_join(&terms)
}

pub fn poly_text(p: &RatPoly) -> String {
    poly_render(p, text_term)
}

pub fn poly_latex(p: &RatPoly) -> String {
    poly_render(p, latex_term)
}

/// Numerator polynomial in the compact genfun style: ascending powers of
/// `x`, no whitespace, e.g. `1+11x+11x^2+x^3`.
fn numerator_compact(p: &IntPoly) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push(if negative { '-' } else { '+' });
        }
        let magnitude = c.abs();
        if k == 0 || !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
        }
        if k >= 1 {
            out.push('x');
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn genfun_text(g: &GenFun) -> String {
    let p = g.pole_order();
    let numerator = g.numerator();
    if numerator.is_zero() {
        return "0".to_owned();
    }
    if numerator.degree() == Some(0) {
        let c = numerator.coeff(0);
        if c.is_one() {
            return format!("x/(1-x)^{p}");
        }
        return format!("{c}x/(1-x)^{p}");
    }
    format!("x({})/(1-x)^{p}", numerator_compact(numerator))
}

pub fn genfun_latex(g: &GenFun) -> String {
    let p = g.pole_order();
    let numerator = g.numerator();
    if numerator.is_zero() {
        return "0".to_owned();
    }
    let top = if numerator.degree() == Some(0) {
        let c = numerator.coeff(0);
        if c.is_one() {
            "x".to_owned()
        } else {
            format!("{c}x")
        }
    } else {
        format!("x({})", numerator_compact(numerator))
    };
    format!("\\frac{{{top}}}{{(1-x)^{{{p}}}}}")
}

/// Right-aligned grid of matrix entries, one row per line.
pub fn matrix_grid(rows: &[Vec<BigInt>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|e| e.to_string().len())
        .max()
        .unwrap_or(1);
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|e| format!("{:>width$}", e.to_string()))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn matrix_latex(rows: &[Vec<BigInt>]) -> String {
    let body = rows
        .iter()
        .map(|row| row.iter().map(BigInt::to_string).collect::<Vec<_>>().join(" & "))
        .collect::<Vec<_>>()
        .join(" \\\\\n");
    format!("\\begin{{pmatrix}}\n{body}\n\\end{{pmatrix}}")
}

impl fmt::Display for GenFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&genfun_text(self))
    }
}

impl fmt::Display for PowerSumFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly_text(self.polynomial()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::power_sum_formula;
    use crate::genfun::{power_genfun, rising_genfun};
    use crate::genmatrix::{InvPermMatrix, PermMatrix};

    #[test]
    fn formula_text_matches_expected_layout() {
        let f4 = power_sum_formula(4, None).unwrap();
        assert_eq!(f4.to_string(), "n^5/5 + n^4/2 + n^3/3 - n/30");
        let f1 = power_sum_formula(1, None).unwrap();
        assert_eq!(f1.to_string(), "n^2/2 + n/2");
        let f12 = power_sum_formula(12, None).unwrap();
        assert_eq!(
            f12.to_string(),
            "n^13/13 + n^12/2 + n^11 - 11n^9/6 + 22n^7/7 - 33n^5/10 + 5n^3/3 - 691n/2730"
        );
    }

    #[test]
    fn formula_latex_has_eight_terms_for_t12() {
        let f12 = power_sum_formula(12, None).unwrap();
        let latex = poly_latex(f12.polynomial());
        assert_eq!(latex.matches("n^{").count() + latex.matches("n}").count(), 8);
        assert!(latex.contains("\\frac{691 n}{2730}"));
        assert!(latex.starts_with("\\frac{n^{13}}{13}"));
    }

    #[test]
    fn genfun_strings() {
        let inv = InvPermMatrix::build(4).unwrap();
        let g = power_genfun(4, &inv).unwrap();
        assert_eq!(genfun_text(&g), "x(1+11x+11x^2+x^3)/(1-x)^5");
        assert_eq!(genfun_text(&g.prefix_sum()), "x(1+11x+11x^2+x^3)/(1-x)^6");
        assert_eq!(genfun_text(&rising_genfun(1).unwrap()), "x/(1-x)^2");
        assert_eq!(genfun_text(&rising_genfun(4).unwrap()), "24x/(1-x)^5");
        assert_eq!(
            genfun_latex(&g),
            "\\frac{x(1+11x+11x^2+x^3)}{(1-x)^{5}}"
        );
    }

    #[test]
    fn matrix_grid_alignment() {
        let a = PermMatrix::build(4).unwrap();
        let grid = matrix_grid(&a.rows());
        let expected = " 0  0  0  1\n 0  0  1  6\n 0  1  3 11\n 1  1  2  6";
        assert_eq!(grid, expected);
    }
}
