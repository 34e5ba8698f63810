//! Exact arithmetic: rationals, sparse polynomials, polynomial matrices and
//! fraction-free linear algebra.

pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod rational;

pub use linalg::RatMatrix;
pub use matrix::PolyMatrix;
pub use poly::{monomials_of_degree, Monomial, Poly, Vars};
pub use rational::{format_rational, is_integral, mod2, parse_rational, rat, ratio, Rational};

use crate::error::Result;

pub fn partial_derivative(p: &Poly, var: &str) -> Result<Poly> {
    p.partial_derivative(var)
}

pub fn determinant(m: &PolyMatrix) -> Result<Poly> {
    m.determinant()
}

pub fn pfaffian4(m: &PolyMatrix) -> Result<Poly> {
    m.pfaffian4()
}

pub fn solve_linear(a: &RatMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    a.solve(b)
}

pub fn rank(a: &RatMatrix) -> usize {
    a.rank()
}

pub fn exact_divide(num: &Poly, den: &Poly) -> Result<Option<Poly>> {
    num.exact_divide(den)
}

/// Coefficient matrix of a list of forms of degree `d`: one row per form,
/// columns in descending graded-lex monomial order.
pub fn coefficient_matrix(forms: &[Poly], d: u16) -> RatMatrix {
    let rows: Vec<Vec<Rational>> = forms.iter().map(|p| p.dense_form(d)).collect();
    let cols = rows.first().map_or(0, Vec::len);
    RatMatrix::new(forms.len(), cols, rows.into_iter().flatten().collect())
        .expect("rows of equal length")
}
