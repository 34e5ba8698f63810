//! Invariants of models of degree 1 to 4.

use std::sync::OnceLock;

use super::{expect_degree, InvariantTriple, TateQuantities};
use crate::error::{Error, Result};
use crate::exactmath::{rat, ratio, Poly, PolyMatrix, Rational, Vars};
use crate::models::{quadric_matrix, GenusOneModel};

pub fn tate_quantities(m: &GenusOneModel) -> Result<TateQuantities> {
    expect_degree(m, 1)?;
    let [a1, a2, a3, a4, a6] = m.weierstrass_coefficients().expect("degree 1");
    Ok(TateQuantities {
        b2: a1 * a1 + rat(4) * a2,
        b4: rat(2) * a4 + a1 * a3,
        b6: a3 * a3 + rat(4) * a6,
        b8: a1 * a1 * a6 + rat(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4,
    })
}

pub fn invariants_deg1(m: &GenusOneModel) -> Result<InvariantTriple> {
    let TateQuantities { b2, b4, b6, b8 } = tate_quantities(m)?;
    let c4 = &b2 * &b2 - rat(24) * &b4;
    let c6 = -(&b2 * &b2 * &b2) + rat(36) * &b2 * &b4 - rat(216) * &b6;
    let delta = -(&b2 * &b2 * &b8) - rat(8) * &b4 * &b4 * &b4 - rat(27) * &b6 * &b6
        + rat(9) * &b2 * &b4 * &b6;
    Ok(InvariantTriple { c4, c6, delta })
}

/// `(12ae - 3bd + c^2, 72ace - 27ad^2 - 27b^2e + 9bcd - 2c^3)` of a binary
/// quartic `(a, b, c, d, e)`.
pub(crate) fn quartic_invariants(f: &[Rational]) -> (Rational, Rational) {
    let [a, b, c, d, e] = [&f[0], &f[1], &f[2], &f[3], &f[4]];
    let i = rat(12) * a * e - rat(3) * b * d + c * c;
    let j = rat(72) * a * c * e - rat(27) * a * d * d - rat(27) * b * b * e + rat(9) * b * c * d
        - rat(2) * c * c * c;
    (i, j)
}

pub fn invariants_deg2(m: &GenusOneModel) -> Result<InvariantTriple> {
    expect_degree(m, 2)?;
    let (p, q) = m.binary_forms().expect("degree 2");
    // y^2 + p y = q becomes (y + p/2)^2 = q + p^2/4.
    let f = &q + &(&p * &p).scale(&ratio(1, 4));
    let (i, j) = quartic_invariants(&f.dense_form(4));
    Ok(InvariantTriple::from_c4_c6(rat(16) * i, rat(32) * j))
}

/// `H(U) = -1/2 det(d^2 U / dx_i dx_j)` over the first three variables of
/// `u`'s ring.
pub fn hessian(u: &Poly) -> Poly {
    let second = PolyMatrix::from_fn(3, 3, |i, j| u.derivative(i).derivative(j));
    second
        .determinant()
        .expect("3x3 matrix")
        .scale(&ratio(-1, 2))
}

fn ring_xyz_mu() -> &'static Vars {
    static CELL: OnceLock<Vars> = OnceLock::new();
    CELL.get_or_init(|| Vars::new(&["x", "y", "z", "mu"]))
}

/// Reads `c4` and `c6` off `H(U + mu H) = 3(c4 mu + 2 c6 mu^2 + c4^2 mu^3) U
/// + (1 - 3 c4 mu^2 - 2 c6 mu^3) H` by exact division.
pub fn invariants_deg3(m: &GenusOneModel) -> Result<InvariantTriple> {
    expect_degree(m, 3)?;
    let u = m.cubic().expect("degree 3");
    if u.is_zero() {
        return Ok(InvariantTriple::zero());
    }
    let v = ring_xyz_mu();
    let u = u.embed(v)?;
    let h = hessian(&u);
    let mu = Poly::var(v, 3);
    let hh = hessian(&(&u + &(&mu * &h)));
    let scalar_quotient = |num: &Poly, den: &Poly| -> Result<Rational> {
        num.exact_divide(den)?
            .and_then(|q| q.as_constant())
            .ok_or_else(|| Error::Internal("Hessian syzygy division failed".into()))
    };
    let c4 = scalar_quotient(&hh.coefficient_in(3, 1), &u.scale(&rat(3)))?;
    let num = &hh.coefficient_in(3, 2) + &h.scale(&(rat(3) * &c4));
    let c6 = scalar_quotient(&num, &u.scale(&rat(6)))?;
    Ok(InvariantTriple::from_c4_c6(c4, c6))
}

fn ring_st() -> &'static Vars {
    static CELL: OnceLock<Vars> = OnceLock::new();
    CELL.get_or_init(|| Vars::new(&["s", "t"]))
}

/// The binary quartic `det(sA + tB)` of a quadric pair, as `(a, b, c, d, e)`.
pub fn quadric_pair_quartic(m: &GenusOneModel) -> Result<Vec<Rational>> {
    expect_degree(m, 4)?;
    let (q1, q2) = m.quadrics().expect("degree 4");
    let (a, b) = (quadric_matrix(&q1), quadric_matrix(&q2));
    let v = ring_st();
    let (s, t) = (Poly::var(v, 0), Poly::var(v, 1));
    let pencil = PolyMatrix::from_fn(4, 4, |i, j| &s.scale(a.get(i, j)) + &t.scale(b.get(i, j)));
    Ok(pencil.determinant()?.dense_form(4))
}

pub fn invariants_deg4(m: &GenusOneModel) -> Result<InvariantTriple> {
    let f = quadric_pair_quartic(m)?;
    let (i, j) = quartic_invariants(&f);
    Ok(InvariantTriple::from_c4_c6(i, j * ratio(1, 2)))
}
