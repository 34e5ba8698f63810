//! Invariants `c4`, `c6`, `Delta`, the Jacobian and related covariants.

pub mod char2;
pub mod classical;
pub mod discriminant;
pub mod quintic;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{rat, Rational};
use crate::models::GenusOneModel;

pub use char2::a1_char2;
pub use classical::{
    hessian, invariants_deg1, invariants_deg2, invariants_deg3, invariants_deg4,
    tate_quantities,
};
pub use discriminant::{
    discriminant_deg3_matrix, discriminant_deg4_matrix, discriminant_deg5_matrix,
    discriminant_matrix, discriminant_via_matrix, omega_deg4, omega_deg5, OmegaQuadrics,
};
pub use quintic::{deg5_covariants, invariants_deg5, Deg5Covariants};

/// `(c4, c6, Delta)` with `c4^3 - c6^2 = 1728 Delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTriple {
    pub c4: Rational,
    pub c6: Rational,
    pub delta: Rational,
}

impl InvariantTriple {
    pub fn zero() -> Self {
        InvariantTriple {
            c4: Rational::zero(),
            c6: Rational::zero(),
            delta: Rational::zero(),
        }
    }

    pub fn from_c4_c6(c4: Rational, c6: Rational) -> Self {
        let delta = (&c4 * &c4 * &c4 - &c6 * &c6) / rat(1728);
        InvariantTriple { c4, c6, delta }
    }

    pub fn is_integral(&self) -> bool {
        self.c4.is_integer() && self.c6.is_integer() && self.delta.is_integer()
    }
}

/// `b2, b4, b6, b8` of a Weierstrass equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TateQuantities {
    pub b2: Rational,
    pub b4: Rational,
    pub b6: Rational,
    pub b8: Rational,
}

pub(crate) fn expect_degree(m: &GenusOneModel, d: u8) -> Result<()> {
    if m.degree() == d {
        Ok(())
    } else {
        Err(Error::DegreeMismatch {
            expected: d,
            found: m.degree(),
        })
    }
}

/// The invariants of a model of any degree.
pub fn invariants(m: &GenusOneModel) -> Result<InvariantTriple> {
    match m.degree() {
        1 => invariants_deg1(m),
        2 => invariants_deg2(m),
        3 => invariants_deg3(m),
        4 => invariants_deg4(m),
        _ => invariants_deg5(m),
    }
}

/// `y^2 = x^3 - 27 c4 x - 54 c6`.
pub fn jacobian(m: &GenusOneModel) -> Result<GenusOneModel> {
    let inv = invariants(m)?;
    if inv.delta.is_zero() {
        return Err(Error::Singular);
    }
    Ok(GenusOneModel::weierstrass([
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        rat(-27) * inv.c4,
        rat(-54) * inv.c6,
    ]))
}

/// `j = c4^3 / Delta`.
pub fn j_invariant(m: &GenusOneModel) -> Result<Rational> {
    let inv = invariants(m)?;
    if inv.delta.is_zero() {
        return Err(Error::Singular);
    }
    Ok(&inv.c4 * &inv.c4 * &inv.c4 / inv.delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::weierstrass_model;

    fn w(a: [i64; 5]) -> GenusOneModel {
        GenusOneModel::weierstrass(a.map(rat))
    }

    #[test]
    fn j_examples() {
        assert_eq!(j_invariant(&w([0, 0, 0, -1, 0])).unwrap(), rat(1728));
        assert_eq!(j_invariant(&w([0, 0, 0, 0, 1])).unwrap(), rat(0));
        assert_eq!(j_invariant(&w([0, 0, 0, -3, 2])), Err(Error::Singular));
    }

    #[test]
    fn jacobian_of_pi5() {
        let m = weierstrass_model(&w([0, 0, 0, -1, 0]), 5).unwrap();
        assert_eq!(jacobian(&m).unwrap(), w([0, 0, 0, -1296, 0]));
    }
}
