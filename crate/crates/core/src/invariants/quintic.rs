//! Invariants of degree-5 models through covariants of the Pfaffians.

use std::sync::OnceLock;

use num_traits::Zero;

use super::{expect_degree, InvariantTriple};
use crate::error::{Error, Result};
use crate::exactmath::{coefficient_matrix, rat, Monomial, Poly, PolyMatrix, Rational, Vars};
use crate::models::{submaximal_pfaffians, GenusOneModel};

/// Dual coordinates `v1*..v5*`, written `w1..w5`.
pub fn ring_w() -> &'static Vars {
    static CELL: OnceLock<Vars> = OnceLock::new();
    CELL.get_or_init(|| Vars::indexed("w", 5))
}

pub fn ring_v() -> &'static Vars {
    static CELL: OnceLock<Vars> = OnceLock::new();
    CELL.get_or_init(|| Vars::indexed("v", 5))
}

/// `v1..v5` followed by `lambda`.
pub fn ring_v_lambda() -> &'static Vars {
    static CELL: OnceLock<Vars> = OnceLock::new();
    CELL.get_or_init(|| ring_v().extended(&["lambda"]))
}

/// The covariants of a degree-5 model used to evaluate its invariants.
#[derive(Clone, Debug)]
pub struct Deg5Covariants {
    /// The submaximal Pfaffians `p1..p5`.
    pub p: [Poly; 5],
    /// `S = det(dp_i/dx_j)`.
    pub s: Poly,
    /// Quadrics in `v1..v5` with `dS/dx_i = q_i(p1, ..., p5)`.
    pub q: [Poly; 5],
    /// `M = det(sum_k d^2 p_k/dx_i dx_j w_k)`, a quintic in `w1..w5`.
    pub m: Poly,
    /// `N = det(lambda dq_i/dv_j + sum_k dphi_jk/dx_i v_k)`, a quintic in
    /// `v1..v5` with coefficients in `lambda`.
    pub n: Poly,
}

/// The coefficients of `<M, N_lambda>` as a polynomial in `lambda`, from
/// `lambda^0` to `lambda^5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction(pub [Rational; 6]);

fn to_array5(v: Vec<Poly>) -> [Poly; 5] {
    let mut it = v.into_iter();
    std::array::from_fn(|_| it.next().expect("five entries"))
}

/// Computes `p`, `S`, `q`, `M` and `N`. Returns `None` when the
/// quartics `p_i p_j` are linearly dependent (the invariants are then zero).
pub fn deg5_covariants(model: &GenusOneModel) -> Result<Option<Deg5Covariants>> {
    expect_degree(model, 5)?;
    let phi = model.matrix().expect("degree 5");
    let p = submaximal_pfaffians(&phi)?;

    let mut products = Vec::with_capacity(15);
    for i in 0..5 {
        for j in i..5 {
            products.push(&p[i] * &p[j]);
        }
    }
    let pp = coefficient_matrix(&products, 4);
    if pp.rank() < 15 {
        return Ok(None);
    }

    let jac = PolyMatrix::from_fn(5, 5, |i, j| p[i].derivative(j));
    let s = jac.determinant()?;

    // dS/dx_i = sum_{j<=k} c_jk p_j p_k: 70 equations in 15 unknowns.
    let system = pp.transpose();
    let v = ring_v();
    let mut q = Vec::with_capacity(5);
    for i in 0..5 {
        let rhs = s.derivative(i).dense_form(4);
        let c = system
            .solve(&rhs)?
            .ok_or_else(|| Error::Internal("auxiliary quadrics do not exist".into()))?;
        let mut qi = Poly::zero(v);
        let mut idx = 0;
        for j in 0..5 {
            for k in j..5 {
                let vjk = &Poly::var(v, j) * &Poly::var(v, k);
                qi = &qi + &vjk.scale(&c[idx]);
                idx += 1;
            }
        }
        q.push(qi);
    }
    let q = to_array5(q);

    let w = ring_w();
    let m = PolyMatrix::from_fn(5, 5, |i, j| {
        let coeffs: Vec<Rational> = p
            .iter()
            .map(|pk| {
                pk.derivative(i)
                    .derivative(j)
                    .as_constant()
                    .expect("second derivative of a quadric")
            })
            .collect();
        Poly::linear(w, &coeffs)
    })
    .determinant()?;

    let vl = ring_v_lambda();
    let lambda = Poly::var(vl, 5);
    let n = PolyMatrix::from_fn(5, 5, |i, j| {
        let dq = q[i].derivative(j).embed(vl).expect("v ring embeds");
        let coeffs: Vec<Rational> = (0..5)
            .map(|k| {
                phi.get(j, k)
                    .derivative(i)
                    .as_constant()
                    .expect("derivative of a linear form")
            })
            .chain(std::iter::once(Rational::zero()))
            .collect();
        &(&lambda * &dq) + &Poly::linear(vl, &coeffs)
    })
    .determinant()?;

    Ok(Some(Deg5Covariants { p, s, q, m, n }))
}

/// `<M, N> = sum_alpha M_alpha N_alpha alpha!`, taken coefficientwise in
/// `lambda`. With this normalisation the result is exactly
/// `40 c4 lambda - 320 c6 lambda^3 + 128 c8 lambda^5`; no further scale is
/// needed.
pub fn contract(m: &Poly, n: &Poly) -> Contraction {
    let mut out: [Rational; 6] = std::array::from_fn(|_| Rational::zero());
    for (mono, c) in n.terms() {
        let e = mono.exponents();
        let (alpha, k) = (&e[..5], e[5] as usize);
        let mc = m.coeff_of(alpha);
        if mc.is_zero() {
            continue;
        }
        let weight = Rational::from_integer(Monomial::new(alpha.to_vec()).factorial_weight());
        out[k] += mc * c * weight;
    }
    Contraction(out)
}

/// `(c4, c6, c8)` read off a contraction, after checking the parity and
/// `c8 = c4^2` conditions.
pub fn read_contraction(r: &Contraction) -> Result<(Rational, Rational, Rational)> {
    let [r0, r1, r2, r3, r4, r5] = &r.0;
    if !(r0.is_zero() && r2.is_zero() && r4.is_zero()) {
        return Err(Error::Internal(
            "even powers of lambda in <M, N> do not vanish".into(),
        ));
    }
    let c4 = r1 / rat(40);
    let c6 = r3 / rat(-320);
    let c8 = r5 / rat(128);
    if c8 != &c4 * &c4 {
        return Err(Error::Internal(format!("c8 = {c8} differs from c4^2 = {}", &c4 * &c4)));
    }
    Ok((c4, c6, c8))
}

pub fn invariants_deg5(model: &GenusOneModel) -> Result<InvariantTriple> {
    let Some(cov) = deg5_covariants(model)? else {
        return Ok(InvariantTriple::zero());
    };
    let (c4, c6, _) = read_contraction(&contract(&cov.m, &cov.n))?;
    Ok(InvariantTriple::from_c4_c6(c4, c6))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::weierstrass_model;

    fn pi5(a: [i64; 5]) -> GenusOneModel {
        weierstrass_model(&GenusOneModel::weierstrass(a.map(rat)), 5).unwrap()
    }

    #[test]
    fn calibration_models() {
        let cov = deg5_covariants(&pi5([0, 0, 0, -1, 0])).unwrap().unwrap();
        let r = contract(&cov.m, &cov.n);
        assert_eq!(r.0.to_vec(), [0, 1920, 0, 0, 0, 294912].map(rat).to_vec());
        assert_eq!(read_contraction(&r).unwrap(), (rat(48), rat(0), rat(2304)));
        let inv = invariants_deg5(&pi5([0, 0, 0, 0, 1])).unwrap();
        assert_eq!((inv.c4, inv.c6, inv.delta), (rat(0), rat(-864), rat(-432)));
    }

    #[test]
    fn auxiliary_quadrics_satisfy_their_identity() {
        for a in [[0, 0, 0, -1, 0], [0, 0, 0, 2, -3]] {
            let cov = deg5_covariants(&pi5(a)).unwrap().unwrap();
            assert!(!cov.s.is_zero());
            assert!(cov.s.is_homogeneous_of_degree(5));
            for i in 0..5 {
                assert_eq!(cov.q[i].substitute(&cov.p), cov.s.derivative(i));
            }
        }
    }

    #[test]
    fn zero_matrix_is_degenerate() {
        let z = GenusOneModel::zero(5).unwrap();
        assert!(deg5_covariants(&z).unwrap().is_none());
        assert_eq!(invariants_deg5(&z).unwrap(), InvariantTriple::zero());
    }

    #[test]
    fn parity_violations_are_internal_errors() {
        let bad = Contraction([1, 40, 0, 0, 0, 128].map(rat));
        assert!(matches!(read_contraction(&bad), Err(Error::Internal(_))));
        let bad = Contraction([0, 40, 0, 0, 0, 256].map(rat));
        assert!(matches!(read_contraction(&bad), Err(Error::Internal(_))));
    }
}
