//! The Weierstrass family: degree-1 models written as models of degree `n`.

use num_traits::{One, Zero};

use super::model::{ring_x4, ring_x5, GenusOneModel};
use crate::error::{Error, Result};
use crate::exactmath::{Poly, PolyMatrix, Rational};

/// `pi_n(w)` for a Weierstrass model `w` and `n` in `1..=5`.
///
/// * `n = 2`: `y^2 + (a1 xz + a3 z^2) y = x^3 z + a2 x^2 z^2 + a4 x z^3 + a6 z^4`
/// * `n = 3`: the homogenised Weierstrass cubic in `(x, y, z)`
/// * `n = 4`: `x1 x4 - x2^2` and
///   `x3^2 + a1 x2 x3 + a3 x1 x3 - x2 x4 - a2 x2^2 - a4 x1 x2 - a6 x1^2`
/// * `n = 5`: the alternating matrix with upper triangle
///   `l, x5, x4, x3 / x4, x3, x2 / -x2, 0 / x1` where
///   `l = a1 x5 - a2 x4 + a3 x3 - a4 x2 - a6 x1`.
pub fn weierstrass_model(w: &GenusOneModel, n: u8) -> Result<GenusOneModel> {
    let a = w.weierstrass_coefficients().ok_or(Error::DegreeMismatch {
        expected: 1,
        found: w.degree(),
    })?;
    let [a1, a2, a3, a4, a6] = a.clone();
    let zero = Rational::zero;
    let one = Rational::one;
    Ok(match n {
        1 => w.clone(),
        2 => GenusOneModel::BinaryQuartic {
            p: [zero(), a1, a3],
            q: [zero(), one(), a2, a4, a6],
        },
        3 => {
            // a, b, c, a2, a3, b1, b3, c1, c2, m
            GenusOneModel::TernaryCubic([
                -one(),
                zero(),
                -a6,
                zero(),
                -a2,
                zero(),
                one(),
                -a4,
                a3,
                a1,
            ])
        }
        4 => {
            let v = ring_x4();
            let x = |i: usize| Poly::var(v, i);
            let q1 = &(&x(0) * &x(3)) - &(&x(1) * &x(1));
            let terms = [
                (x(2) * x(2), one()),
                (x(1) * x(2), a1),
                (x(0) * x(2), a3),
                (x(1) * x(3), -one()),
                (x(1) * x(1), -a2),
                (x(0) * x(1), -a4),
                (x(0) * x(0), -a6),
            ];
            let q2 = terms
                .iter()
                .fold(Poly::zero(v), |acc, (m, c)| &acc + &m.scale(c));
            GenusOneModel::from_quadrics(&q1, &q2)?
        }
        5 => {
            let v = ring_x5();
            let x = |i: usize| Poly::var(v, i);
            let l = Poly::linear(v, &[-a6, -a4, a3, -a2, a1]);
            let upper = [
                l,
                x(4),
                x(3),
                x(2),
                x(3),
                x(2),
                x(1),
                -x(1),
                Poly::zero(v),
                x(0),
            ];
            GenusOneModel::from_matrix(&PolyMatrix::alternating_from_upper(5, &upper)?)?
        }
        d => {
            return Err(Error::UnsupportedDegree {
                degree: d,
                what: "the Weierstrass family",
            })
        }
    })
}
