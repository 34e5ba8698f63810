//! Projection of a degree-5 model away from a rational point.

use num_traits::Zero;

use super::model::{equations, ring_x4, GenusOneModel};
use crate::error::{Error, Result};
use crate::exactmath::{Poly, RatMatrix, Rational};

/// Projects the curve of a degree-5 model away from a smooth point `P` on it.
///
/// Coordinates are changed so that `P = (0:0:0:0:1)` and the tangent line at
/// `P` is `x1 = x2 = x3 = 0`. The Pfaffian quadrics then involve `x5` only
/// through `x1 x5`, `x2 x5`, `x3 x5`, and the two combinations killing those
/// terms define the projected curve in `P^3`.
pub fn project_from_point(m: &GenusOneModel, point: &[Rational]) -> Result<GenusOneModel> {
    if m.degree() != 5 {
        return Err(Error::UnsupportedDegree {
            degree: m.degree(),
            what: "projection (only 5 -> 4 is supported)",
        });
    }
    if point.len() != 5 || point.iter().all(Zero::is_zero) {
        return Err(Error::InvalidModel(
            "point must have five coordinates, not all zero".into(),
        ));
    }
    let p = equations(m);
    if p.iter().any(|q| !q.evaluate(point).is_zero()) {
        return Err(Error::PointNotOnCurve);
    }
    let jac = RatMatrix::from_rows(
        p.iter()
            .map(|q| (0..5).map(|j| q.derivative(j).evaluate(point)).collect())
            .collect(),
    )?;
    let r = jac.rank();
    if r < 3 {
        return Err(Error::SingularPoint(r));
    }
    // The kernel of J(P) is the tangent line; it contains P itself.
    let tangent = jac
        .kernel()
        .into_iter()
        .find(|k| rank_of(&[point.to_vec(), k.clone()]) == 2)
        .ok_or_else(|| Error::DegenerateProjection("no tangent direction".into()))?;
    let mut basis: Vec<Vec<Rational>> = vec![tangent, point.to_vec()];
    let mut completion = Vec::new();
    for i in 0..5 {
        if completion.len() == 3 {
            break;
        }
        let mut e = vec![Rational::zero(); 5];
        e[i] = Rational::from_integer(1.into());
        let mut trial = basis.clone();
        trial.push(e.clone());
        if rank_of(&trial) == trial.len() {
            basis = trial;
            completion.push(e);
        }
    }
    // Columns c1, c2, c3, T, P.
    let cols: Vec<&Vec<Rational>> = completion.iter().chain(basis.iter().take(2)).collect();
    let v = p[0].vars().clone();
    let images: Vec<Poly> = (0..5)
        .map(|j| {
            let row: Vec<Rational> = cols.iter().map(|c| c[j].clone()).collect();
            Poly::linear(&v, &row)
        })
        .collect();
    let moved: Vec<Poly> = p.iter().map(|q| q.substitute(&images)).collect();
    // Coefficients of x_k x5 for k = 1, 2, 3.
    let c = RatMatrix::from_rows(
        moved
            .iter()
            .map(|q| {
                (0..3)
                    .map(|k| {
                        let mut e = [0u16; 5];
                        e[k] = 1;
                        e[4] = 1;
                        q.coeff_of(&e)
                    })
                    .collect()
            })
            .collect(),
    )?;
    let combos = c.transpose().kernel();
    if combos.len() < 2 {
        return Err(Error::DegenerateProjection(
            "fewer than two quadrics survive elimination".into(),
        ));
    }
    let x4 = ring_x4();
    let restrict: Vec<Poly> = (0..4)
        .map(|i| Poly::var(x4, i))
        .chain(std::iter::once(Poly::zero(x4)))
        .collect();
    let quadrics: Vec<Poly> = combos
        .iter()
        .take(2)
        .map(|lam| {
            let q = moved
                .iter()
                .zip(lam)
                .fold(Poly::zero(&v), |acc, (q, l)| &acc + &q.scale(l));
            debug_assert!(q.degree_in(4) == 0);
            q.substitute(&restrict)
        })
        .collect();
    let dense: Vec<Vec<Rational>> = quadrics.iter().map(|q| q.dense_form(2)).collect();
    if rank_of(&dense) < 2 {
        return Err(Error::DegenerateProjection(
            "surviving quadrics are dependent".into(),
        ));
    }
    GenusOneModel::from_quadrics(&quadrics[0], &quadrics[1])
}

fn rank_of(rows: &[Vec<Rational>]) -> usize {
    RatMatrix::from_rows(rows.to_vec())
        .map(|m| m.rank())
        .unwrap_or(0)
}
