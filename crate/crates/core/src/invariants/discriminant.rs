//! Discriminants as determinants of coefficient matrices of covariant
//! quadrics.

use num_traits::{One, Zero};

use super::classical::{hessian, quadric_pair_quartic};
use super::expect_degree;
use crate::error::{Error, Result};
use crate::exactmath::{coefficient_matrix, rat, Poly, PolyMatrix, RatMatrix, Rational, Vars};
use crate::models::{
    apply, quadric_from_matrix, quadric_matrix, submaximal_pfaffians, GenusOneModel,
    Transformation,
};

/// Fixed signs relating each determinant to `kappa * Delta` for the row and
/// column orders used here.
pub const EPSILON_3: i64 = 1;
pub const EPSILON_4: i64 = -1;
pub const EPSILON_5: i64 = 1;

/// The scale `kappa_n` with `det = epsilon_n kappa_n Delta`.
pub fn kappa(degree: u8) -> Option<i64> {
    match degree {
        3 => Some(1728),
        4 => Some(16),
        5 => Some(32),
        _ => None,
    }
}

pub fn epsilon(degree: u8) -> Option<i64> {
    match degree {
        3 => Some(EPSILON_3),
        4 => Some(EPSILON_4),
        5 => Some(EPSILON_5),
        _ => None,
    }
}

/// The quadrics `Omega_{r,s}`, `r < s`, in lexicographic order of `(r, s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaQuadrics {
    pub degree: u8,
    pub entries: Vec<((usize, usize), Poly)>,
    /// `T1` and `T2` for degree 4.
    pub t: Option<(RatMatrix, RatMatrix)>,
}

impl OmegaQuadrics {
    /// `Omega_{r,s}` with 1-based indices; swapping `r` and `s` negates it.
    pub fn get(&self, r: usize, s: usize) -> Option<Poly> {
        let (key, flip) = if r < s { ((r, s), false) } else { ((s, r), true) };
        self.entries
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, p)| if flip { -p } else { p.clone() })
    }

    pub fn quadrics(&self) -> Vec<Poly> {
        self.entries.iter().map(|(_, p)| p.clone()).collect()
    }
}

fn sign(perm: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                s = -s;
            }
        }
    }
    s
}

/// Each pair `r < s` (0-based) with its completion to a permutation whose
/// remaining entries increase.
fn completions(n: usize) -> Vec<(usize, usize, Vec<usize>)> {
    let mut out = Vec::new();
    for r in 0..n {
        for s in r + 1..n {
            let rest: Vec<usize> = (0..n).filter(|&k| k != r && k != s).collect();
            out.push((r, s, rest));
        }
    }
    out
}

pub fn discriminant_deg3_matrix(m: &GenusOneModel) -> Result<Rational> {
    expect_degree(m, 3)?;
    let u = m.cubic().expect("degree 3");
    let h = hessian(&u);
    let rows: Vec<Poly> = (0..3)
        .map(|i| u.derivative(i))
        .chain((0..3).map(|i| h.derivative(i)))
        .collect();
    coefficient_matrix(&rows, 2).determinant()
}

/// `Omega_{r,s}` for a pair of quadrics, with `T1`, `T2` when the `s^4` and
/// `t^4` coefficients `a`, `e` of `det(sA + tB)` are nonzero.
pub fn omega_deg4(m: &GenusOneModel) -> Result<OmegaQuadrics> {
    let f = quadric_pair_quartic(m)?;
    let (q1, q2) = m.quadrics().expect("degree 4");
    let t = if f[0].is_zero() || f[4].is_zero() {
        None
    } else {
        Some(t_matrices(&q1, &q2, &f[0], &f[4])?)
    };
    let d1: Vec<Poly> = (0..4).map(|i| q1.derivative(i)).collect();
    let d2: Vec<Poly> = (0..4).map(|i| q2.derivative(i)).collect();
    let entries = completions(4)
        .into_iter()
        .map(|(r, s, rest)| {
            let (k, l) = (rest[0], rest[1]);
            let perm = [r, s, k, l];
            let w = &(&d1[k] * &d2[l]) - &(&d1[l] * &d2[k]);
            let w = if sign(&perm) > 0 { w } else { -w };
            ((r + 1, s + 1), w)
        })
        .collect();
    Ok(OmegaQuadrics {
        degree: 4,
        entries,
        t,
    })
}

/// Reads `T1`, `T2` off
/// `adj(s adj A + t adj B) = a^2 A s^3 + a T1 s^2 t + e T2 s t^2 + e^2 B t^3`.
fn t_matrices(q1: &Poly, q2: &Poly, a: &Rational, e: &Rational) -> Result<(RatMatrix, RatMatrix)> {
    let (adj_a, adj_b) = (quadric_matrix(q1).adjugate()?, quadric_matrix(q2).adjugate()?);
    let st = Vars::new(&["s", "t"]);
    let (s, t) = (Poly::var(&st, 0), Poly::var(&st, 1));
    let pencil = PolyMatrix::from_fn(4, 4, |i, j| {
        &s.scale(adj_a.get(i, j)) + &t.scale(adj_b.get(i, j))
    });
    let adj = pencil.adjugate()?;
    let coeff = |k: u16, scale: &Rational| {
        let mut out = RatMatrix::zeros(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                out.set(i, j, adj.get(i, j).coeff_of(&[3 - k, k]) / scale);
            }
        }
        out
    };
    Ok((coeff(1, a), coeff(2, e)))
}

/// A determinant-one change of the pencil, `(q1, q2) -> (q1 + k q2,
/// l q1 + (1 + kl) q2)`, chosen so that `det(sA + tB)` has nonzero `s^4` and
/// `t^4` coefficients. `None` if the quartic vanishes identically.
fn generic_pencil(m: &GenusOneModel) -> Result<Option<GenusOneModel>> {
    let f = quadric_pair_quartic(m)?;
    if f.iter().all(Zero::is_zero) {
        return Ok(None);
    }
    let eval = |x: &Rational, y: &Rational| -> Rational {
        let mut acc = Rational::zero();
        for (i, c) in f.iter().enumerate() {
            acc += c * num_traits::pow(x.clone(), 4 - i) * num_traits::pow(y.clone(), i);
        }
        acc
    };
    // A nonzero binary quartic has at most four roots on P^1, so a small
    // search always succeeds.
    for k in 0..6i64 {
        for l in 0..6i64 {
            let (k, l) = (rat(k), rat(l));
            let one = Rational::one();
            if eval(&one, &k).is_zero() || eval(&l, &(&one + &k * &l)).is_zero() {
                continue;
            }
            let g = Transformation::QuadricPair {
                a: RatMatrix::from_rows(vec![
                    vec![one.clone(), k.clone()],
                    vec![l.clone(), &one + &k * &l],
                ])?,
                b: RatMatrix::identity(4),
            };
            return apply(&g, m).map(Some);
        }
    }
    Err(Error::Internal("no generic member of the pencil found".into()))
}

pub fn discriminant_deg4_matrix(m: &GenusOneModel) -> Result<Rational> {
    expect_degree(m, 4)?;
    let Some(m) = generic_pencil(m)? else {
        return Ok(Rational::zero());
    };
    let omega = omega_deg4(&m)?;
    let (q1, q2) = m.quadrics().expect("degree 4");
    let (t1, t2) = omega.t.clone().expect("generic pencil has T1, T2");
    let v = q1.vars().clone();
    let mut rows = vec![
        q1,
        q2,
        quadric_from_matrix(&v, &t1),
        quadric_from_matrix(&v, &t2),
    ];
    rows.extend(omega.quadrics());
    coefficient_matrix(&rows, 2).determinant()
}

/// `Omega_{r,s} = sign(pi) sum_{i,j} dp_i/dx_a dphi_ij/dx_b dp_j/dx_c` with
/// `pi = (r, s, a, b, c)` and `a < b < c`.
pub fn omega_deg5(m: &GenusOneModel) -> Result<OmegaQuadrics> {
    expect_degree(m, 5)?;
    let phi = m.matrix().expect("degree 5");
    let p = submaximal_pfaffians(&phi)?;
    let v = phi.vars().clone();
    let dp: Vec<Vec<Poly>> = p
        .iter()
        .map(|pi| (0..5).map(|k| pi.derivative(k)).collect())
        .collect();
    let entries = completions(5)
        .into_iter()
        .map(|(r, s, rest)| {
            let (a, b, c) = (rest[0], rest[1], rest[2]);
            let mut w = Poly::zero(&v);
            for i in 0..5 {
                for j in 0..5 {
                    let d = phi
                        .get(i, j)
                        .derivative(b)
                        .as_constant()
                        .expect("linear entries");
                    if d.is_zero() {
                        continue;
                    }
                    w = &w + &(&dp[i][a] * &dp[j][c]).scale(&d);
                }
            }
            let w = if sign(&[r, s, a, b, c]) > 0 { w } else { -w };
            ((r + 1, s + 1), w)
        })
        .collect();
    Ok(OmegaQuadrics {
        degree: 5,
        entries,
        t: None,
    })
}

pub fn discriminant_deg5_matrix(m: &GenusOneModel) -> Result<Rational> {
    let omega = omega_deg5(m)?;
    let phi = m.matrix().expect("degree 5");
    let mut rows = submaximal_pfaffians(&phi)?.to_vec();
    rows.extend(omega.quadrics());
    coefficient_matrix(&rows, 2).determinant()
}

/// The raw determinant for degrees 3, 4 and 5.
pub fn discriminant_matrix(m: &GenusOneModel) -> Result<Rational> {
    match m.degree() {
        3 => discriminant_deg3_matrix(m),
        4 => discriminant_deg4_matrix(m),
        5 => discriminant_deg5_matrix(m),
        d => Err(Error::UnsupportedDegree {
            degree: d,
            what: "the determinant discriminant",
        }),
    }
}

/// `Delta` recovered from [`discriminant_matrix`] by dividing out
/// `epsilon_n kappa_n`.
pub fn discriminant_via_matrix(m: &GenusOneModel) -> Result<Rational> {
    let d = m.degree();
    let (Some(k), Some(e)) = (kappa(d), epsilon(d)) else {
        return Err(Error::UnsupportedDegree {
            degree: d,
            what: "the determinant discriminant",
        });
    };
    Ok(discriminant_matrix(m)? / rat(k * e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::invariants;
    use crate::models::weierstrass_model;

    fn pi(a: [i64; 5], n: u8) -> GenusOneModel {
        weierstrass_model(&GenusOneModel::weierstrass(a.map(rat)), n).unwrap()
    }

    #[test]
    fn fixed_signs() {
        for n in 3..=5 {
            for a in [[0, 0, 0, -1, 0], [1, -1, 0, 2, 3]] {
                let m = pi(a, n);
                let inv = invariants(&m).unwrap();
                let expected = inv.delta * rat(kappa(n).unwrap() * epsilon(n).unwrap());
                assert_eq!(discriminant_matrix(&m).unwrap(), expected, "n = {n}");
            }
        }
        assert_eq!(discriminant_deg3_matrix(&pi([0, 0, 0, -1, 0], 3)).unwrap(), rat(110592));
        assert_eq!(discriminant_deg4_matrix(&pi([0, 0, 0, -1, 0], 4)).unwrap(), rat(-1024));
        assert_eq!(discriminant_deg5_matrix(&pi([0, 0, 0, -1, 0], 5)).unwrap(), rat(2048));
    }

    #[test]
    fn degenerate_models() {
        for n in 3..=5 {
            let z = GenusOneModel::zero(n).unwrap();
            assert_eq!(discriminant_matrix(&z).unwrap(), rat(0));
        }
        let triple_line = GenusOneModel::TernaryCubic([1, 0, 0, 0, 0, 0, 0, 0, 0, 0].map(rat));
        assert_eq!(discriminant_deg3_matrix(&triple_line).unwrap(), rat(0));
        assert_eq!(discriminant_deg4_matrix(&pi([0; 5], 4)).unwrap(), rat(0));
    }

    #[test]
    fn omega_is_antisymmetric() {
        let om = omega_deg5(&pi([0, 0, 0, -1, 0], 5)).unwrap();
        assert_eq!(om.entries.len(), 10);
        assert_eq!(om.get(2, 4).unwrap(), -om.get(4, 2).unwrap());
        let om = omega_deg4(&pi([0, 0, 0, -1, 0], 4)).unwrap();
        assert_eq!(om.entries.len(), 6);
        assert_eq!(om.get(1, 3).unwrap(), -om.get(3, 1).unwrap());
    }
}
