//! The groups acting on genus one models.
//!
//! Every action substitutes `x_j = sum_i B_ij x'_i` into the model and then
//! rescales it, so composite substitutions multiply as `B1 * B2` when `g2`
//! is applied first.

use num_traits::{One, Zero};

use super::model::{ring_binary, ring_x5, ring_xyz, ring_xzy, GenusOneModel};
use crate::error::{Error, Result};
use crate::exactmath::{Poly, PolyMatrix, RatMatrix, Rational, Vars};

/// An element of the group acting on models of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transformation {
    /// `[u; r, s, t]`: `x = u^2 x' + r`, `y = u^3 y' + u^2 s x' + t`, and the
    /// equation is scaled by `u^-6`.
    Weierstrass {
        u: Rational,
        r: Rational,
        s: Rational,
        t: Rational,
    },
    /// `[mu, r, B]`: `(x, z)` transformed by `B`,
    /// `y = mu^-1 y' + r0 x'^2 + r1 x'z' + r2 z'^2`, equation scaled by `mu^2`.
    BinaryQuartic {
        mu: Rational,
        r: [Rational; 3],
        b: RatMatrix,
    },
    /// `[mu, B]`: cubic scaled by `mu`.
    TernaryCubic { mu: Rational, b: RatMatrix },
    /// `[A, B]`: the pair of quadrics is multiplied by `A`.
    QuadricPair { a: RatMatrix, b: RatMatrix },
    /// `[A, B]`: the matrix is replaced by `A phi A^T`.
    Quintic { a: RatMatrix, b: RatMatrix },
}

fn check_square(m: &RatMatrix, n: usize, name: &str) -> Result<Rational> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::InvalidTransformation(format!(
            "{name} must be {n}x{n}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let d = m.determinant()?;
    if d.is_zero() {
        return Err(Error::InvalidTransformation(format!("{name} is singular")));
    }
    Ok(d)
}

fn nonzero(x: &Rational, name: &str) -> Result<()> {
    if x.is_zero() {
        Err(Error::InvalidTransformation(format!("{name} must be nonzero")))
    } else {
        Ok(())
    }
}

impl Transformation {
    /// Checks dimensions and invertibility.
    pub fn validate(&self) -> Result<()> {
        match self {
            Transformation::Weierstrass { u, .. } => nonzero(u, "u"),
            Transformation::BinaryQuartic { mu, b, .. } => {
                nonzero(mu, "mu")?;
                check_square(b, 2, "B").map(drop)
            }
            Transformation::TernaryCubic { mu, b } => {
                nonzero(mu, "mu")?;
                check_square(b, 3, "B").map(drop)
            }
            Transformation::QuadricPair { a, b } => {
                check_square(a, 2, "A")?;
                check_square(b, 4, "B").map(drop)
            }
            Transformation::Quintic { a, b } => {
                check_square(a, 5, "A")?;
                check_square(b, 5, "B").map(drop)
            }
        }
    }

    pub fn degree(&self) -> u8 {
        match self {
            Transformation::Weierstrass { .. } => 1,
            Transformation::BinaryQuartic { .. } => 2,
            Transformation::TernaryCubic { .. } => 3,
            Transformation::QuadricPair { .. } => 4,
            Transformation::Quintic { .. } => 5,
        }
    }

    pub fn identity(degree: u8) -> Result<Self> {
        let one = Rational::one;
        let zero = Rational::zero;
        Ok(match degree {
            1 => Transformation::Weierstrass {
                u: one(),
                r: zero(),
                s: zero(),
                t: zero(),
            },
            2 => Transformation::BinaryQuartic {
                mu: one(),
                r: [zero(), zero(), zero()],
                b: RatMatrix::identity(2),
            },
            3 => Transformation::TernaryCubic {
                mu: one(),
                b: RatMatrix::identity(3),
            },
            4 => Transformation::QuadricPair {
                a: RatMatrix::identity(2),
                b: RatMatrix::identity(4),
            },
            5 => Transformation::Quintic {
                a: RatMatrix::identity(5),
                b: RatMatrix::identity(5),
            },
            d => {
                return Err(Error::UnsupportedDegree {
                    degree: d,
                    what: "transformations",
                })
            }
        })
    }

    /// The character `det`: `u^-1`, `mu det B`, `mu det B`, `det A det B`
    /// and `(det A)^2 det B` for degrees 1 to 5.
    pub fn det_character(&self) -> Rational {
        let det = |m: &RatMatrix| m.determinant().expect("square matrix");
        match self {
            Transformation::Weierstrass { u, .. } => u.recip(),
            Transformation::BinaryQuartic { mu, b, .. } => mu * det(b),
            Transformation::TernaryCubic { mu, b } => mu * det(b),
            Transformation::QuadricPair { a, b } => det(a) * det(b),
            Transformation::Quintic { a, b } => {
                let da = det(a);
                &da * &da * det(b)
            }
        }
    }

    /// The element acting as `self` after `other`:
    /// `apply(self, apply(other, m)) == apply(self.compose(other), m)`.
    pub fn compose(&self, other: &Transformation) -> Result<Transformation> {
        use Transformation::*;
        Ok(match (self, other) {
            (
                Weierstrass {
                    u: u1,
                    r: r1,
                    s: s1,
                    t: t1,
                },
                Weierstrass {
                    u: u2,
                    r: r2,
                    s: s2,
                    t: t2,
                },
            ) => {
                let u2sq = u2 * u2;
                Weierstrass {
                    u: u1 * u2,
                    r: r2 + &u2sq * r1,
                    s: s2 + u2 * s1,
                    t: t2 + &u2sq * u2 * t1 + &u2sq * s2 * r1,
                }
            }
            (
                BinaryQuartic {
                    mu: mu1,
                    r: r1,
                    b: b1,
                },
                BinaryQuartic {
                    mu: mu2,
                    r: r2,
                    b: b2,
                },
            ) => {
                // y = mu2^-1 (mu1^-1 y'' + R1) + R2(B1 x'')
                let v = ring_binary();
                let shifted = substitute_linear(&quadratic(v, r2), b1);
                let total = &shifted + &quadratic(v, r1).scale(&mu2.recip());
                let d = total.dense_form(2);
                BinaryQuartic {
                    mu: mu1 * mu2,
                    r: [d[0].clone(), d[1].clone(), d[2].clone()],
                    b: b1 * b2,
                }
            }
            (TernaryCubic { mu: mu1, b: b1 }, TernaryCubic { mu: mu2, b: b2 }) => TernaryCubic {
                mu: mu1 * mu2,
                b: b1 * b2,
            },
            (QuadricPair { a: a1, b: b1 }, QuadricPair { a: a2, b: b2 }) => QuadricPair {
                a: a1 * a2,
                b: b1 * b2,
            },
            (Quintic { a: a1, b: b1 }, Quintic { a: a2, b: b2 }) => Quintic {
                a: a1 * a2,
                b: b1 * b2,
            },
            _ => {
                return Err(Error::DegreeMismatch {
                    expected: self.degree(),
                    found: other.degree(),
                })
            }
        })
    }
}

fn quadratic(v: &Vars, c: &[Rational; 3]) -> Poly {
    Poly::from_dense_form(v, 2, c).expect("three coefficients")
}

/// `x_j -> sum_i B_ij x_i` on a form in `B.rows()` variables.
fn substitute_linear(p: &Poly, b: &RatMatrix) -> Poly {
    let v = p.vars();
    let images: Vec<Poly> = (0..b.cols())
        .map(|j| {
            let col: Vec<Rational> = (0..b.rows()).map(|i| b.get(i, j).clone()).collect();
            Poly::linear(v, &col)
        })
        .collect();
    p.substitute(&images)
}

/// Applies `g` to `m`.
pub fn apply(g: &Transformation, m: &GenusOneModel) -> Result<GenusOneModel> {
    if g.degree() != m.degree() {
        return Err(Error::DegreeMismatch {
            expected: m.degree(),
            found: g.degree(),
        });
    }
    g.validate()?;
    match g {
        Transformation::Weierstrass { u, r, s, t } => {
            let v = ring_xyz();
            let (x, y, z) = (Poly::var(v, 0), Poly::var(v, 1), Poly::var(v, 2));
            let u2 = u * u;
            let images = [
                &x.scale(&u2) + &z.scale(r),
                &(&y.scale(&(&u2 * u)) + &x.scale(&(&u2 * s))) + &z.scale(t),
                z.clone(),
            ];
            let f = &super::model::equations(m)[0];
            let u6 = num_traits::pow(u.clone(), 6);
            let g = f.substitute(&images).scale(&u6.recip());
            let a = [
                g.coeff_of(&[1, 1, 1]),
                -g.coeff_of(&[2, 0, 1]),
                g.coeff_of(&[0, 1, 2]),
                -g.coeff_of(&[1, 0, 2]),
                -g.coeff_of(&[0, 0, 3]),
            ];
            Ok(GenusOneModel::Weierstrass(a))
        }
        Transformation::BinaryQuartic { mu, r, b } => {
            let v = ring_xzy();
            let (x, z, y) = (Poly::var(v, 0), Poly::var(v, 1), Poly::var(v, 2));
            let col = |j: usize| &x.scale(b.get(0, j)) + &z.scale(b.get(1, j));
            let shift = quadratic(ring_binary(), r).embed(v)?;
            let images = [col(0), col(1), &y.scale(&mu.recip()) + &shift];
            let f = &super::model::equations(m)[0];
            let g = f.substitute(&images).scale(&(mu * mu));
            let binary = ring_binary();
            let p = g.coefficient_in(2, 1);
            let q = -g.coefficient_in(2, 0);
            let to_binary = |h: &Poly| -> Poly {
                h.substitute(&[
                    Poly::var(binary, 0),
                    Poly::var(binary, 1),
                    Poly::zero(binary),
                ])
            };
            let (p, q) = (to_binary(&p), to_binary(&q));
            let pd = p.dense_form(2);
            let qd = q.dense_form(4);
            Ok(GenusOneModel::BinaryQuartic {
                p: std::array::from_fn(|k| pd[k].clone()),
                q: std::array::from_fn(|k| qd[k].clone()),
            })
        }
        Transformation::TernaryCubic { mu, b } => {
            let u = m.cubic().expect("degree 3");
            GenusOneModel::from_cubic(&substitute_linear(&u, b).scale(mu))
        }
        Transformation::QuadricPair { a, b } => {
            let (q1, q2) = m.quadrics().expect("degree 4");
            let (s1, s2) = (substitute_linear(&q1, b), substitute_linear(&q2, b));
            let n1 = &s1.scale(a.get(0, 0)) + &s2.scale(a.get(0, 1));
            let n2 = &s1.scale(a.get(1, 0)) + &s2.scale(a.get(1, 1));
            GenusOneModel::from_quadrics(&n1, &n2)
        }
        Transformation::Quintic { a, b } => {
            let phi = m.matrix().expect("degree 5");
            let sub = phi.map(|e| substitute_linear(e, b));
            let v = ring_x5();
            let conj = PolyMatrix::from_fn(5, 5, |i, j| {
                let mut acc = Poly::zero(v);
                for k in 0..5 {
                    for l in 0..5 {
                        let c = a.get(i, k) * a.get(j, l);
                        if !c.is_zero() {
                            acc = &acc + &sub.get(k, l).scale(&c);
                        }
                    }
                }
                acc
            });
            GenusOneModel::from_matrix(&conj)
        }
    }
}

/// The image of a degree-1 transformation in the group acting on
/// Weierstrass models of degree `n`.
pub fn gamma(g: &Transformation, n: u8) -> Result<Transformation> {
    let Transformation::Weierstrass { u, r, s, t } = g else {
        return Err(Error::DegreeMismatch {
            expected: 1,
            found: g.degree(),
        });
    };
    nonzero(u, "u")?;
    let zero = Rational::zero;
    let one = Rational::one;
    let two = || Rational::from_integer(2.into());
    let u2 = u * u;
    let u3 = &u2 * u;
    let u4 = &u2 * &u2;
    let u5 = &u4 * u;
    let mat = |rows: Vec<Vec<Rational>>| RatMatrix::from_rows(rows).expect("square");
    Ok(match n {
        1 => g.clone(),
        2 => Transformation::BinaryQuartic {
            mu: u3.recip(),
            r: [zero(), &u2 * s, t.clone()],
            b: mat(vec![vec![u2.clone(), zero()], vec![r.clone(), one()]]),
        },
        3 => {
            // Weierstrass cubics are written in (x, y, z) with z the
            // homogenising variable, i.e. the embedding (z : x : y).
            let zxy = mat(vec![
                vec![one(), r.clone(), t.clone()],
                vec![zero(), u2.clone(), &u2 * s],
                vec![zero(), zero(), u3.clone()],
            ]);
            let perm = [1usize, 2, 0];
            let mut b = RatMatrix::zeros(3, 3);
            for i in 0..3 {
                for j in 0..3 {
                    b.set(i, j, zxy.get(perm[i], perm[j]).clone());
                }
            }
            Transformation::TernaryCubic {
                mu: num_traits::pow(u.clone(), 6).recip(),
                b,
            }
        }
        4 => {
            let u4i = u4.recip();
            let u6i = (&u4 * &u2).recip();
            Transformation::QuadricPair {
                a: mat(vec![vec![u4i, zero()], vec![&u6i * r, u6i]]),
                b: mat(vec![
                    vec![one(), r.clone(), t.clone(), r * r],
                    vec![zero(), u2.clone(), &u2 * s, two() * &u2 * r],
                    vec![zero(), zero(), u3.clone(), zero()],
                    vec![zero(), zero(), zero(), u4.clone()],
                ]),
            }
        }
        5 => {
            let a = mat(vec![
                vec![one(), -s.clone(), two() * r - s * s, r * s - t, -(r * r) + r * s * s - s * t],
                vec![zero(), u.clone(), two() * u * s, -(u * r), u * (-(two() * r * s) + t)],
                vec![zero(), zero(), u2.clone(), zero(), -(&u2 * r)],
                vec![zero(), zero(), zero(), u3.clone(), &u3 * s],
                vec![zero(), zero(), zero(), zero(), u4.clone()],
            ])
            .scale(&u2.recip());
            let b = mat(vec![
                vec![one(), r.clone(), t.clone(), r * r, r * t],
                vec![zero(), u2.clone(), &u2 * s, two() * &u2 * r, &u2 * (r * s + t)],
                vec![zero(), zero(), u3.clone(), zero(), &u3 * r],
                vec![zero(), zero(), zero(), u4.clone(), &u4 * s],
                vec![zero(), zero(), zero(), zero(), u5],
            ])
            .scale(&u3.recip());
            Transformation::Quintic { a, b }
        }
        d => {
            return Err(Error::UnsupportedDegree {
                degree: d,
                what: "the Weierstrass family",
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};
    use crate::models::weierstrass::weierstrass_model;

    #[test]
    fn characters() {
        let g = Transformation::identity(5).unwrap();
        assert_eq!(g.det_character(), rat(1));
        let g = Transformation::Weierstrass {
            u: rat(2),
            r: rat(0),
            s: rat(0),
            t: rat(0),
        };
        assert_eq!(g.det_character(), ratio(1, 2));
        let g = Transformation::QuadricPair {
            a: RatMatrix::diagonal(&[rat(2), rat(1)]),
            b: RatMatrix::identity(4),
        };
        assert_eq!(g.det_character(), rat(2));
    }

    #[test]
    fn gamma_examples() {
        let id = Transformation::identity(1).unwrap();
        assert_eq!(gamma(&id, 5).unwrap(), Transformation::identity(5).unwrap());
        let u = rat(3);
        let g = Transformation::Weierstrass {
            u: u.clone(),
            r: rat(0),
            s: rat(0),
            t: rat(0),
        };
        assert_eq!(
            gamma(&g, 2).unwrap(),
            Transformation::BinaryQuartic {
                mu: ratio(1, 27),
                r: [rat(0), rat(0), rat(0)],
                b: RatMatrix::diagonal(&[rat(9), rat(1)]),
            }
        );
        let g2 = Transformation::Weierstrass {
            u: rat(2),
            r: rat(0),
            s: rat(0),
            t: rat(0),
        };
        assert_eq!(gamma(&g2, 3).unwrap().det_character(), ratio(1, 2));
    }

    #[test]
    fn identity_acts_trivially() {
        let w = GenusOneModel::weierstrass([1, -2, 3, 0, 5].map(rat));
        for n in 1..=5 {
            let m = weierstrass_model(&w, n).unwrap();
            let id = Transformation::identity(n).unwrap();
            assert_eq!(apply(&id, &m).unwrap(), m);
        }
    }

    #[test]
    fn row_scaling_of_quintic() {
        let w = GenusOneModel::weierstrass([0, 0, 0, 0, 0].map(rat));
        let m = weierstrass_model(&w, 5).unwrap();
        let g = Transformation::Quintic {
            a: RatMatrix::diagonal(&[rat(2), rat(1), rat(1), rat(1), rat(1)]),
            b: RatMatrix::identity(5),
        };
        let out = apply(&g, &m).unwrap();
        let (before, after) = (m.matrix().unwrap(), out.matrix().unwrap());
        for i in 0..5 {
            for j in 0..5 {
                let k = if (i == 0) != (j == 0) { rat(2) } else { rat(1) };
                assert_eq!(after.get(i, j), &before.get(i, j).scale(&k));
            }
        }
    }

    #[test]
    fn degree_mismatch() {
        let m = GenusOneModel::zero(3).unwrap();
        let g = Transformation::identity(4).unwrap();
        assert!(matches!(apply(&g, &m), Err(Error::DegreeMismatch { .. })));
        let bad = Transformation::TernaryCubic {
            mu: rat(1),
            b: RatMatrix::zeros(3, 3),
        };
        assert!(apply(&bad, &m).is_err());
    }
}
