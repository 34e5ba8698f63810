use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{Monomial, Poly, PolyMatrix, RatMatrix, Rational, Vars};

/// Coefficient order of a ternary cubic: `a, b, c, a2, a3, b1, b3, c1, c2, m`
/// multiply `x^3, y^3, z^3, x^2y, x^2z, xy^2, y^2z, xz^2, yz^2, xyz`.
pub const CUBIC_EXPONENTS: [[u16; 3]; 10] = [
    [3, 0, 0],
    [0, 3, 0],
    [0, 0, 3],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [0, 2, 1],
    [1, 0, 2],
    [0, 1, 2],
    [1, 1, 1],
];

/// Index pairs `(i, j)`, `i < j`, of the strict upper triangle of a 5x5
/// matrix in row-major order.
pub const UPPER_PAIRS: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

macro_rules! ring {
    ($name:ident, $make:expr) => {
        pub fn $name() -> &'static Vars {
            static CELL: OnceLock<Vars> = OnceLock::new();
            CELL.get_or_init(|| $make)
        }
    };
}

// Weierstrass equations and ternary cubics.
ring!(ring_xyz, Vars::new(&["x", "y", "z"]));
// Degree 2: y has weight 2 and is listed last.
ring!(ring_xzy, Vars::new(&["x", "z", "y"]));
ring!(ring_binary, Vars::new(&["x", "z"]));
ring!(ring_x4, Vars::indexed("x", 4));
ring!(ring_x5, Vars::indexed("x", 5));

/// A genus one model of degree 1 to 5.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum GenusOneModel {
    /// `(a1, a2, a3, a4, a6)` of `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
    Weierstrass([Rational; 5]),
    /// `y^2 + p(x,z) y = q(x,z)` with `p = (alpha0, alpha1, alpha2)` the
    /// coefficients of `x^2, xz, z^2` and `q = (a, b, c, d, e)` those of
    /// `x^4, x^3z, ..., z^4`.
    BinaryQuartic { p: [Rational; 3], q: [Rational; 5] },
    /// Coefficients in [`CUBIC_EXPONENTS`] order.
    TernaryCubic([Rational; 10]),
    /// Two quadrics in `x1..x4`, coefficients in descending graded-lex order
    /// (`x1^2, x1x2, x1x3, x1x4, x2^2, ..., x4^2`).
    QuadricPair { q1: [Rational; 10], q2: [Rational; 10] },
    /// Strict upper triangle of an alternating 5x5 matrix of linear forms in
    /// `x1..x5`, in [`UPPER_PAIRS`] order; each entry lists the coefficients
    /// of `x1..x5`.
    Quintic([[Rational; 5]; 10]),
}

fn zeros<const N: usize>() -> [Rational; N] {
    std::array::from_fn(|_| Rational::zero())
}

fn to_array<const N: usize>(v: Vec<Rational>) -> Result<[Rational; N]> {
    let len = v.len();
    v.try_into()
        .map_err(|_| Error::InvalidModel(format!("expected {N} coefficients, got {len}")))
}

impl GenusOneModel {
    pub fn weierstrass(a: [Rational; 5]) -> Self {
        GenusOneModel::Weierstrass(a)
    }

    pub fn degree(&self) -> u8 {
        match self {
            GenusOneModel::Weierstrass(_) => 1,
            GenusOneModel::BinaryQuartic { .. } => 2,
            GenusOneModel::TernaryCubic(_) => 3,
            GenusOneModel::QuadricPair { .. } => 4,
            GenusOneModel::Quintic(_) => 5,
        }
    }

    /// The zero model of the given degree.
    pub fn zero(degree: u8) -> Result<Self> {
        Ok(match degree {
            1 => GenusOneModel::Weierstrass(zeros()),
            2 => GenusOneModel::BinaryQuartic {
                p: zeros(),
                q: zeros(),
            },
            3 => GenusOneModel::TernaryCubic(zeros()),
            4 => GenusOneModel::QuadricPair {
                q1: zeros(),
                q2: zeros(),
            },
            5 => GenusOneModel::Quintic(std::array::from_fn(|_| zeros())),
            d => {
                return Err(Error::UnsupportedDegree {
                    degree: d,
                    what: "genus one models",
                })
            }
        })
    }

    /// All coefficients in a flat list (the layout used by the model file).
    pub fn coefficients(&self) -> Vec<Rational> {
        match self {
            GenusOneModel::Weierstrass(a) => a.to_vec(),
            GenusOneModel::BinaryQuartic { p, q } => p.iter().chain(q).cloned().collect(),
            GenusOneModel::TernaryCubic(c) => c.to_vec(),
            GenusOneModel::QuadricPair { q1, q2 } => q1.iter().chain(q2).cloned().collect(),
            GenusOneModel::Quintic(m) => m.iter().flatten().cloned().collect(),
        }
    }

    /// Inverse of [`GenusOneModel::coefficients`].
    pub fn from_coefficients(degree: u8, c: Vec<Rational>) -> Result<Self> {
        Ok(match degree {
            1 => GenusOneModel::Weierstrass(to_array(c)?),
            2 => {
                let mut c = c;
                if c.len() != 8 {
                    return Err(Error::InvalidModel(format!(
                        "expected 8 coefficients, got {}",
                        c.len()
                    )));
                }
                let q = c.split_off(3);
                GenusOneModel::BinaryQuartic {
                    p: to_array(c)?,
                    q: to_array(q)?,
                }
            }
            3 => GenusOneModel::TernaryCubic(to_array(c)?),
            4 => {
                let mut c = c;
                if c.len() != 20 {
                    return Err(Error::InvalidModel(format!(
                        "expected 20 coefficients, got {}",
                        c.len()
                    )));
                }
                let q2 = c.split_off(10);
                GenusOneModel::QuadricPair {
                    q1: to_array(c)?,
                    q2: to_array(q2)?,
                }
            }
            5 => {
                if c.len() != 50 {
                    return Err(Error::InvalidModel(format!(
                        "expected 50 coefficients, got {}",
                        c.len()
                    )));
                }
                let rows: Vec<[Rational; 5]> = c
                    .chunks(5)
                    .map(|ch| to_array(ch.to_vec()))
                    .collect::<Result<_>>()?;
                GenusOneModel::Quintic(to_array_rows(rows))
            }
            d => {
                return Err(Error::UnsupportedDegree {
                    degree: d,
                    what: "genus one models",
                })
            }
        })
    }

    pub fn is_integral(&self) -> bool {
        self.coefficients().iter().all(|q| q.is_integer())
    }

    /// The ternary cubic built from its polynomial.
    pub fn from_cubic(u: &Poly) -> Result<Self> {
        if !u.is_homogeneous_of_degree(3) || u.vars().len() != 3 {
            return Err(Error::InvalidModel("not a ternary cubic form".into()));
        }
        Ok(GenusOneModel::TernaryCubic(std::array::from_fn(|k| {
            u.coeff_of(&CUBIC_EXPONENTS[k])
        })))
    }

    pub fn from_quadrics(q1: &Poly, q2: &Poly) -> Result<Self> {
        for q in [q1, q2] {
            if !q.is_homogeneous_of_degree(2) || q.vars().len() != 4 {
                return Err(Error::InvalidModel("not a quadric in four variables".into()));
            }
        }
        Ok(GenusOneModel::QuadricPair {
            q1: to_array(q1.dense_form(2))?,
            q2: to_array(q2.dense_form(2))?,
        })
    }

    /// A degree-5 model from an alternating matrix of linear forms.
    pub fn from_matrix(m: &PolyMatrix) -> Result<Self> {
        if m.rows() != 5 || m.cols() != 5 || m.vars().len() != 5 {
            return Err(Error::InvalidModel(
                "expected a 5x5 matrix of forms in five variables".into(),
            ));
        }
        if !m.is_alternating() {
            return Err(Error::NotAlternating);
        }
        let mut rows = Vec::with_capacity(10);
        for &(i, j) in &UPPER_PAIRS {
            let e = m.get(i, j);
            if !e.is_homogeneous_of_degree(1) {
                return Err(Error::InvalidModel(format!(
                    "entry ({},{}) is not a linear form",
                    i + 1,
                    j + 1
                )));
            }
            rows.push(to_array(e.dense_form(1))?);
        }
        Ok(GenusOneModel::Quintic(to_array_rows(rows)))
    }

    /// `p(x,z)` and `q(x,z)` of a degree-2 model, in the ring `(x, z)`.
    pub fn binary_forms(&self) -> Option<(Poly, Poly)> {
        match self {
            GenusOneModel::BinaryQuartic { p, q } => {
                let v = ring_binary();
                Some((
                    Poly::from_dense_form(v, 2, p).expect("3 coefficients"),
                    Poly::from_dense_form(v, 4, q).expect("5 coefficients"),
                ))
            }
            _ => None,
        }
    }

    pub fn cubic(&self) -> Option<Poly> {
        match self {
            GenusOneModel::TernaryCubic(c) => {
                let v = ring_xyz();
                let mut u = Poly::zero(v);
                for (k, e) in CUBIC_EXPONENTS.iter().enumerate() {
                    u = &u + &Poly::monomial(v, Monomial::new(e.to_vec()), c[k].clone());
                }
                Some(u)
            }
            _ => None,
        }
    }

    pub fn quadrics(&self) -> Option<(Poly, Poly)> {
        match self {
            GenusOneModel::QuadricPair { q1, q2 } => {
                let v = ring_x4();
                Some((
                    Poly::from_dense_form(v, 2, q1).expect("10 coefficients"),
                    Poly::from_dense_form(v, 2, q2).expect("10 coefficients"),
                ))
            }
            _ => None,
        }
    }

    /// The alternating matrix of a degree-5 model; the lower triangle is
    /// derived from the stored upper triangle.
    pub fn matrix(&self) -> Option<PolyMatrix> {
        match self {
            GenusOneModel::Quintic(rows) => {
                let v = ring_x5();
                let upper: Vec<Poly> = rows.iter().map(|c| Poly::linear(v, c)).collect();
                Some(PolyMatrix::alternating_from_upper(5, &upper).expect("10 entries"))
            }
            _ => None,
        }
    }

    /// The Weierstrass coefficients of a degree-1 model.
    pub fn weierstrass_coefficients(&self) -> Option<&[Rational; 5]> {
        match self {
            GenusOneModel::Weierstrass(a) => Some(a),
            _ => None,
        }
    }
}

fn to_array_rows(rows: Vec<[Rational; 5]>) -> [[Rational; 5]; 10] {
    let mut it = rows.into_iter();
    std::array::from_fn(|_| it.next().expect("ten rows"))
}

/// Symmetric matrix `M` with `q = x^T M x / 2`.
pub fn quadric_matrix(q: &Poly) -> RatMatrix {
    let n = q.vars().len();
    let mut m = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let mut e = vec![0u16; n];
            e[i] += 1;
            e[j] += 1;
            let c = q.coeff_of(&e);
            if i == j {
                m.set(i, i, c * Rational::from_integer(2.into()));
            } else {
                m.set(i, j, c.clone());
                m.set(j, i, c);
            }
        }
    }
    m
}

/// The quadric `x^T M x / 2` of a symmetric matrix, in `vars`.
pub fn quadric_from_matrix(vars: &Vars, m: &RatMatrix) -> Poly {
    let n = vars.len();
    let half = Rational::new(1.into(), 2.into());
    let mut q = Poly::zero(vars);
    for i in 0..n {
        for j in i..n {
            let mut e = vec![0u16; n];
            e[i] += 1;
            e[j] += 1;
            let c = if i == j {
                m.get(i, i) * &half
            } else {
                m.get(i, j).clone()
            };
            q = &q + &Poly::monomial(vars, Monomial::new(e), c);
        }
    }
    q
}

/// The 4x4 Pfaffians `p_i = (-1)^(i+1) pf(phi with row/column i deleted)`.
pub fn submaximal_pfaffians(phi: &PolyMatrix) -> Result<[Poly; 5]> {
    if phi.rows() != 5 || phi.cols() != 5 {
        return Err(Error::DimensionMismatch("expected a 5x5 matrix".into()));
    }
    let mut out = Vec::with_capacity(5);
    for i in 0..5 {
        let pf = phi.delete_row_col(i).pfaffian4()?;
        out.push(if i % 2 == 0 { pf } else { -pf });
    }
    Ok(to_poly_array(out))
}

fn to_poly_array(v: Vec<Poly>) -> [Poly; 5] {
    let mut it = v.into_iter();
    std::array::from_fn(|_| it.next().expect("five polynomials"))
}

/// The defining equations of the curve of a model.
///
/// Degree 1 gives the homogenised Weierstrass polynomial in `(x, y, z)`,
/// degree 2 gives `y^2 + p y - q` in `(x, z, y)`, degree 3 the cubic,
/// degree 4 the two quadrics and degree 5 the five submaximal Pfaffians.
pub fn equations(m: &GenusOneModel) -> Vec<Poly> {
    match m {
        GenusOneModel::Weierstrass(a) => {
            let v = ring_xyz();
            let mon = |e: [u16; 3], c: Rational| Poly::monomial(v, Monomial::new(e.to_vec()), c);
            let one = Rational::one();
            let terms = [
                mon([0, 2, 1], one.clone()),
                mon([1, 1, 1], a[0].clone()),
                mon([0, 1, 2], a[2].clone()),
                mon([3, 0, 0], -one),
                mon([2, 0, 1], -a[1].clone()),
                mon([1, 0, 2], -a[3].clone()),
                mon([0, 0, 3], -a[4].clone()),
            ];
            vec![terms.iter().fold(Poly::zero(v), |acc, t| &acc + t)]
        }
        GenusOneModel::BinaryQuartic { .. } => {
            let (p, q) = m.binary_forms().expect("degree 2");
            let v = ring_xzy();
            let y = Poly::var(v, 2);
            let p = p.embed(v).expect("x, z in ring");
            let q = q.embed(v).expect("x, z in ring");
            vec![&(&(&y * &y) + &(&p * &y)) - &q]
        }
        GenusOneModel::TernaryCubic(_) => vec![m.cubic().expect("degree 3")],
        GenusOneModel::QuadricPair { .. } => {
            let (q1, q2) = m.quadrics().expect("degree 4");
            vec![q1, q2]
        }
        GenusOneModel::Quintic(_) => {
            let phi = m.matrix().expect("degree 5");
            submaximal_pfaffians(&phi)
                .expect("5x5 alternating matrix")
                .to_vec()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn zero_quintic_has_zero_pfaffians() {
        let z = GenusOneModel::zero(5).unwrap();
        assert!(equations(&z).iter().all(Poly::is_zero));
        assert_eq!(equations(&z).len(), 5);
    }

    #[test]
    fn quadric_pair_round_trip() {
        let v = ring_x4();
        let x = |i| Poly::var(v, i);
        let q1 = &(&x(0) * &x(3)) - &(&x(1) * &x(1));
        let q2 = &(&x(2) * &x(2)) - &(&x(1) * &x(3));
        let m = GenusOneModel::from_quadrics(&q1, &q2).unwrap();
        assert_eq!(equations(&m), vec![q1.clone(), q2]);
        assert_eq!(quadric_from_matrix(v, &quadric_matrix(&q1)), q1);
        let a = quadric_matrix(&q1);
        assert_eq!(a.get(0, 3), &rat(1));
        assert_eq!(a.get(1, 1), &rat(-2));
    }

    #[test]
    fn cubic_coefficient_order() {
        let c: [Rational; 10] = std::array::from_fn(|k| rat(k as i64 + 1));
        let m = GenusOneModel::TernaryCubic(c);
        let u = m.cubic().unwrap();
        assert_eq!(u.coeff_of(&[1, 1, 1]), rat(10));
        assert_eq!(u.coeff_of(&[0, 2, 1]), rat(7));
        assert_eq!(GenusOneModel::from_cubic(&u).unwrap(), m);
    }

    #[test]
    fn weierstrass_equation() {
        let m = GenusOneModel::weierstrass([1, 2, 3, 4, 6].map(rat));
        let f = &equations(&m)[0];
        assert_eq!(
            f.to_string(),
            "-x^3 - 2*x^2*z + x*y*z - 4*x*z^2 + y^2*z + 3*y*z^2 - 6*z^3"
        );
    }

    #[test]
    fn flat_coefficients_round_trip() {
        for d in 1..=5 {
            let z = GenusOneModel::zero(d).unwrap();
            let c = z.coefficients();
            assert_eq!(GenusOneModel::from_coefficients(d, c).unwrap(), z);
        }
        assert!(GenusOneModel::zero(6).is_err());
    }
}
