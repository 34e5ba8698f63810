#![allow(dead_code)]

//! Random generators and independent oracles shared by the integration tests.

use genus_one::exactmath::{rat, RatMatrix, Rational};
use genus_one::models::{GenusOneModel, Transformation};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound))
}

pub fn weierstrass(a: [i64; 5]) -> GenusOneModel {
    GenusOneModel::weierstrass(a.map(rat))
}

pub fn random_weierstrass(rng: &mut ChaCha8Rng, bound: i64) -> GenusOneModel {
    GenusOneModel::weierstrass(std::array::from_fn(|_| small(rng, bound)))
}

pub fn coefficient_count(degree: u8) -> usize {
    match degree {
        1 => 5,
        2 => 8,
        3 => 10,
        4 => 20,
        5 => 50,
        _ => unreachable!(),
    }
}

/// A random integer model. Each coefficient is zero with probability
/// `sparsity` so that degree-5 models stay cheap in debug builds.
pub fn random_model(rng: &mut ChaCha8Rng, degree: u8, bound: i64) -> GenusOneModel {
    let sparsity = if degree == 5 { 0.6 } else { 0.0 };
    let c = (0..coefficient_count(degree))
        .map(|_| {
            if rng.gen_bool(sparsity) {
                Rational::zero()
            } else {
                small(rng, bound)
            }
        })
        .collect();
    GenusOneModel::from_coefficients(degree, c).unwrap()
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> RatMatrix {
    loop {
        let data = (0..n * n).map(|_| small(rng, bound)).collect();
        let m = RatMatrix::new(n, n, data).unwrap();
        if !leibniz_determinant(&m).is_zero() {
            return m;
        }
    }
}

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    loop {
        let x = small(rng, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random group element. Matrices are unimodular-ish perturbations of the
/// identity to keep the transformed models small.
pub fn random_transformation(rng: &mut ChaCha8Rng, degree: u8) -> Transformation {
    match degree {
        1 => Transformation::Weierstrass {
            u: nonzero(rng, 2),
            r: small(rng, 2),
            s: small(rng, 2),
            t: small(rng, 2),
        },
        2 => Transformation::BinaryQuartic {
            mu: nonzero(rng, 2),
            r: std::array::from_fn(|_| small(rng, 1)),
            b: random_invertible(rng, 2, 2),
        },
        3 => Transformation::TernaryCubic {
            mu: nonzero(rng, 2),
            b: random_invertible(rng, 3, 1),
        },
        4 => Transformation::QuadricPair {
            a: random_invertible(rng, 2, 2),
            b: random_invertible(rng, 4, 1),
        },
        5 => Transformation::Quintic {
            a: random_invertible(rng, 5, 1),
            b: random_invertible(rng, 5, 1),
        },
        _ => unreachable!(),
    }
}

/// Determinant by the Leibniz permutation expansion.
pub fn leibniz_determinant(m: &RatMatrix) -> Rational {
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Rational::zero();
    permute(&mut perm, 0, &mut |p| {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = Rational::one();
        for (i, &j) in p.iter().enumerate() {
            term *= m.get(i, j);
        }
        if inversions % 2 == 1 {
            term = -term;
        }
        total += term;
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// `(c4, c6, Delta)` of a Weierstrass equation. `c4` and `c6` come from the
/// expanded polynomials in `a1..a6`; `Delta` is the discriminant of the
/// 2-division cubic `4x^3 + b2 x^2 + 2 b4 x + b6` divided by 16, computed as
/// a Sylvester resultant.
pub fn weierstrass_oracle(a: &[Rational; 5]) -> (Rational, Rational, Rational) {
    let [a1, a2, a3, a4, a6] = a;
    let r = |n: i64| rat(n);
    let c4 = a1.pow(4) + r(8) * a1 * a1 * a2 - r(24) * a1 * a3 + r(16) * a2 * a2 - r(48) * a4;
    let c6 = -a1.pow(6) - r(12) * a1.pow(4) * a2 + r(36) * a1.pow(3) * a3
        - r(48) * a1 * a1 * a2 * a2
        + r(72) * a1 * a1 * a4
        + r(144) * a1 * a2 * a3
        - r(64) * a2.pow(3)
        + r(288) * a2 * a4
        - r(216) * a3 * a3
        - r(864) * a6;

    let b2 = a1 * a1 + r(4) * a2;
    let b4 = r(2) * a4 + a1 * a3;
    let b6 = a3 * a3 + r(4) * a6;
    let f = [r(4), b2, r(2) * b4, b6];
    let df = [r(12), r(2) * &f[1], f[2].clone()];
    // res(f, f') = (-1)^(n(n-1)/2) lead(f) disc(f) for n = 3.
    let z = Rational::zero();
    let rows = vec![
        vec![f[0].clone(), f[1].clone(), f[2].clone(), f[3].clone(), z.clone()],
        vec![z.clone(), f[0].clone(), f[1].clone(), f[2].clone(), f[3].clone()],
        vec![df[0].clone(), df[1].clone(), df[2].clone(), z.clone(), z.clone()],
        vec![z.clone(), df[0].clone(), df[1].clone(), df[2].clone(), z.clone()],
        vec![z.clone(), z.clone(), df[0].clone(), df[1].clone(), df[2].clone()],
    ];
    let res = leibniz_determinant(&RatMatrix::from_rows(rows).unwrap());
    let disc = -res / r(4);
    (c4, c6, disc / r(16))
}

/// `c4`, `c6` of a binary quartic `a x^4 + ... + e z^4`, scaled as for
/// `y^2 = q(x, z)`, from the classical `I` and `J` written out in full.
pub fn binary_quartic_oracle(q: &[Rational; 5]) -> (Rational, Rational) {
    let [a, b, c, d, e] = q;
    let i = rat(12) * a * e - rat(3) * b * d + c * c;
    let j = rat(72) * a * c * e + rat(9) * b * c * d
        - rat(27) * a * d * d
        - rat(27) * e * b * b
        - rat(2) * c.pow(3);
    (rat(16) * i, rat(32) * j)
}
