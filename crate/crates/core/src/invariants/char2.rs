//! The weight-1 invariant `a1` in characteristic 2.

use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{mod2, Poly, Rational};
use crate::models::GenusOneModel;

/// Left coset representatives of `D5 = <(12345), (25)(34)>` in `S5`: the
/// lexicographically least permutation of each coset, as 0-based images.
pub fn dihedral_coset_representatives() -> &'static [[usize; 5]] {
    static CELL: OnceLock<Vec<[usize; 5]>> = OnceLock::new();
    CELL.get_or_init(|| {
        let rotation = [1, 2, 3, 4, 0];
        let reflection = [0, 4, 3, 2, 1];
        let compose = |a: &[usize; 5], b: &[usize; 5]| -> [usize; 5] {
            std::array::from_fn(|i| a[b[i]])
        };
        let mut group: Vec<[usize; 5]> = vec![[0, 1, 2, 3, 4]];
        loop {
            let mut grew = false;
            for g in group.clone() {
                for h in [rotation, reflection] {
                    let gh = compose(&g, &h);
                    if !group.contains(&gh) {
                        group.push(gh);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        debug_assert_eq!(group.len(), 10);
        let mut covered: Vec<[usize; 5]> = Vec::new();
        let mut reps = Vec::new();
        for sigma in permutations() {
            if covered.contains(&sigma) {
                continue;
            }
            for d in &group {
                covered.push(compose(&sigma, d));
            }
            reps.push(sigma);
        }
        reps
    })
}

/// All permutations of `0..5` in lexicographic order.
fn permutations() -> Vec<[usize; 5]> {
    let mut out = Vec::with_capacity(120);
    let mut cur = Vec::with_capacity(5);
    fn rec(cur: &mut Vec<usize>, out: &mut Vec<[usize; 5]>) {
        if cur.len() == 5 {
            out.push(std::array::from_fn(|i| cur[i]));
            return;
        }
        for k in 0..5 {
            if !cur.contains(&k) {
                cur.push(k);
                rec(cur, out);
                cur.pop();
            }
        }
    }
    rec(&mut cur, &mut out);
    out
}

fn residue(q: &Rational) -> Result<u8> {
    mod2(q).ok_or(Error::NonInteger)
}

/// `a1 mod 2` of an integral model of degree 2 to 5.
pub fn a1_char2(m: &GenusOneModel) -> Result<u8> {
    if !m.is_integral() {
        return Err(Error::NonInteger);
    }
    match m {
        GenusOneModel::BinaryQuartic { p, .. } => residue(&p[1]),
        GenusOneModel::TernaryCubic(c) => residue(&c[9]),
        GenusOneModel::QuadricPair { .. } => {
            let (q1, q2) = m.quadrics().expect("degree 4");
            let coeff = |q: &Poly, i: usize, j: usize| {
                let mut e = [0u16; 4];
                e[i] += 1;
                e[j] += 1;
                q.coeff_of(&e)
            };
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let mut total = Rational::zero();
            for &(i, j) in &pairs {
                let (k, l) = pairs[5 - pairs.iter().position(|&p| p == (i, j)).unwrap()];
                total += coeff(&q1, i, j) * coeff(&q2, k, l);
            }
            residue(&total)
        }
        GenusOneModel::Quintic(_) => {
            let phi = m.matrix().expect("degree 5");
            let mut total = Rational::zero();
            for sigma in dihedral_coset_representatives() {
                let mut prod = Poly::one(phi.vars());
                for i in 0..5 {
                    prod = &prod * phi.get(sigma[i], sigma[(i + 1) % 5]);
                }
                total += prod.coeff_of(&[1, 1, 1, 1, 1]);
            }
            residue(&total)
        }
        GenusOneModel::Weierstrass(_) => Err(Error::UnsupportedDegree {
            degree: 1,
            what: "a1_char2 (read a1 directly)",
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};
    use crate::models::weierstrass_model;

    #[test]
    fn twelve_representatives() {
        let reps = dihedral_coset_representatives();
        assert_eq!(reps.len(), 12);
        assert_eq!(reps[0], [0, 1, 2, 3, 4]);
    }

    #[test]
    fn single_term_quadric_pair() {
        let v = crate::models::model::ring_x4();
        let x = |i| Poly::var(v, i);
        let m = GenusOneModel::from_quadrics(&(&x(0) * &x(1)), &(&x(2) * &x(3))).unwrap();
        assert_eq!(a1_char2(&m).unwrap(), 1);
    }

    #[test]
    fn weierstrass_family() {
        for a1 in [0, 1, 3, -2] {
            let w = GenusOneModel::weierstrass([a1, 2, -1, 0, 5].map(rat));
            for n in 2..=5 {
                let m = weierstrass_model(&w, n).unwrap();
                assert_eq!(a1_char2(&m).unwrap() as i64, a1.rem_euclid(2), "n = {n}");
            }
        }
    }

    #[test]
    fn rejects_fractions() {
        let w = GenusOneModel::weierstrass([ratio(1, 2), rat(0), rat(0), rat(0), rat(0)]);
        let m = weierstrass_model(&w, 3).unwrap();
        assert_eq!(a1_char2(&m), Err(Error::NonInteger));
    }
}
