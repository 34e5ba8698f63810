mod common;

use genus_one::exactmath::{rat, Rational};
use genus_one::invariants::{
    a1_char2, discriminant_deg3_matrix, discriminant_deg4_matrix, discriminant_deg5_matrix,
    discriminant_via_matrix, invariants, invariants_deg2, jacobian, j_invariant,
    tate_quantities,
};
use genus_one::models::{
    apply, model_from_json, project_from_point, weierstrass_model, GenusOneModel, Transformation,
};
use genus_one::Error;
use num_traits::Zero;
use proptest::prelude::*;

use common::*;

fn wuthrich() -> GenusOneModel {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/wuthrich.json"
    ))
    .unwrap();
    model_from_json(&text).unwrap()
}

fn golden() -> (Rational, Rational) {
    let two = Rational::from_integer(2.into());
    (two.pow(44) * rat(151009), -two.pow(66) * rat(34871057))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn discriminant_relation(seed in any::<u64>(), degree in 1u8..=5) {
        let m = random_model(&mut rng(seed), degree, 4);
        let inv = invariants(&m).unwrap();
        prop_assert_eq!(&inv.c4 * &inv.c4 * &inv.c4 - &inv.c6 * &inv.c6, rat(1728) * &inv.delta);
        prop_assert!(inv.is_integral());
    }

    #[test]
    fn weight_law(seed in any::<u64>(), degree in 1u8..=5) {
        let mut r = rng(seed);
        let m = random_model(&mut r, degree, 3);
        let g = random_transformation(&mut r, degree);
        let d = g.det_character();
        let (a, b) = (invariants(&m).unwrap(), invariants(&apply(&g, &m).unwrap()).unwrap());
        prop_assert_eq!(b.c4, d.pow(4) * a.c4);
        prop_assert_eq!(b.c6, d.pow(6) * a.c6);
        prop_assert_eq!(b.delta, d.pow(12) * a.delta);
    }

    #[test]
    fn degree_one_matches_oracle(a in prop::array::uniform5(-9i64..=9)) {
        let w = weierstrass(a);
        let inv = invariants(&w).unwrap();
        let (c4, c6, delta) = weierstrass_oracle(w.weierstrass_coefficients().unwrap());
        prop_assert_eq!((inv.c4, inv.c6, inv.delta), (c4, c6, delta));
        let t = tate_quantities(&w).unwrap();
        prop_assert_eq!(rat(4) * &t.b8, &t.b2 * &t.b6 - &t.b4 * &t.b4);
    }

    #[test]
    fn binary_quartic_matches_oracle(q in prop::array::uniform5(-6i64..=6)) {
        let m = GenusOneModel::BinaryQuartic { p: [0, 0, 0].map(rat), q: q.map(rat) };
        let inv = invariants_deg2(&m).unwrap();
        let (c4, c6) = binary_quartic_oracle(&q.map(rat));
        prop_assert_eq!((inv.c4, inv.c6), (c4, c6));
    }

    #[test]
    fn restriction(a in prop::array::uniform5(-5i64..=5), n in 2u8..=5) {
        let w = weierstrass(a);
        let m = weierstrass_model(&w, n).unwrap();
        prop_assert_eq!(invariants(&m).unwrap(), invariants(&w).unwrap());
        let a1 = u8::from(a[0].rem_euclid(2) == 1);
        prop_assert_eq!(a1_char2(&m).unwrap(), a1);
    }

    #[test]
    fn matrix_discriminants(seed in any::<u64>(), degree in 3u8..=5) {
        let mut r = rng(seed);
        let m = if degree == 5 {
            let w = random_weierstrass(&mut r, 3);
            apply(&random_transformation(&mut r, 5), &weierstrass_model(&w, 5).unwrap()).unwrap()
        } else {
            random_model(&mut r, degree, 3)
        };
        prop_assert_eq!(discriminant_via_matrix(&m).unwrap(), invariants(&m).unwrap().delta);
    }

    #[test]
    fn projection_preserves_j(seed in any::<u64>()) {
        // Move pi5(w) by a random element and project from the image of the
        // point at infinity.
        let mut r = rng(seed);
        let w = weierstrass([0, 0, 0, r_small(&mut r), r_small(&mut r)]);
        let inv = invariants(&w).unwrap();
        prop_assume!(!inv.delta.is_zero());
        let g = random_transformation(&mut r, 5);
        let Transformation::Quintic { b, .. } = &g else { unreachable!() };
        let m = apply(&g, &weierstrass_model(&w, 5).unwrap()).unwrap();
        // x = B^T x', so the point x = e5 has x' = (B^T)^-1 e5.
        let bt = b.transpose();
        let inv_bt = bt.adjugate().unwrap().scale(&bt.determinant().unwrap().recip());
        let pt = inv_bt.mul_vec(&[0, 0, 0, 0, 1].map(rat));
        let q = project_from_point(&m, &pt).unwrap();
        prop_assert_eq!(j_invariant(&q).unwrap(), j_invariant(&w).unwrap());
    }
}

fn r_small(r: &mut rand_chacha::ChaCha8Rng) -> i64 {
    use rand::Rng;
    r.gen_range(-5..=5)
}

#[test]
fn golden_example() {
    let m = wuthrich();
    let (c4, c6) = golden();
    let inv = invariants(&m).unwrap();
    assert_eq!((&inv.c4, &inv.c6), (&c4, &c6));
    assert_eq!(discriminant_deg5_matrix(&m).unwrap(), rat(32) * &inv.delta);
    assert_eq!(
        jacobian(&m).unwrap(),
        GenusOneModel::weierstrass([
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            rat(-27) * &c4,
            rat(-54) * &c6,
        ])
    );
}

#[test]
fn fixed_sign_examples() {
    let pi = |n| weierstrass_model(&weierstrass([0, 0, 0, -1, 0]), n).unwrap();
    assert_eq!(discriminant_deg3_matrix(&pi(3)).unwrap(), rat(110592));
    assert_eq!(discriminant_deg4_matrix(&pi(4)).unwrap(), rat(-1024));
    assert_eq!(discriminant_deg5_matrix(&pi(5)).unwrap(), rat(2048));
    let flat = weierstrass_model(&weierstrass([0, 0, 0, 0, 0]), 4).unwrap();
    assert_eq!(discriminant_deg4_matrix(&flat).unwrap(), rat(0));
    let cube = GenusOneModel::TernaryCubic([1, 0, 0, 0, 0, 0, 0, 0, 0, 0].map(rat));
    assert_eq!(discriminant_deg3_matrix(&cube).unwrap(), rat(0));
    for n in 3..=5 {
        assert_eq!(discriminant_via_matrix(&GenusOneModel::zero(n).unwrap()).unwrap(), rat(0));
    }
}

#[test]
fn j_and_jacobian_examples() {
    let fermat = GenusOneModel::TernaryCubic([1, 1, 1, 0, 0, 0, 0, 0, 0, 0].map(rat));
    assert_eq!(j_invariant(&fermat).unwrap(), rat(0));
    let e = jacobian(&fermat).unwrap();
    let a = e.weierstrass_coefficients().unwrap();
    let c6 = invariants(&fermat).unwrap().c6;
    assert_eq!(a[3], rat(0));
    assert_eq!(a[4], rat(-54) * c6);
    assert_eq!(j_invariant(&weierstrass([0, 0, 0, 0, 1])).unwrap(), rat(0));
    for n in 1..=5 {
        let nodal = weierstrass_model(&weierstrass([0, 0, 0, -3, 2]), n).unwrap();
        assert_eq!(jacobian(&nodal), Err(Error::Singular));
    }
}

#[test]
fn char2_quadric_pair_example() {
    let mut q1 = [0; 10].map(rat);
    let mut q2 = [0; 10].map(rat);
    // x1*x2 and x3*x4 in the graded-lex order x1^2, x1x2, ..., x4^2.
    q1[1] = rat(1);
    q2[8] = rat(1);
    assert_eq!(a1_char2(&GenusOneModel::QuadricPair { q1, q2 }).unwrap(), 1);
    let half = GenusOneModel::TernaryCubic([0, 0, 0, 0, 0, 0, 0, 0, 0, 1].map(rat).map(|q| q / rat(2)));
    assert!(a1_char2(&half).is_err());
}
