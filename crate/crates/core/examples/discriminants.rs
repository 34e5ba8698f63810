//! The determinant formulas for the discriminant in degrees 3, 4 and 5
//! compared with (c4^3 - c6^2) / 1728.

use genus_one::exactmath::rat;
use genus_one::invariants::discriminant::{epsilon, kappa};
use genus_one::invariants::{discriminant_matrix, invariants};
use genus_one::models::{weierstrass_model, GenusOneModel};

fn main() -> genus_one::Result<()> {
    let e = GenusOneModel::weierstrass([1, 0, 1, -2, 0].map(rat));
    for n in 3..=5 {
        let m = weierstrass_model(&e, n)?;
        let det = discriminant_matrix(&m)?;
        let delta = invariants(&m)?.delta;
        let (k, s) = (kappa(n).unwrap(), epsilon(n).unwrap());
        println!("degree {n}: det = {det}, Delta = {delta}, det / Delta = {}", &det / &delta);
        assert_eq!(det, rat(k * s) * delta);
    }
    Ok(())
}
