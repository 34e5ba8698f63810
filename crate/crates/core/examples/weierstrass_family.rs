//! The same elliptic curve written as a model of every degree. All five
//! models have the same invariants.

use genus_one::exactmath::rat;
use genus_one::invariants::invariants;
use genus_one::models::{equations, weierstrass_model, GenusOneModel};

fn main() -> genus_one::Result<()> {
    let e = GenusOneModel::weierstrass([0, 0, 1, -1, 0].map(rat));
    for n in 1..=5 {
        let m = weierstrass_model(&e, n)?;
        let inv = invariants(&m)?;
        println!("degree {n}: c4 = {}, c6 = {}", inv.c4, inv.c6);
        for f in equations(&m) {
            println!("    {f} = 0");
        }
    }
    Ok(())
}
