//! Projecting a quintic curve from one of its points gives a quadric pair
//! with the same j-invariant.

use genus_one::exactmath::rat;
use genus_one::invariants::{invariants, j_invariant};
use genus_one::models::{equations, project_from_point, weierstrass_model, GenusOneModel};

fn main() -> genus_one::Result<()> {
    let e = GenusOneModel::weierstrass([0, 0, 0, -7, 10].map(rat));
    let m5 = weierstrass_model(&e, 5)?;

    // (0:0:0:0:1) is the point at infinity of e.
    let m4 = project_from_point(&m5, &[0, 0, 0, 0, 1].map(rat))?;
    for q in equations(&m4) {
        println!("{q} = 0");
    }

    let (a, b) = (invariants(&m5)?, invariants(&m4)?);
    println!("c4: {} vs {}", a.c4, b.c4);
    println!("j:  {} vs {}", j_invariant(&m5)?, j_invariant(&m4)?);

    // An affine point (x, y) sits at (1 : x : y : x^2 : xy). Here
    // (x, y) = (2, 2), since 8 - 14 + 10 = 4.
    let p = [1, 2, 2, 4, 4].map(rat);
    match project_from_point(&m5, &p) {
        Ok(m) => println!("from (2, 2): j = {}", j_invariant(&m)?),
        Err(err) => println!("from (2, 2): {err}"),
    }
    Ok(())
}
