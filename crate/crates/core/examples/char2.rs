//! The weight-one invariant a1 mod 2 read directly off integral models.

use genus_one::exactmath::rat;
use genus_one::invariants::a1_char2;
use genus_one::models::{weierstrass_model, GenusOneModel};

fn main() -> genus_one::Result<()> {
    for a1 in [0, 1, 2, 3] {
        let e = GenusOneModel::weierstrass([a1, 1, -1, 0, 2].map(rat));
        let residues: Vec<u8> = (2..=5)
            .map(|n| weierstrass_model(&e, n).and_then(|m| a1_char2(&m)))
            .collect::<Result<_, _>>()?;
        println!("a1 = {a1}: degrees 2..5 give {residues:?}");
    }
    Ok(())
}
