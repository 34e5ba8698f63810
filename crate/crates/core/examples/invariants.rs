//! c4, c6 and Delta of one model of each degree.

use genus_one::exactmath::{rat, Rational};
use genus_one::invariants::invariants;
use genus_one::models::{weierstrass_model, GenusOneModel};

fn main() -> genus_one::Result<()> {
    let e = GenusOneModel::weierstrass([1, -1, 0, -2, 3].map(rat));
    let zero = Rational::from_integer(0.into());

    let models = vec![
        ("Weierstrass", e.clone()),
        (
            "binary quartic y^2 = x^4 + z^4",
            GenusOneModel::BinaryQuartic {
                p: [0, 0, 0].map(rat),
                q: [1, 0, 0, 0, 1].map(rat),
            },
        ),
        (
            "Fermat cubic",
            GenusOneModel::TernaryCubic([1, 1, 1, 0, 0, 0, 0, 0, 0, 0].map(rat)),
        ),
        ("quadric pair pi4(e)", weierstrass_model(&e, 4)?),
        ("quintic pi5(e)", weierstrass_model(&e, 5)?),
    ];

    for (name, m) in models {
        let inv = invariants(&m)?;
        println!("{name} (degree {}):", m.degree());
        println!("  c4 = {}\n  c6 = {}\n  Delta = {}", inv.c4, inv.c6, inv.delta);
        if inv.delta == zero {
            println!("  singular");
        }
    }
    Ok(())
}
