//! The Jacobian and j-invariant of a plane cubic.

use genus_one::exactmath::rat;
use genus_one::invariants::{j_invariant, jacobian};
use genus_one::models::{equations, GenusOneModel};
use genus_one::Error;

fn main() -> genus_one::Result<()> {
    // x^3 + y^3 + 2 z^3 + x y z
    let cubic = GenusOneModel::TernaryCubic([1, 1, 2, 0, 0, 0, 0, 0, 0, 1].map(rat));
    println!("curve:    {} = 0", equations(&cubic)[0]);

    let e = jacobian(&cubic)?;
    println!("jacobian: {} = 0", equations(&e)[0]);
    println!("j = {}", j_invariant(&cubic)?);

    // A cubic with a node has no Jacobian.
    let nodal = GenusOneModel::TernaryCubic([1, 1, 0, 0, 0, 0, 0, 0, 0, -3].map(rat));
    match jacobian(&nodal) {
        Err(Error::Singular) => println!("x^3 + y^3 - 3xyz is singular"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
