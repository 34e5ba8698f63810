//! A genus one quintic from the literature whose invariants are large.
//!
//! Run with `cargo run --release --example wuthrich`.

use std::time::Instant;

use genus_one::invariants::{discriminant_via_matrix, invariants};
use genus_one::models::model_from_json;

fn main() -> genus_one::Result<()> {
    let text = include_str!("data/wuthrich.json");
    let m = model_from_json(text)?;

    let t = Instant::now();
    let inv = invariants(&m)?;
    println!("c4    = {}", inv.c4);
    println!("c6    = {}", inv.c6);
    println!("Delta = {}", inv.delta);
    println!("({:.2?})", t.elapsed());

    let t = Instant::now();
    let d = discriminant_via_matrix(&m)?;
    println!("Delta from the 15x15 determinant agrees: {} ({:.2?})", d == inv.delta, t.elapsed());
    Ok(())
}
