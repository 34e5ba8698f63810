//! The five quadrics cut out by a 5x5 alternating matrix of linear forms.

use genus_one::exactmath::{rat, Poly, PolyMatrix};
use genus_one::models::{ring_x5, submaximal_pfaffians, GenusOneModel};

fn main() -> genus_one::Result<()> {
    let x: Vec<Poly> = (0..5).map(|i| Poly::var(ring_x5(), i)).collect();
    let zero = Poly::zero(ring_x5());
    // Entries (1,2), (1,3), ..., (4,5).
    let upper = [
        x[0].clone(),
        x[1].clone(),
        x[2].clone(),
        x[3].clone(),
        x[4].clone(),
        &x[0] - &x[2],
        zero.clone(),
        x[1].scale(&rat(2)),
        x[3].clone(),
        &x[0] + &x[4],
    ];
    let phi = PolyMatrix::alternating_from_upper(5, &upper)?;
    for (i, p) in submaximal_pfaffians(&phi)?.iter().enumerate() {
        println!("p{} = {p}", i + 1);
    }

    let m = GenusOneModel::from_matrix(&phi)?;
    println!("integral: {}", m.is_integral());
    Ok(())
}
