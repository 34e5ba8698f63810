//! Transforming a model scales c4, c6 and Delta by powers of the
//! determinant of the transformation.

use genus_one::exactmath::{rat, RatMatrix};
use genus_one::invariants::invariants;
use genus_one::models::{apply, GenusOneModel, Transformation};

fn main() -> genus_one::Result<()> {
    let q1 = [1, 0, 2, 0, 0, 1, 0, -1, 0, 3].map(rat);
    let q2 = [0, 1, 0, 1, 2, 0, 0, 1, 1, 0].map(rat);
    let m = GenusOneModel::QuadricPair { q1, q2 };

    let a = RatMatrix::from_rows(vec![vec![rat(1), rat(1)], vec![rat(0), rat(2)]])?;
    let mut b = RatMatrix::identity(4);
    b.set(0, 3, rat(1));
    b.set(2, 2, rat(-1));
    let g = Transformation::QuadricPair { a, b };

    let d = g.det_character();
    let before = invariants(&m)?;
    let after = invariants(&apply(&g, &m)?)?;
    println!("det g = {d}");
    println!("c4: {} -> {} (ratio {})", before.c4, after.c4, &after.c4 / &before.c4);
    println!("c6: {} -> {} (ratio {})", before.c6, after.c6, &after.c6 / &before.c6);
    assert_eq!(after.delta, d.pow(12) * before.delta);

    let h = g.compose(&g)?;
    assert_eq!(apply(&h, &m)?, apply(&g, &apply(&g, &m)?)?);
    println!("g applied twice agrees with g * g");
    Ok(())
}
