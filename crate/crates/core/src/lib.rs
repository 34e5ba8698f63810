//! Invariants, Jacobians and group actions for genus one models of degree
//! 1 to 5, computed in exact rational arithmetic.
//!
//! A genus one model of degree `n` is a Weierstrass equation (`n = 1`), a
//! generalised binary quartic `y^2 + p(x,z) y = q(x,z)` (`n = 2`), a ternary
//! cubic (`n = 3`), a pair of quadrics in four variables (`n = 4`) or a 5x5
//! alternating matrix of linear forms in five variables (`n = 5`). Every
//! model has invariants `c4`, `c6` and `Delta = (c4^3 - c6^2)/1728`, and when
//! `Delta != 0` the Jacobian of the curve is `y^2 = x^3 - 27 c4 x - 54 c6`.
//!
//! ```
//! use genus_one::models::{weierstrass_model, GenusOneModel};
//! use genus_one::invariants::invariants;
//! use genus_one::exactmath::rat;
//!
//! let e = GenusOneModel::weierstrass([0, 0, 0, -1, 0].map(rat));
//! let quintic = weierstrass_model(&e, 5).unwrap();
//! let inv = invariants(&quintic).unwrap();
//! assert_eq!((inv.c4, inv.c6, inv.delta), (rat(48), rat(0), rat(64)));
//! ```

pub mod cli;
pub mod error;
pub mod exactmath;
pub mod invariants;
pub mod models;

pub use error::{Error, Result};
