//! Genus one models of degree 1 to 5, the groups acting on them, the
//! Weierstrass family and projection from a point.

pub mod format;
pub mod model;
pub mod project;
pub mod transform;
pub mod weierstrass;

pub use format::{model_from_json, model_to_json, transformation_from_json, transformation_to_json};
pub use model::{
    equations, quadric_from_matrix, quadric_matrix, ring_binary, ring_x4, ring_x5, ring_xyz,
    submaximal_pfaffians, GenusOneModel,
    CUBIC_EXPONENTS, UPPER_PAIRS,
};
pub use project::project_from_point;
pub use transform::{apply, gamma, Transformation};
pub use weierstrass::weierstrass_model;
