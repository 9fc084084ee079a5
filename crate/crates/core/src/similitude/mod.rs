//! GO(4) and GSO(4) over small prime fields, and the map from GL2 x GL2.

pub mod field;
pub mod group;
pub mod matrix;
pub mod verify;

use thiserror::Error;

pub use field::FFScalar;
pub use group::{beta_map, enumerate_go4, is_gso, DetFormBasis, SimilitudeElement};
pub use matrix::{gl2, gl2_order, Mat2, Mat4};
pub use verify::{verify_gso_structure, Check, GsoStructureReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("unsupported modulus q = {0}")]
    UnsupportedModulus(u32),
    #[error("singular matrix")]
    Singular,
    #[error("matrix is not a similitude of B = I4")]
    NotASimilitude,
}
