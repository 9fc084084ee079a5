//! Exact and float arithmetic on unramified Satake parameters.

pub mod character;
pub mod json;
pub mod params;
pub mod rodier;
pub mod weyl;

use num_complex::Complex64;
use thiserror::Error;

pub use character::{multiset_eq, ExactForm, PlaceData, Rational, UnramChar, FLOAT_TOL, MATCH_TOL};
pub use json::{Param, ParamDoc, ParamKind};
pub use params::{
    check_selfdual_twist, gsp4_from_transfer_coords, gsp4_to_gl4_embed,
    langlands_param_from_induction, theta_lift_params, transfer_gsp4_to_gl4, GL2Param, GL4Param,
    GSp4Param,
};
pub use rodier::{exponents, rodier_class, ExponentVector, RodierClass};
pub use weyl::weyl_orbit;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParamError {
    #[error("character values must be nonzero and finite")]
    ZeroOrNonFinite,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("central characters differ: {left} vs {right}")]
    CentralCharMismatch { left: Complex64, right: Complex64 },
    #[error("pair products differ ({first} vs {second}); not a symplectic similitude parameter")]
    SimilitudeViolated { first: Complex64, second: Complex64 },
    #[error("expected {expected} entries, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("{0}")]
    Parse(String),
}
