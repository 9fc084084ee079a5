//! Numerical Euler products: local Rankin-Selberg factors, truncated partial
//! L-functions, pole-order estimation near `s = 1`, synthetic and real
//! unramified data.

pub mod delta;
pub mod estimate;
pub mod euler;
pub mod io;
pub mod local;
pub mod synthetic;

use thiserror::Error;

use crate::isobaric::IsobaricError;

pub use delta::{delta_eigenvalues, normalized_gl2_params, EigenvalueRow, EigenvalueTable};
pub use estimate::{estimate_pole_order, EstimatorConfig, PoleEstimate, Regressor, DEFAULT_GRID};
pub use euler::{partial_l, partial_l_over, primes_up_to, LValue};
pub use local::local_rs_factor;
pub use synthetic::{sample_sato_tate, sample_usp4, with_synthetic_data, SyntheticConfig};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LfuncError {
    #[error("local factor has a pole at q = {q}, s = {s}")]
    LocalPole { q: u64, s: String },
    #[error("no local data for {symbol} at q = {q}")]
    InsufficientData { symbol: String, q: u64 },
    #[error("estimation failed: {0}")]
    EstimationFailure(String),
    #[error(transparent)]
    Isobaric(#[from] IsobaricError),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
}
