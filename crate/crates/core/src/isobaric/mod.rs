//! Formal cuspidal symbols, isobaric sums, and the exact pole calculus.

pub mod associate;
pub mod descriptor;
pub mod document;
pub mod rep;
pub mod shape;
pub mod symbol;

use thiserror::Error;

pub use associate::{associate_match, Association};
pub use descriptor::{
    pole_case_analysis, transfer, CaseAnalysis, CaseLabel, GSp4Descriptor, SideCondition,
    TransferResult,
};
pub use document::{
    descriptor_of, isobaric_of, RepDocument, RepresentationSpec, SymbolDoc, TermDoc,
};
pub use rep::{
    dual, pole_order_at_one, rs_factorization, Constituent, IsobaricRep, PoleReport, RsFactor,
};
pub use shape::{validate_transfer_shape, ShapeRejection, ShapeVerdict};
pub use symbol::{equivalent, CharId, CuspidalSymbol, Registry, SymbolId};

/// Identifiers naming the structural constraint a failed check belongs to.
pub mod constraint {
    pub const GSO_CENTRAL_CHAR: &str = "gso.central_char_compatibility";
    pub const DISTINCT_CONSTITUENTS: &str = "transfer.distinct_constituents";
    pub const CENTRAL_CHAR_SQUARE: &str = "transfer.central_char_square";
    pub const SELFDUAL_TWIST: &str = "transfer.selfdual_twist";
    pub const TRANSFER_SHAPE: &str = "transfer.shape";
    pub const POLE_ORDER_BOUND: &str = "poles.order_at_most_two";
    pub const COMMUTING_DIAGRAM: &str = "transfer.commuting_diagram";
    pub const CUSPIDALITY: &str = "transfer.cuspidal_iff_not_from_gso";
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IsobaricError {
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error("inconsistent symbol data: {0}")]
    InconsistentSymbol(String),
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("twist exponents violate sum n_i r_i = 0 (sum is {0})")]
    NotUnitary(String),
    #[error("pole order at s = 1 needs unitary-normalized sums (all twist exponents zero)")]
    NotUnitaryNormalized,
    #[error("[{constraint}] central characters incompatible: {detail}")]
    CentralCharMismatch {
        constraint: &'static str,
        detail: String,
    },
    #[error(
        "[{}] the two GL(2) constituents must be inequivalent: {0}",
        constraint::DISTINCT_CONSTITUENTS
    )]
    DistinctConstituents(String),
    #[error(
        "[{}] transfer is not nearly self-dual up to the central character: {0}",
        constraint::SELFDUAL_TWIST
    )]
    SelfDualTwist(String),
    #[error("[{}] shape rejected: {0}", constraint::TRANSFER_SHAPE)]
    ShapeRejected(ShapeRejection),
    #[error("[{}] {0}", constraint::CUSPIDALITY)]
    Cuspidality(String),
    #[error("[{}] excluded configuration: {0}", constraint::POLE_ORDER_BOUND)]
    ExcludedConfiguration(String),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("malformed shape: {0}")]
    Malformed(String),
    #[error("no local data for {symbol} at q = {q}")]
    InsufficientData { symbol: String, q: u64 },
}

impl IsobaricError {
    /// The named structural constraint this error reports, if any.
    pub fn constraint_id(&self) -> Option<&'static str> {
        match self {
            IsobaricError::CentralCharMismatch { constraint, .. } => Some(constraint),
            IsobaricError::DistinctConstituents(_) => Some(constraint::DISTINCT_CONSTITUENTS),
            IsobaricError::SelfDualTwist(_) => Some(constraint::SELFDUAL_TWIST),
            IsobaricError::ShapeRejected(_) => Some(constraint::TRANSFER_SHAPE),
            IsobaricError::Cuspidality(_) => Some(constraint::CUSPIDALITY),
            IsobaricError::ExcludedConfiguration(_) => Some(constraint::POLE_ORDER_BOUND),
            _ => None,
        }
    }

    /// True when the input was well formed but violates a structural hypothesis.
    pub fn is_constraint_violation(&self) -> bool {
        self.constraint_id().is_some()
    }
}
