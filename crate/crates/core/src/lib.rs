//! Parameter-level calculus for the transfer from GSp(4) to GL(4).

pub mod cli;
pub mod isobaric;
pub mod lfunc;
pub mod satake;
pub mod similitude;
