//! Existence of trace-free Higgs fields for `g ≥ 2`, the genus-2 decision
//! procedure, and smoothness verdicts for moduli of stable bundles.

mod divisor;
mod existence;
mod genus2;

pub use divisor::{
    effective_equivalent, g2_class_reduce, h0_genus2, is_trivial_divisor, Decision, DivTerm,
    DivisorG2, PicClassG2, ResidualTerm,
};
pub use existence::{
    filtrable_higgs_h0, nonfiltrable_existence, smoothness_verdict, FiltrableCase,
    Existence, NonFiltrableExistence, Smoothness, SmoothnessScope, SmoothnessVerdict,
};
pub use genus2::{g2_higgs_decide, G2Decision, G2HiggsInput, G2Verdict};

use thiserror::Error;

use crate::invariants::InvariantsError;
use crate::jumps::JumpsError;
use crate::surface::SurfaceError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HiggsError {
    #[error("genus {0} is below 2")]
    GenusTooSmall(i64),
    #[error("not in the non-filtrable range")]
    RangeError,
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    #[error("invalid point {0}")]
    InvalidPoint(String),
    #[error(transparent)]
    Invariants(#[from] InvariantsError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Jumps(#[from] JumpsError),
}
