//! Exact polynomial arithmetic in `p_1..p_m, q_1..q_m`, expansions at
//! `x = ∞`, and the coefficient-extraction formula for `F_k`.

mod formula9;
mod multipoly;
mod render;
mod series;

use thiserror::Error;

pub use formula9::{formula9_fk, formula9_parts};
pub use multipoly::{Monomial, MultiPoly};
pub use render::{ordered_terms, variable_name, PolyRecord, TermRecord};
pub use series::{extract_xinv, linear_falling_factorial, series_divide, SeriesAtInfinity, XPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable spaces differ: m = {left} vs m = {right}")]
    VarspaceMismatch { left: usize, right: usize },
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    BadIndex { index: usize, nvars: usize },
    #[error("denominator leading coefficient is not a nonzero constant")]
    NonMonicDenominator,
    #[error("series truncated at x^{order} does not contain x^-1")]
    TruncationTooShallow { order: i64 },
    #[error("coefficient {coefficient} of {exponents:?} is not an integer")]
    NonIntegerCoefficient {
        exponents: Vec<u32>,
        coefficient: String,
    },
    #[error("cannot parse coefficient {text:?}")]
    BadCoefficient { text: String },
}
