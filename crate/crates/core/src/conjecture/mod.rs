//! Rectangle-union shapes, the colored-pair polynomial `G_μ`, and the
//! campaigns that compare it with normalized characters.

mod gpoly;
mod interpolate;
mod report;
mod shape;
mod verify;

use thiserror::Error;

use crate::characters::CharacterError;
use crate::polyalg::PolyError;

pub use gpoly::{conjectured_f, f_numeric, g_mu};
pub use interpolate::{grid_size, interpolate_f, interpolation_nodes, MAX_GRID_POINTS};
pub use report::{Mismatch, VerificationReport};
pub use shape::{shape_grid, shape_to_partition, RectangleUnionShape};
pub use verify::{
    reduction_sides, verify_conjecture, verify_conjecture_polynomial, verify_formula9,
    verify_g_structure, verify_oracles, verify_prop1_specialization, verify_reduction,
    verify_reductions, verify_theorem1, PROP1_INTERPOLATION_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConjectureError {
    #[error("widths are not weakly decreasing at position {position}")]
    QNotWeaklyDecreasing { position: usize },
    #[error("{p} heights but {q} widths")]
    LengthMismatch { p: usize, q: usize },
    #[error("cannot parse shape {text:?}; expected p1xq1,p2xq2,...")]
    BadShapeText { text: String },
    #[error("shape has n = {n} cells, fewer than k = {k}")]
    ShapeTooSmall { n: usize, k: usize },
    #[error("interpolation grid for k = {k}, m = {m} exceeds {limit} points")]
    GridTooLarge { k: usize, m: usize, limit: usize },
    #[error("interpolated coefficient {coefficient} of {exponents:?} is not an integer")]
    NonIntegerCoefficient {
        exponents: Vec<u32>,
        coefficient: String,
    },
    #[error("interpolated polynomial gives {got} at {shape}, characters give {expected}")]
    InterpolationCheck {
        shape: String,
        expected: String,
        got: String,
    },
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
