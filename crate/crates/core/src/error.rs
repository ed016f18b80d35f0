use thiserror::Error;

use crate::geometry::Point2;

/// Errors produced by the triangle-center routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(String),

    #[error("trilinear coordinates describe a point at infinity")]
    DegenerateTrilinears,

    #[error("point ({x}, {y}) is not strictly inside the triangle")]
    NotInterior { x: f64, y: f64 },

    #[error("point is within {band:e} of the triangle boundary")]
    TooCloseToBoundary { band: f64 },

    #[error("quadrature did not reach tolerance {target:e} (achieved {achieved:e})")]
    ToleranceNotReached { target: f64, achieved: f64 },

    #[error("negative radicand {value:e} in lambda equation")]
    NegativeRadicand { value: f64 },

    #[error("could not bracket the lambda root after {doublings} doublings")]
    BracketFailure { doublings: usize },

    #[error("no convergence after {iterations} iterations (best residual {residual:e})")]
    NoConvergence {
        iterations: usize,
        residual: f64,
        best: Point2,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn not_interior(p: Point2) -> Self {
        Error::NotInterior { x: p.x, y: p.y }
    }
}
