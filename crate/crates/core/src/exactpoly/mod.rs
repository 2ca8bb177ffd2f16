//! Exact polynomials, pencil determinants and real-root isolation.

mod det;
mod poly;
mod roots;

pub use det::{adjacency_charpoly, bareiss_det, det_via_interpolation, laplacian_pencil_poly};
pub use poly::{monic, IntPoly, RatPoly};
pub use roots::{isolate_real_roots, square_free_decomposition, IsolatedRoot, RootSet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry ({row}, {col}) has degree above 1")]
    DegreeTooHigh { row: usize, col: usize },
    #[error("vertex {vertex} has degree 0")]
    ZeroDegree { vertex: usize },
    #[error("degree list has {got} entries for {expected} vertices")]
    LengthMismatch { got: usize, expected: usize },
    #[error("cannot parse polynomial {0}")]
    Parse(String),
}
