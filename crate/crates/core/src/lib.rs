//! Square boolean matrices in two representations.
//!
//! [`BitMatrix`] packs every row into 64-bit words and implements the
//! element-wise operations, the transpose and the boolean product with
//! word-level bit operations. [`DenseMatrix`] stores one byte per element and
//! implements the same operations straight from their definitions; it is the
//! reference the packed code is checked against. The [`cost`] module counts
//! the primitive operations each algorithm executes, and [`io`] reads and
//! writes the grid and row-tuple text formats.

pub mod bitrow;
pub mod cost;
pub mod dense;
mod error;
pub mod io;
pub mod meter;

pub use std::cmp::Ordering;

pub use bitrow::BitMatrix;
pub use cost::{counted_run, fit_exponent, CountReport, Impl, MatrixOp, OpCounter};
pub use dense::{DenseMatrix, DenseOp};
pub use error::{Error, Result};
pub use meter::{Meter, OpCategory};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest supported matrix order.
pub const MAX_DIM: usize = 1 << 20;

/// The deterministic generator used for all seeded random inputs.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
