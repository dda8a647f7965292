//! Constructive compact subsets of a metric space, built as limits of finite
//! point sets under the Hausdorff metric, over exact rational arithmetic.
//!
//! The library is organised around three layers:
//!
//! * [`metric`] — metric spaces with decidable closed balls, plus the two
//!   concrete instances everything else is built from (ℚ and ℚ² with the
//!   sup metric).
//! * [`completion`] — the completion of a metric space as *regular
//!   functions*: maps from a requested precision to an approximant, with the
//!   guarantee that any two approximants at precisions ε₁, ε₂ are within
//!   ε₁ + ε₂ of each other. [`completion::Real`] is the completion of ℚ.
//! * [`finite_enum`] / [`compact`] — non-empty finite enumerations under the
//!   Hausdorff metric, and their completion: compact sets. A compact set
//!   yields, at every precision ε, a finite ε-net of the ideal set.
//!
//! On top sit [`real_ops`] (exponential, clamping, affine maps — each with an
//! explicit modulus of uniform continuity), [`raster`] (snapping finite point
//! sets to a pixel grid with an exact error certificate), and [`cli`] (the
//! `certiplot` command-line front end).
//!
//! Everything is exact: the only numbers in play are arbitrary-precision
//! rationals, all comparisons are decidable, and every plot comes with a
//! Hausdorff-distance bound between the drawn pixels and the ideal graph
//! that is computed — not estimated — from the requested precision and the
//! pixel geometry.

pub mod cli;
pub mod compact;
pub mod completion;
pub mod finite_enum;
pub mod metric;
pub mod raster;
pub mod rat;
pub mod real_ops;

pub use compact::Compact;
pub use completion::{Real, RegularFn, UniformFn};
pub use finite_enum::FiniteEnum;
pub use metric::{DecidableMetric, LocateResult, Point2};
pub use raster::{PlotCertificate, Raster, Window};
pub use rat::{PosRat, Rat};

use thiserror::Error;

/// Errors shared across the library.
///
/// Every fallible operation reports a violated precondition through one of
/// these variants; none of them is recoverable by retrying with the same
/// arguments.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A locate query needs strictly ordered precision bounds ε < δ.
    #[error("locate requires eps < delta (got eps = {eps}, delta = {delta})")]
    PrecisionOrder { eps: Rat, delta: Rat },
    /// A value that must be strictly positive was zero or negative.
    #[error("expected a strictly positive rational, got {0}")]
    NotPositive(Rat),
    /// The exponential's power series is only certified for arguments ≤ 1.
    #[error("exp requires an argument <= 1, got {0}")]
    ExpDomain(Rat),
    /// Finite enumerations are non-empty by construction.
    #[error("a finite enumeration must contain at least one point")]
    EmptyEnumeration,
    /// An interval must be given as a ≤ b.
    #[error("interval bounds must satisfy a <= b (got a = {a}, b = {b})")]
    BadInterval { a: Rat, b: Rat },
    /// A clamp range must be given as lo < hi.
    #[error("clamp range must satisfy lo < hi (got lo = {lo}, hi = {hi})")]
    BadClampRange { lo: Rat, hi: Rat },
    /// A window needs left < right and bottom < top.
    #[error("window must satisfy left < right and bottom < top")]
    BadWindow,
    /// A raster needs at least one pixel on each axis.
    #[error("raster dimensions must be at least 1x1 (got {width}x{height})")]
    BadRasterSize { width: usize, height: usize },
    /// A pixel index outside the raster was addressed.
    #[error("pixel ({row}, {col}) out of range for a {width}x{height} raster")]
    PixelOutOfRange {
        row: usize,
        col: usize,
        width: usize,
        height: usize,
    },
    /// A point handed to the rasterizer lies outside the target window.
    #[error("point ({x}, {y}) lies outside the window")]
    PointOutsideWindow { x: Rat, y: Rat },
    /// An all-blank raster cannot be read back as a point set.
    #[error("raster has no set pixels")]
    EmptyRaster,
    /// A rational literal could not be parsed.
    #[error("invalid rational {text:?}: {reason}")]
    ParseRational { text: String, reason: String },
    /// A line of a point-set fixture could not be parsed.
    #[error("invalid point line {0:?}: expected two rationals separated by whitespace")]
    ParsePoint(String),
}
