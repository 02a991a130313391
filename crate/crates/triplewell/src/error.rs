//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A model or config parameter violates a stated invariant.
    /// The message names the offending field.
    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    /// Gamma evaluated at a non-positive integer.
    #[error("gamma pole at non-positive integer argument {0}")]
    GammaPole(f64),

    /// Argument outside the supported range of a kernel.
    #[error("out of supported range: {0}")]
    Range(String),

    /// Time point too close to a caustic T = k*pi of the oscillator kernel.
    #[error("caustic: |sin tau| = {sin_tau:.3e} < {guard:.1e} at T = {t}")]
    Caustic { t: f64, sin_tau: f64, guard: f64 },

    /// Adaptive quadrature or a series exceeded its refinement budget.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Potential extrema count does not match the triple-well shape.
    #[error("potential shape: {0}")]
    Shape(String),

    /// Grid does not satisfy a coverage or size precondition.
    #[error("grid: {0}")]
    Grid(String),

    /// Wronskian underflow; signals an invalid parameter combination.
    #[error("degenerate Wronskian: {0}")]
    Degenerate(String),

    /// File or serialization error (CLI surfaces).
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
