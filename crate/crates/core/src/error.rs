//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Addition or subtraction of quantities with different dimensions.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: String, right: String },

    /// An arithmetic operation produced NaN or an infinity.
    #[error("non-finite result")]
    NonFinite,

    /// Even-denominator (square-root-like) power of a negative value.
    #[error("negative base {value} with fractional power {power}")]
    FractionalPowerOfNegative { value: f64, power: String },

    /// The quantity's dimension has no entry in the SI conversion table.
    #[error("unsupported dimension for SI conversion: {0}")]
    UnsupportedDimension(String),

    /// A constant violated its positivity/range constraint.
    #[error("invalid constants: {0}")]
    InvalidConstants(String),

    /// Two-body separation must be strictly positive.
    #[error("non-positive separation")]
    NonPositiveSeparation,

    /// cosh/exp would overflow double precision.
    #[error("theta overflow: |{0}| > 700")]
    ThetaOverflow(f64),

    /// No circular orbit exists for a non-negative pair coupling.
    #[error("unbound pair: coupling {0} erg cm is non-negative")]
    UnboundPair(f64),

    /// Two particles share a position and no softening is set.
    #[error("coincident particles {i} and {j} with zero softening")]
    CoincidentParticles { i: usize, j: usize },

    /// Simulation input (config file or system state) failed validation.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
