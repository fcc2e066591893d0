//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the simulation pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// A scenario document failed to parse or referenced unknown keys.
    #[error("scenario parse error: {0}")]
    Parse(String),

    /// A field or parameter violates its stated invariant.
    #[error("invalid value at {path}: {message}")]
    Validation { path: String, message: String },

    /// The metal/dielectric pair does not support a bound surface mode.
    #[error("no bound SPP mode: Re(eps_metal) = {eps_metal_re} must be < -eps_dielectric = {minus_eps_d}")]
    NoBoundMode { eps_metal_re: f64, minus_eps_d: f64 },

    /// The requested guided mode does not exist for these parameters.
    #[error("no guided mode of order {order}: V-number {v_number} too small")]
    NoGuidedMode { order: usize, v_number: f64 },

    /// Root bracketing for a dispersion relation failed.
    #[error("dispersion solver found no root in bracket (V = {v_number})")]
    NoRootInBracket { v_number: f64 },

    /// A detuning fell below the virtual-transition validity guard.
    #[error("near-resonant: virtual-transition model invalid (|detuning| {detuning:e} rad/s < {limit:e} rad/s)")]
    NearResonant { detuning: f64, limit: f64 },

    /// A quantity that must be a unit vector is not.
    #[error("axis is not a unit vector (|n| = {norm})")]
    NonUnitAxis { norm: f64 },

    /// Field is identically zero where a polarization state is required.
    #[error("zero field: degree of circularity undefined")]
    ZeroField,

    /// Field contains NaN or infinite components.
    #[error("nonfinite field components")]
    NonFiniteField,

    /// The contrast calibration produced a non-positive full swing.
    #[error("calibration inconsistent: C_max = {c_max} <= 0")]
    CalibrationInconsistent { c_max: f64 },

    /// Contrast ratio outside the invertible arcsin domain.
    #[error("contrast ratio |C/C_max| = {ratio} exceeds 1; field not extractable")]
    ContrastOutOfRange { ratio: f64 },

    /// The field timeline does not cover the full pulse sequence.
    #[error("field timeline gap: sequence needs {needed:e} s, timeline covers {covered:e} s")]
    TimelineGap { needed: f64, covered: f64 },

    /// The sine-fit design matrix is rank deficient.
    #[error("sine fit failed: rank-deficient design matrix")]
    RankDeficient,

    /// An I/O failure, annotated with the path involved.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Convenience constructor for validation failures.
    pub fn validation(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation { path: path.into(), message: message.into() }
    }

    /// True for errors a CLI should report as usage/validation (exit code 2)
    /// rather than runtime failures (exit code 1).
    pub fn is_validation(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Validation { .. })
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
