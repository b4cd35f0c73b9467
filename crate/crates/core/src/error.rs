use core::fmt;

use crate::charts::Chart;

pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes of the kinematic constructions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// An input carried a NaN or infinite component.
    NonFinite,
    /// The anti-Hermitian part of a matrix exceeded tolerance.
    NonHermitian { residual: f64 },
    /// A matrix was too close to singular to be rescaled into SL(2,C).
    Singular { det: f64 },
    /// A stated invariant of a domain type does not hold.
    InvariantViolation { what: &'static str, residual: f64 },
    /// A matrix expected to lie in the E(2) little group does not.
    NotInE2 { residual: f64 },
    /// A momentum was paired with a chart that does not contain it.
    ChartViolation { chart: Chart, margin: f64 },
    /// The operation needs a momentum admissible in both charts.
    NotInOverlap,
    /// Spin above the supported maximum; carries `2s`.
    UnsupportedSpin { twice_s: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NonFinite => f.write_str("non-finite component"),
            Error::NonHermitian { residual } => {
                write!(
                    f,
                    "matrix is not Hermitian (anti-Hermitian residual {residual:e})"
                )
            }
            Error::Singular { det } => write!(f, "matrix is singular (|det| = {det:e})"),
            Error::InvariantViolation { what, residual } => {
                write!(f, "invariant violated: {what} (residual {residual:e})")
            }
            Error::NotInE2 { residual } => {
                write!(f, "matrix is not in E(2) (residual {residual:e})")
            }
            Error::ChartViolation { chart, margin } => {
                write!(
                    f,
                    "momentum not admissible in chart {chart} (margin {margin:e})"
                )
            }
            Error::NotInOverlap => f.write_str("momentum is not in the overlap of both charts"),
            Error::UnsupportedSpin { twice_s } => {
                write!(f, "unsupported spin 2s = {twice_s} (maximum s is 10)")
            }
        }
    }
}

impl core::error::Error for Error {}
