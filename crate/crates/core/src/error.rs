use thiserror::Error;

/// Errors raised by the kernels.
///
/// Every domain violation names the offending parameter and its value; nothing is clamped.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite entry in {what}")]
    NonFinite { what: &'static str },

    #[error("deformation is not orientation preserving: det = {det:e}")]
    NotOrientationPreserving { det: f64 },

    #[error("eigenvalue {index} = {value:e} is not positive; logarithm undefined")]
    NonPositiveEigenvalue { index: usize, value: f64 },

    #[error("{param} = {value} is outside its domain: {constraint}")]
    Domain {
        param: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error("unsupported regime for {param} = {value}: {reason}")]
    UnsupportedRegime {
        param: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("degenerate motion: det(I - grad u) = {det:e}")]
    DegenerateMotion { det: f64 },

    #[error("spin tensor is not antisymmetric: |w + w^T| = {asymmetry:e}")]
    NotAntisymmetric { asymmetry: f64 },

    #[error("incompressible material requires tr(log V) = 0, got {trace:e}")]
    VolumeConstraint { trace: f64 },

    #[error("paths do not share an endpoint: distance {distance:e}")]
    EndpointMismatch { distance: f64 },

    #[error("invalid stress path: {0}")]
    InvalidPath(String),

    #[error("quadrature did not reach tolerance after {panels} panels: best estimate {best:e}, last gap {gap:e}")]
    AccuracyNotReached { best: f64, gap: f64, panels: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite(values: &[f64], what: &'static str) -> Result<()> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite { what })
    }
}
