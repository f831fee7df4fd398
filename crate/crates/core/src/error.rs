use thiserror::Error;

/// Errors raised by the geometric and special-function kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the domain where the construction is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The sampled point is not immersed: `|x_u × x_v|` is at or below the threshold.
    #[error("degenerate jet at (u, v) = ({u}, {v}): |x_u × x_v| = {cross_norm:e}")]
    DegenerateJet { u: f64, v: f64, cross_norm: f64 },

    /// The profile-only curvature formula divides by `r'`, which vanishes here.
    #[error("curvature formula singular at s = {s}: r' = {dr:e}")]
    FormulaSingular { s: f64, dr: f64 },

    /// `1 - 2tH + t²K` vanishes: the offset point is a focal point.
    #[error("focal point at offset t = {t}: 1 - 2tH + t²K = {factor:e}")]
    FocalPoint { t: f64, factor: f64 },

    /// A tube radius reaches the focal radius of its center curve.
    #[error("tube radius {rho} does not stay below the radius-of-curvature bound {bound}")]
    Immersion { rho: f64, bound: f64 },

    /// The all-zero linear Weingarten triple.
    #[error("linear Weingarten triple (a, b, c) must not be (0, 0, 0)")]
    InvalidTriple,

    /// The profile carries no first-integral data (K, C) to check against.
    #[error("profile family {0} has no (K, C) first integral")]
    NoFirstIntegral(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
