use thiserror::Error;

/// Errors raised by the geometric operations.
///
/// Everything except [`Error::Internal`] is a domain error caused by the
/// input. `Internal` means two computations that must agree did not, which
/// is always a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0}")]
    AtInfinity(&'static str),
    #[error("coincident loci")]
    Coincident,
    #[error("no intersection: {0}")]
    NoIntersection(&'static str),
    #[error("{0}")]
    Domain(&'static str),
    #[error("vertices are labeled clockwise")]
    Clockwise,
    #[error("degenerate: {0}")]
    Degenerate(&'static str),
    #[error("triangle inequality violated")]
    TriangleInequality,
    #[error("point outside the open unit disc")]
    OutsideDisc,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::AtInfinity(_) => "at_infinity",
            Error::Coincident => "coincident",
            Error::NoIntersection(_) => "no_intersection",
            Error::Domain(_) => "domain",
            Error::Clockwise => "clockwise",
            Error::Degenerate(_) => "degenerate",
            Error::TriangleInequality => "triangle_inequality",
            Error::OutsideDisc => "outside_disc",
            Error::Internal(_) => "internal",
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
