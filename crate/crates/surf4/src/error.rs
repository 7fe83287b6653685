//! Error type shared by the whole pipeline.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong while evaluating a chart or deriving
/// invariants from it.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The parameter point is outside the chart domain (or too close to the
    /// boundary for the finite-difference stencil).
    DomainViolation { u: f64, v: f64 },
    /// `z_u` and `z_v` are (numerically) linearly dependent; `w` is the norm
    /// of their wedge at the offending point.
    DegenerateChart { w: f64 },
    /// A tangent direction with both coefficients zero.
    ZeroDirection,
    /// All second-fundamental-form coefficients vanish; the construction is
    /// undefined at flat points.
    FlatPoint,
    /// Every tangent is principal (minimal point); there is no distinguished
    /// pair of principal directions.
    UmbilicLike,
    /// The curvature ellipse is not a line segment.
    NotASegment,
    /// A meridian profile violates its arc-length or positivity constraints.
    InvalidProfile(String),
    /// The meridian profile radius vanishes at this parameter.
    PoleOfProfile { u: f64 },
    /// A family or chart specification is inconsistent.
    InvalidSpec(String),
    /// The parametric curve degenerates (zero speed or undefined frame).
    DegenerateCurve,
    /// A closed-form profile leaves its admissible range inside the
    /// requested domain.
    ProfileOutOfRange { u: f64 },
    /// A closed-form ODE solution was evaluated outside its validity region.
    OutsideValidity(String),
    /// A single integration step moved further than the arc-length bound
    /// allows; the step size is too large for this profile.
    StepTooLarge { step: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DomainViolation { u, v } => {
                write!(f, "parameter point ({u}, {v}) violates the chart domain")
            }
            Error::DegenerateChart { w } => {
                write!(f, "degenerate chart: |z_u ^ z_v| = {w} below regularity threshold")
            }
            Error::ZeroDirection => write!(f, "zero tangent direction"),
            Error::FlatPoint => write!(f, "flat point: L = M = N = 0"),
            Error::UmbilicLike => {
                write!(f, "every tangent is principal; no distinguished principal pair")
            }
            Error::NotASegment => write!(f, "curvature ellipse is not a line segment"),
            Error::InvalidProfile(msg) => write!(f, "invalid meridian profile: {msg}"),
            Error::PoleOfProfile { u } => write!(f, "profile radius vanishes at u = {u}"),
            Error::InvalidSpec(msg) => write!(f, "invalid specification: {msg}"),
            Error::DegenerateCurve => write!(f, "degenerate parametric curve"),
            Error::ProfileOutOfRange { u } => {
                write!(f, "profile leaves its admissible range at u = {u}")
            }
            Error::OutsideValidity(msg) => write!(f, "outside validity region: {msg}"),
            Error::StepTooLarge { step } => {
                write!(f, "integration step {step} violates the arc-length bound")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
