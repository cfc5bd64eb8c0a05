use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type. Everything in the engine is exact, so most
/// variants signal contract violations rather than numerical trouble.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid torus shape ({m},{n}): {reason}")]
    InvalidShape {
        m: u32,
        n: u32,
        reason: &'static str,
    },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("integer coefficient overflow during {op}")]
    CoefficientOverflow { op: &'static str },

    #[error("integer exponent overflow during {op}")]
    ExponentOverflow { op: &'static str },

    #[error("substitution for {var} mentions a variable that is itself substituted")]
    BadSubstitution { var: &'static str },

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("divisor must be a polynomial in Q alone with unit leading coefficient")]
    UnsupportedDivisor,

    #[error("monomial Q^{dq}*a^{dalpha}*T^{dt} lies outside the q/t/(T^-1 a^2) sub-algebra")]
    NotConvertible { dq: i64, dalpha: i64, dt: i64 },

    #[error("path is not a star image: vertical step at index {index} is not followed by a horizontal step")]
    NotStarImage { index: usize },

    #[error("cannot unstar a path of shape ({m},{n}): the horizontal extent must exceed the vertical one")]
    UnstarShape { m: u32, n: u32 },

    #[error("the closure of a 2-braid with even exponent {k} has two components; its HOMFLY value is not a Laurent polynomial")]
    EvenTwoBraid { k: u32 },

    #[error("({x},{y}) is not an outer vertex of the path")]
    NotOuterVertex { x: i64, y: i64 },

    #[error("path count overflow for shape ({m},{n})")]
    CountOverflow { m: u32, n: u32 },
}
