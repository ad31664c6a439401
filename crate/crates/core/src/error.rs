use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd of zero polynomials")]
    GcdOfZero,

    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("no variable to eliminate")]
    NoVariableToEliminate,

    #[error("declared degree {declared} is below the actual degree {actual}")]
    DegreeBelowActual { declared: usize, actual: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("zero polynomial passed to {0}")]
    ZeroPolynomial(&'static str),

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("non-exact division inside fraction-free elimination")]
    InexactDivision,

    #[error("quasi-generators are linearly dependent over Q[t]")]
    DependentQuasiGenerators,

    #[error("input is p*D form, not reduced: entries share the factor {0}")]
    NotReduced(String),

    #[error("degenerate sampling: parametrization degree inconsistent across retries")]
    DegenerateSampling,

    #[error("module defines no hypersurface")]
    NoHypersurface,

    #[error("plane normal must satisfy n.n = 1")]
    NonUnitNormal,

    #[error("point in tangent hyperplane T_q (y0 = 0)")]
    PointAtInfinity,

    #[error("zero vector has no line type")]
    ZeroVector,

    #[error("zero denominator in spine coordinate {0}")]
    ZeroDenominator(usize),

    #[error("point spine: the spine curve is constant")]
    PointSpine,

    #[error("degenerate sample: the 5x6 tangent matrix has rank < 5")]
    DegenerateSample,

    #[error("spine is not of general type")]
    NotGeneralType,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
