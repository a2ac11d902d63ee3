use alloc::string::String;

/// Errors raised by the exact algebra, curve model, and bound evaluators.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,
    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,
    #[error("reversal bound {bound} is below the polynomial degree {degree}")]
    BadReversalBound { bound: usize, degree: usize },
    #[error("valuation of the zero polynomial is undefined")]
    UndefinedValuation,
    #[error("all components of the curve are zero")]
    DegenerateCurve,
    #[error("expected {expected} components, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("rational self-map is constant or zero")]
    DegenerateMap,
    #[error("level {level} is outside 0..={n}")]
    BadLevel { level: usize, n: usize },
    #[error("curve is not full (components are linearly dependent)")]
    NotFull,
    #[error("bounds are not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("malformed literal `{literal}`: {reason}")]
    Parse { literal: String, reason: String },
    /// A violated identity between independently computed quantities. Always a bug.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = core::result::Result<T, Error>;
