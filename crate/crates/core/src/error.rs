use thiserror::Error;

/// Errors surfaced by the algebra kernel and the invariant calculators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: expected {expected}")]
    Syntax { pos: usize, expected: String },

    #[error("unknown variable {name:?} at position {pos}")]
    UnknownVariable { pos: usize, name: String },

    #[error("exponent at position {pos} is not a nonnegative integer")]
    BadExponent { pos: usize },

    #[error("operands live in rings with different variable counts ({left} vs {right})")]
    VarCountMismatch { left: usize, right: usize },

    #[error("elimination variable x{var} is not in the global block of the active order")]
    NotEliminationOrder { var: usize },

    #[error("saturation did not stabilise within {cap} quotient rounds")]
    SaturationCap { cap: usize },

    #[error("germ generator {index} has nonzero constant term; the germ must pass through the origin")]
    NotThroughOrigin { index: usize },

    #[error("declared dimension {declared} does not match the computed dimension {computed}")]
    DimensionMismatch { declared: usize, computed: usize },

    #[error("{what} is not isolated: the critical locus has positive dimension")]
    NonIsolated { what: String },

    #[error("({prefix}) is not an ICIS along the given order: the Lê-Greuel quotient is infinite")]
    NotIcis { prefix: String },

    #[error("expected a curve (1-dimensional ideal), found dimension {found}")]
    NotACurve { found: usize },

    #[error("non-admissible pair (f, g): {reason}")]
    NonAdmissiblePair { reason: String },

    #[error("genericity certification failed after {rounds} redraw rounds: {detail}")]
    GenericityFailure { rounds: u32, detail: String },

    #[error("computation inconsistency in {context}: {detail}")]
    Inconsistency { context: String, detail: String },

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
