use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by constructors, transformations and loaders.
///
/// `Display` renders as `<code>: <detail>` so callers can forward the text
/// verbatim as a machine-parseable line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed-input: {0}")]
    Malformed(String),

    #[error("invalid-arrangement: {0}")]
    InvalidArrangement(String),

    #[error("invalid-wiring: {0}")]
    InvalidWiring(String),

    #[error("out-of-range: {0}")]
    OutOfRange(String),

    #[error("not-a-digon: face {0}")]
    NotDigon(usize),

    #[error("not-a-touching: vertex {0}")]
    NotTouching(usize),

    #[error("side-mismatch: relaxing vertex {vertex} produces a digon on the {actual} side")]
    SideMismatch { vertex: usize, actual: &'static str },

    #[error("too-few-touchings: circle {circle} has {count} touchings, need at least 3")]
    TooFewTouchings { circle: usize, count: usize },

    #[error("mixed-touching-sides: circle {0} is touched from both sides")]
    MixedTouchingSides(usize),

    #[error("invalid-witness: {0}")]
    InvalidWitness(String),

    #[error("no-witness: circle {0} has no alternating triangle quadruple")]
    NoWitness(usize),

    #[error("digons-present: {0} digon or touching cells")]
    DigonsPresent(usize),

    #[error("not-a-touching-triple: {0}")]
    NotTouchingTriple(String),

    #[error("no-intersection: wires {0} and {1} never meet")]
    NoIntersection(usize, usize),

    #[error("no-wiring: {0}")]
    NoWiring(String),

    #[error("construction-failed: {0}")]
    ConstructionFailed(String),
}

impl Error {
    /// Stable short identifier, the part before the first colon of `Display`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Malformed(_) => "malformed-input",
            Error::InvalidArrangement(_) => "invalid-arrangement",
            Error::InvalidWiring(_) => "invalid-wiring",
            Error::OutOfRange(_) => "out-of-range",
            Error::NotDigon(_) => "not-a-digon",
            Error::NotTouching(_) => "not-a-touching",
            Error::SideMismatch { .. } => "side-mismatch",
            Error::TooFewTouchings { .. } => "too-few-touchings",
            Error::MixedTouchingSides(_) => "mixed-touching-sides",
            Error::InvalidWitness(_) => "invalid-witness",
            Error::NoWitness(_) => "no-witness",
            Error::DigonsPresent(_) => "digons-present",
            Error::NotTouchingTriple(_) => "not-a-touching-triple",
            Error::NoIntersection(..) => "no-intersection",
            Error::NoWiring(_) => "no-wiring",
            Error::ConstructionFailed(_) => "construction-failed",
        }
    }
}
