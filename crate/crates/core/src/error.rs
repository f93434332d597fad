use thiserror::Error;

/// Everything that can go wrong while building or querying a Coxeter system.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("unknown Coxeter type `{0}`")]
    UnknownType(String),
    #[error("malformed presentation document: {0}")]
    Parse(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("vector is not a root: coefficients of mixed sign")]
    MixedSigns,
    #[error("vector is not a root: zero vector")]
    ZeroVector,
    #[error("vectors span a line, not a plane")]
    DegeneratePlane,
    #[error("{what} exceeded the configured cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("join ambiguity: upper bounds of {0} have no unique minimum")]
    JoinAmbiguity(String),
    #[error("closure produced {0}, which is not a low element")]
    EscapedLow(String),
    #[error("element {0} lies outside the supported join family")]
    OutsideSupportedFamily(String),
    #[error("internal division failure: {0}")]
    InternalDivisionFailure(String),
    #[error("no closed-form description applies to this Coxeter type")]
    NotApplicable,
}

impl Error {
    /// True for errors that signal a broken invariant rather than bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::JoinAmbiguity(_) | Error::EscapedLow(_) | Error::InternalDivisionFailure(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
