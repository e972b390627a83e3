//! Error types shared across the engine.

use crate::poly::Polynomial;

/// Position-annotated syntax error for the loop DSL and polynomial text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at {line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError { line, col, msg: msg.into() }
    }
}

/// Which configured ceiling was exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResourceKind {
    /// Invariant-set chain iteration cap.
    Iterations,
    /// Buchberger S-pair budget.
    SPairs,
    /// Coefficient bit-size ceiling.
    CoeffBits,
    /// Cooperative wall-clock deadline.
    Deadline,
}

impl std::fmt::Display for ResourceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ResourceKind::Iterations => write!(f, "iteration cap"),
            ResourceKind::SPairs => write!(f, "S-pair budget"),
            ResourceKind::CoeffBits => write!(f, "coefficient bit ceiling"),
            ResourceKind::Deadline => write!(f, "deadline"),
        }
    }
}

/// Computation phase that hit a resource ceiling. Lets callers report
/// candidate-phase, verification-phase and fallback failures distinctly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Groebner,
    InvariantChain,
    Orbit,
    Candidates,
    Verification,
    Fallback,
}

impl std::fmt::Display for Phase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Phase::Groebner => write!(f, "Groebner basis computation"),
            Phase::InvariantChain => write!(f, "invariant-set chain"),
            Phase::Orbit => write!(f, "orbit evaluation"),
            Phase::Candidates => write!(f, "candidate phase"),
            Phase::Verification => write!(f, "verification phase"),
            Phase::Fallback => write!(f, "fallback repair phase"),
        }
    }
}

/// A typed resource-exhaustion outcome carrying whatever partial state the
/// interrupted phase had produced (a partial basis, a partial generator
/// chain, partial candidates, ...).
#[derive(Debug, Clone, thiserror::Error)]
#[error("{phase} exceeded {kind}: {detail}")]
pub struct ResourceError {
    pub kind: ResourceKind,
    pub phase: Phase,
    pub detail: String,
    /// Partial state computed before the ceiling was hit.
    pub partial: Vec<Polynomial>,
}

impl ResourceError {
    pub fn new(kind: ResourceKind, phase: Phase, detail: impl Into<String>) -> Self {
        ResourceError { kind, phase, detail: detail.into(), partial: Vec::new() }
    }

    pub fn with_partial(mut self, partial: Vec<Polynomial>) -> Self {
        self.partial = partial;
        self
    }

    pub fn rephase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }
}

/// Engine-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Resource(Box<ResourceError>),
    #[error("{0}")]
    Unsupported(String),
}

impl From<ResourceError> for Error {
    fn from(e: ResourceError) -> Self {
        Error::Resource(Box::new(e))
    }
}

impl Error {
    pub fn resource(&self) -> Option<&ResourceError> {
        match self {
            Error::Resource(e) => Some(e),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
