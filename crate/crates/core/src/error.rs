use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("cannot parse number: {0}")]
    Parse(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("coalesced knots: interval of zero length")]
    CoalescedKnots,
    #[error("duplicate interpolation nodes")]
    DuplicateNodes,
    #[error("degenerate fan: angle {0} not in (0, pi)")]
    DegenerateFan(f64),
    #[error("ladder breakdown: zero denominator at order {0}")]
    LadderBreakdown(usize),
    #[error("degenerate intersection step: {0}")]
    Degenerate(String),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("unsupported configuration: q = {q}, s = {s}")]
    UnsupportedConfiguration { q: usize, s: usize },
    #[error("inconsistent characteristic ({n}, {c}, {r})")]
    InconsistentCharacteristic { n: usize, c: usize, r: usize },
    #[error("matrix is not decomposable into a quaternion product")]
    NotDecomposable,
}

pub type Result<T> = std::result::Result<T, Error>;
