use thiserror::Error;

/// Errors reported by braid and curve operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for {n} strands")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("strand {strand} out of range for {n} strands")]
    StrandOutOfRange { strand: usize, n: usize },

    #[error("braid is not pure (underlying permutation is nontrivial)")]
    NotPure,

    #[error("strand {strand} does not return to its starting position")]
    StrandNotReturning { strand: usize },

    #[error("operation requires {expected} strands, got {got}")]
    WrongStrandCount { expected: usize, got: usize },

    #[error("degenerate puncture range ({i},{j}) for {n} punctures")]
    DegenerateCurve { n: usize, i: usize, j: usize },

    #[error("cycling is undefined on elements of canonical length zero")]
    CanonicalLengthZero,

    #[error("enumeration exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("curve is not fixed by the braid")]
    CurveNotFixed,

    #[error("curve is not round")]
    CurveNotRound,

    #[error("invalid reducibility witness: {0}")]
    InvalidWitness(String),

    #[error("word parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
