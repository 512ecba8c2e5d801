//! Crate-wide error type.

/// Errors surfaced by the library.
///
/// Every fallible operation reports *why* it failed; internal invariant
/// violations that indicate a bug (rather than bad input) panic instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unsupported field degree {0} (supported: 1..=16)")]
    UnsupportedDegree(usize),

    #[error("modulus {modulus:#x} does not have degree {k}")]
    WrongModulusDegree { k: usize, modulus: u32 },

    #[error("modulus {modulus:#x} is reducible over GF(2)")]
    ReducibleModulus { modulus: u32 },

    #[error("mixed fields: GF(2^{left}) vs GF(2^{right})")]
    FieldMismatch { left: usize, right: usize },

    #[error("shape mismatch in {op}: {details}")]
    ShapeMismatch { op: &'static str, details: String },

    #[error("no embedding GF(2^{src}) -> GF(2^{dst}): source degree must divide target degree")]
    NonDividingDegree { src: usize, dst: usize },

    #[error("field of degree {k} has no element of multiplicative order 3 (degree must be even)")]
    NoOrderThreeElement { k: usize },

    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,

    #[error("refusing to factor degree-{degree} polynomial over GF(2^{field_degree}): trial-division budget exceeded")]
    FactorizationTooLarge { degree: usize, field_degree: usize },

    #[error("matrices are over different fields or dimensions do not match: {0}")]
    Incompatible(String),

    #[error("module relations violated: {0}")]
    InvalidModule(String),

    #[error("map is not a module homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("maps are not composable: {0}")]
    NotComposable(String),

    #[error("module is not projective-free: free rank {free_rank} > 0")]
    NotProjectiveFree { free_rank: usize },

    #[error("module does not lie inside the radical block of the ambient free module")]
    NotInsideRadical,

    #[error("periodicity verification failed: {0}")]
    PeriodicityFailed(String),

    #[error("ghost space is zero; nothing to sample")]
    EmptyGhostSpace,

    #[error("linear solve has no solution where theory guarantees one ({context}); this is a certified counterexample: {details}")]
    LemmaCounterexample { context: &'static str, details: String },

    #[error("decomposition internal check failed: {0}")]
    DecompositionFailed(String),

    #[error("lift verification failed: {0}")]
    LiftVerificationFailed(String),

    #[error("isomorphism search undecided: {0}")]
    IsoUndecided(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
