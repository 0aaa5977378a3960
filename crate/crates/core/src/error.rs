use thiserror::Error;

/// Crate-wide error type. Domain errors are user-facing; `Internal` signals
/// a broken invariant and should never occur on valid inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("quiver parse error: {0}")]
    QuiverParse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operation requires a type A quiver ({0})")]
    NotTypeA(String),

    #[error("operation requires an equioriented type A quiver")]
    NotEquioriented,

    #[error("duplicate interpolation node q = {0}")]
    DuplicateNode(String),

    #[error("interpolation requires at least one sample point")]
    NoSamples,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("permutation size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("point-count budget exceeded: q = {0} is too large for method {1}")]
    CountBudget(u64, &'static str),

    #[error("interpolant fails to reproduce held-out sample at q = {0}: counting bug")]
    NonPolynomialFit(u64),

    #[error("not a Bruhat interval: {0} is not <= {1}")]
    NotBruhatComparable(String, String),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("representation has a non-injective arrow {0} -> {1}")]
    NonInjectiveArrow(usize, usize),

    #[error("quiver is not the two-sided flag quiver A_{{2n-1}} with d = (1,..,n,..,1)")]
    WrongQuiverShape,

    #[error("no torsion certified: report verdict is IDENTICAL")]
    NoTorsionCertified,

    #[error("closure order violated: upper stratum does not degenerate to lower stratum")]
    ClosureOrderViolated,

    #[error("report does not record a divergence at the expected vertex {0}")]
    DivergenceVertexMismatch(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
