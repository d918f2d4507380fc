use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not divisible by {0}")]
    NonDivisible(String),
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("position {0} is not trimmable (not in qdes)")]
    NotTrimmable(usize),
    #[error("composition has {parts} parts but only {n} variables are available")]
    TooManyParts { parts: usize, n: usize },
    #[error("expansion did not terminate within {0} peeling rounds")]
    IterationCapExceeded(usize),
    #[error("polynomial is not quasisymmetric in x1..x{0}")]
    NotQuasisymmetric(usize),
    #[error("polynomial involves x{var} but the expansion window is x1..x{n}")]
    SupportExceedsWindow { var: usize, n: usize },
    #[error("polynomial must be free of the parameter b")]
    NotBetaFree,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("variable and operator indices start at 1")]
    ZeroIndex,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
