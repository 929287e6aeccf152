use thiserror::Error;

/// Crate-wide error type.
///
/// Resource-bound overruns are a dedicated variant so callers can map them to
/// a distinct exit code instead of treating them as a mathematical verdict.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("negative exponent")]
    NegativeExponent,

    #[error("ring context mismatch: {0}")]
    ContextMismatch(String),

    #[error("coefficient {coeff} of monomial {monomial} is not divisible by {divisor}")]
    NotDivisible {
        coeff: String,
        monomial: String,
        divisor: String,
    },

    #[error("no substitution image for variable `{0}`")]
    MissingImage(String),

    #[error("{0}")]
    Domain(String),

    #[error("invalid Frobenius lift on `{variable}`: {witness} is not divisible by p")]
    InvalidLift { variable: String, witness: String },

    #[error("{0} is not a phi-monomial under the active lift")]
    NotPhiMonomial(String),

    #[error("ideal did not stabilize within {max_iter} delta-iterations")]
    NotStabilized { max_iter: u32 },

    #[error("membership inconclusive for {element}: rational certificate found, but every denominator is divisible by p (denominator {denominator})")]
    Inconclusive { element: String, denominator: String },

    #[error("resource bound exceeded: {0}")]
    ResourceExceeded(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for overruns of the configured engine limits.
    pub fn is_resource_bound(&self) -> bool {
        matches!(self, Error::ResourceExceeded(_) | Error::NotStabilized { .. })
    }
}
