use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1} variables")]
    RingMismatch(usize, usize),
    #[error("arity mismatch: expected {expected} images, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
    #[error("too many variables: {0}")]
    TooManyVariables(usize),
    #[error("empty form list")]
    EmptyForms,
    #[error("polynomial is not linear: {0}")]
    NotLinear(String),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("linear forms are dependent")]
    DependentForms,
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("nonpositive coefficient {0}")]
    NonPositiveCoefficient(i64),
    #[error("equidimensional hull failed after {0} attempts")]
    HullFailure(u32),
    #[error("colength differences did not stabilize by s = {0}")]
    NoStabilization(u32),
    #[error("improper cut: the divisor contains a component of the chunk")]
    ImproperCut,
    #[error("genericity exhausted after {0} resamples")]
    GenericityExhausted(u32),
    #[error("fixed/moving classification unstable: {0}")]
    Instability(String),
    #[error("chunk is not supported in the join diagonal")]
    NotInDiagonal,
    #[error("ambient mismatch: ℙ^{0} vs ℙ^{1}")]
    AmbientMismatch(usize, usize),
    #[error("audit failure: {0}")]
    Audit(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Errors that stem from an unlucky or degenerate random choice rather
    /// than from malformed input.
    pub fn is_genericity(&self) -> bool {
        matches!(
            self,
            Error::GenericityExhausted(_)
                | Error::Instability(_)
                | Error::HullFailure(_)
                | Error::NoStabilization(_)
        )
    }
}
