use thiserror::Error;

/// Errors raised by the exact engines. Float-side validation reports its
/// findings through return values instead and only uses [`Error::Domain`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// A polynomial division left a nonzero remainder where an exact
    /// quotient was required. Inside fraction-free elimination this can
    /// only happen through a pivoting bug, so callers treat it as fatal.
    #[error("non-exact polynomial division")]
    ExactDivision,

    #[error("series division requires a divisor with a nonzero lowest-order coefficient")]
    SeriesDivision,

    /// A truncated series operation would have to multiply two logarithmic
    /// terms, which the representation does not carry.
    #[error("cannot multiply two series that both carry a log term")]
    LogProduct,

    #[error("degenerate moment sequence: Hankel determinant H_{0} vanishes")]
    DegenerateMoments(usize),

    #[error("recurrence parameters too short: need {need}, have {have}")]
    Arity { need: usize, have: usize },

    #[error("equivalence transform requires nonzero factors, r_{0} vanishes")]
    Equivalence(usize),

    #[error("contraction undefined: {0}")]
    Contraction(String),

    /// The assembled combination of digamma-style series was expected to
    /// cancel its log terms exactly and did not.
    #[error("log terms failed to cancel in formal series assembly")]
    FormalCancellation,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
