use crate::numbering::SizeReport;
use crate::syntax::{SyntaxError, Var};

/// Every failure the library reports.
///
/// The `Display` form of each variant starts with the variant name so that
/// command-line diagnostics name the failing case.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("SyntaxError: {0}")]
    Syntax(#[from] SyntaxError),
    #[error("OpenTermError: substituted term contains variables")]
    OpenTerm,
    #[error("EmptySequence: the empty symbol sequence has no code")]
    EmptySequence,
    #[error("CapExceeded: {}", match .0 { Some(r) => alloc::format!("{r}"), None => "code too large to materialize".into() })]
    CapExceeded(Option<SizeReport>),
    #[error("NotDecodable: {0}")]
    NotDecodable(DecodeFailure),
    #[error("UnsupportedScheme: operation needs a positional scheme")]
    UnsupportedScheme,
    #[error("VariableNotFree: {0} has no free occurrence")]
    VariableNotFree(Var),
    #[error("ArityError: expected exactly one free variable, found {found}")]
    Arity { found: usize },
    #[error("BoundsError: prefix length {k} outside 1..={available}")]
    Bounds { k: usize, available: usize },
    #[error("SchemeError: {0}")]
    Scheme(&'static str),
}

/// Why a number does not name a symbol sequence (or not the expected kind).
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DecodeFailure {
    #[error("code 0 has no symbol sequence")]
    ZeroCode,
    #[error("digit 0 at position {0}")]
    ZeroDigit(usize),
    #[error("digit {0} is not assigned to a symbol")]
    UnassignedCode(u32),
    #[error("exponent of prime {0} is zero before the end of the factorization")]
    ExponentGap(u32),
    #[error("factorization longer than {0} primes")]
    TooLong(usize),
    #[error("symbol sequence is not a well-formed formula ({0})")]
    NotAFormula(SyntaxError),
    #[error("symbol sequence is not a proof: {0}")]
    NotAProof(&'static str),
}

impl From<DecodeFailure> for Error {
    fn from(f: DecodeFailure) -> Self {
        Error::NotDecodable(f)
    }
}
