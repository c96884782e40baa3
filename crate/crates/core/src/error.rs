use std::fmt;

/// Failure modes surfaced by the library's fallible operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operands belong to different rings.
    RingMismatch,
    /// The operation needs field coefficients but the ring has some other domain.
    NotAField(String),
    /// A literal does not denote an element of the coefficient domain.
    CoefficientNotInDomain(String),
    DivisionByZero,
    /// The zero polynomial has no degree, leading term, or inverse.
    ZeroPolynomial(&'static str),
    Parse { pos: usize, msg: String },
    UnknownVariable(String),
    InvalidVariableSet(String),
    InvalidOrder(String),
    InvalidGrading(String),
    InvalidPermutation(String),
    InvalidHessenberg(String),
    IndexOutOfRange(String),
    /// h = (n, ..., n) has no column with h(l) < n.
    TrivialHessenberg,
    NotIndecomposable(String),
    /// Relabeling x[i,j] -> x[i-1,j] hit a first-row variable.
    RelabelRowOne(String),
    NotYCompatible(String),
    CheckFailed { context: String, check: String },
    ExactDivisionFailed(String),
    BudgetExceeded { what: String, limit: usize },
    UnitCheckFailed(String),
    NotPrime(u64),
    Io(String),
    Json(String),
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::NotAField(d) => write!(f, "operation requires field coefficients, got {d}"),
            Error::CoefficientNotInDomain(s) => write!(f, "coefficient not in domain: {s}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroPolynomial(op) => write!(f, "{op} is undefined for the zero polynomial"),
            Error::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            Error::UnknownVariable(v) => write!(f, "unknown variable: {v}"),
            Error::InvalidVariableSet(s) => write!(f, "invalid variable set: {s}"),
            Error::InvalidOrder(s) => write!(f, "invalid monomial order: {s}"),
            Error::InvalidGrading(s) => write!(f, "invalid grading: {s}"),
            Error::InvalidPermutation(s) => write!(f, "invalid permutation: {s}"),
            Error::InvalidHessenberg(s) => write!(f, "invalid Hessenberg function: {s}"),
            Error::IndexOutOfRange(s) => write!(f, "index out of range: {s}"),
            Error::TrivialHessenberg => {
                write!(f, "h = (n, ..., n): no column satisfies h(l) < n")
            }
            Error::NotIndecomposable(s) => write!(f, "Hessenberg function not indecomposable: {s}"),
            Error::RelabelRowOne(v) => {
                write!(f, "cannot relabel down: first-row variable {v} occurs")
            }
            Error::NotYCompatible(s) => write!(f, "order is not y-compatible: {s}"),
            Error::CheckFailed { context, check } => {
                write!(f, "check '{check}' failed at {context}")
            }
            Error::ExactDivisionFailed(s) => write!(f, "exact division failed: {s}"),
            Error::BudgetExceeded { what, limit } => {
                write!(f, "{what} exceeded the size budget of {limit}")
            }
            Error::UnitCheckFailed(s) => write!(f, "splitting unit check failed: {s}"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::Io(s) => write!(f, "io error: {s}"),
            Error::Json(s) => write!(f, "json error: {s}"),
            Error::Unsupported(s) => write!(f, "unsupported: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
