use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Position-bearing parse failure. `line` is 1-based; `column` is a 1-based
/// character offset into that line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different variable orders")]
    OrderMismatch,
    #[error("invalid variable order: {0}")]
    InvalidOrder(String),
    #[error("no class: polynomial is constant")]
    NoClass,
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("divisor has degree 0 in `{0}`")]
    ConstantInVariable(String),
    #[error("both operands have degree 0 in `{0}`")]
    BothConstant(String),
    #[error("not a triangular set: {0}")]
    NotTriangular(String),
    #[error("empty polynomial set")]
    EmptyInput,
    #[error("variable `{0}` does not exist in the target ring")]
    MissingVariable(String),
    #[error("invalid term order: {0}")]
    InvalidTermOrder(String),
    #[error("unknown saturation method `{0}`")]
    UnknownMethod(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit(_))
    }
}
