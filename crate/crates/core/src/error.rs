use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("the zero form is not allowed here")]
    ZeroForm,
    #[error("zero linear form")]
    ZeroLinearForm,
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("non-finite entry in numeric input")]
    NonFinite,
    #[error("numeric iteration failed to converge")]
    NoConvergence,
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("{0} is not an eigenvector")]
    NotEigenvector(String),
    #[error("eigenpolynomial vanishes identically ({0})")]
    DegenerateEigen(String),
    #[error("wild case, not decomposable by this routine: {0}")]
    WildCase(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("pencil has no squarefree member")]
    NoSquarefreeMember,
    #[error("linear forms are proportional")]
    Proportional,
}

pub type Result<T> = std::result::Result<T, Error>;
