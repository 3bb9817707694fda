use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unsupported variable '{name}' at position {pos}: only x is allowed")]
    MultipleVariables { pos: usize, name: String },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("empty input")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("nonconstant polynomial required")]
    ConstantPolynomial,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not square")]
    NotSquare,
    #[error("root finder did not converge: {0}")]
    RootFinding(String),
    #[error("polynomial is real-rooted; no negativity witness exists")]
    RealRooted,
    #[error("interpolation failed: max residual {residual:e}")]
    Interpolation { residual: f64 },
    #[error("witness check failed: {0}")]
    WitnessCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
