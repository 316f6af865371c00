use thiserror::Error;

/// Errors raised by constructions, certification and graph routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid matrix shape: {0}")]
    Shape(String),

    #[error("matrix entry at ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("invalid column selection: {0}")]
    InvalidSelection(String),

    #[error("unsupported exponent {0}: only even positive powers are supported")]
    UnsupportedExponent(u32),

    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:e})")]
    NotPsd { eigenvalue: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("congruence condition violated: {0}")]
    Congruence(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("Gram matrix is not real (max |Im| = {max_imag:e}); frame cannot be realified")]
    NotRealizable { max_imag: f64 },

    #[error("coherence is undefined for a frame with {0} column(s)")]
    UndefinedCoherence(usize),

    #[error("enumeration too large: {count} cases exceed the budget of {budget}")]
    EnumerationTooLarge { count: u128, budget: u128 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("frame is not equiangular: {0}")]
    NotEtf(String),

    #[error("ambiguous sign: inner product between columns {i} and {j} is numerically zero")]
    AmbiguousSign { i: usize, j: usize },

    #[error("vertex {0} is not adjacent to every other vertex")]
    NotAJoin(usize),

    #[error("infeasible real ETF size: {0}")]
    InfeasibleSize(String),

    #[error("graph is not regular")]
    NotRegular,

    #[error("bound is vacuous: {0}")]
    BoundVacuous(String),

    #[error("malformed halving chain: {0}")]
    Chain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
