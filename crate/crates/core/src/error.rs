use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("rank mismatch: expected rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("exponent {value} exceeds the configured cap {cap}")]
    ExponentOverflow { value: u64, cap: u32 },

    #[error("colon by the zero ideal is undefined")]
    ZeroColon,

    #[error("the unit ideal has no {0}")]
    UnitIdeal(&'static str),

    #[error("the zero ideal has no {0}")]
    ZeroIdeal(&'static str),

    #[error("degenerate ideal: {0}")]
    DegenerateIdeal(&'static str),

    #[error("empty module: the subquotient U/V has U = V")]
    EmptyModule,

    #[error("not a submodule: {0}")]
    NotContained(&'static str),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
