use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set size {0} exceeds the structural limit of 64 variables")]
    GroundTooLarge(usize),

    #[error("ground set size mismatch: expected {expected}, found {found}")]
    GroundMismatch { expected: usize, found: usize },

    #[error("variable index {index} is outside 1..={ground}")]
    VariableOutOfRange { index: usize, ground: usize },

    #[error("ground set size {ground} exceeds the enumeration cap {cap}")]
    EnumerationCap { ground: usize, cap: usize },

    #[error("ground set size {ground} exceeds the partition solver cap {cap}")]
    SolverCap { ground: usize, cap: usize },

    #[error("the module is zero (empty region); its depth is undefined")]
    ZeroModule,

    #[error("lower ideal is not contained in the upper ideal (generator {0} is missing)")]
    NotContained(String),

    #[error("invalid block specification: {0}")]
    InvalidSpec(String),

    #[error("{divisor} does not divide {n}")]
    NotDivisor { n: usize, divisor: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
