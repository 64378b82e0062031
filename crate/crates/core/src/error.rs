use thiserror::Error;

/// Largest supported ground set. Rows of a relation are packed into `u16`.
pub const MAX_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {0} exceeds the supported maximum of {MAX_N}")]
    GroundSetTooLarge(usize),

    #[error("point {point} is outside the ground set 1..={n}")]
    PointOutOfRange { point: usize, n: usize },

    #[error("dimension mismatch: left operand has n = {left}, right operand has n = {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("relation is not difunctional: ({0}, {1}) lies in a∘a⁻¹∘a but not in a")]
    NotDifunctional(usize, usize),

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("invalid block list: {0}")]
    InvalidBlocks(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed JSON input: {0}")]
    Json(String),

    #[error("search of {estimated} subsets exceeds the budget of {budget}")]
    BudgetExceeded { estimated: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
