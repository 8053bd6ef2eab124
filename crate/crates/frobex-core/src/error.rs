use thiserror::Error;

#[derive(Error, Debug)]
pub enum FrobexError {
    #[error("field mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    FieldMismatch { left: u64, right: u64 },

    #[error("shape mismatch: {what}")]
    ShapeMismatch { what: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("conductor too small: need a multiple of {needed}, have {have}")]
    ConductorTooSmall { needed: u64, have: u64 },

    #[error("conductor {from} does not divide {to}")]
    NonDivisibleConductor { from: u64, to: u64 },

    #[error("capacity exceeded: {what}")]
    Capacity { what: String },

    #[error("search budget exceeded after {visited} nodes (budget {budget})")]
    BudgetExceeded { visited: u64, budget: u64 },

    #[error("parse error: {what}")]
    Parse { what: String },

    #[error("precondition failed: {what}")]
    Precondition { what: String },

    #[error("algebra is not separable")]
    NotSeparable,

    #[error("invalid group table: {what}")]
    InvalidGroupTable { what: String },
}

pub type Result<T> = std::result::Result<T, FrobexError>;
