use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} is already a root")]
    AlreadyRoot(usize),

    #[error("vertex {0} is not a root")]
    NotARoot(usize),

    #[error("attaching tree {root} under {target} would create a cycle")]
    WouldCycle { root: usize, target: usize },

    #[error("invalid forest: {0}")]
    InvalidForest(String),

    #[error("not a member of the family: {0}")]
    FamilyViolation(String),

    #[error("choice {choice} is outside 1..={count}")]
    ChoiceOutOfRange { choice: usize, count: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("search space of {candidates} candidates exceeds the budget of {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("inconsistent family spec: {0}")]
    InconsistentSpec(String),

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("inexact division in {0}")]
    InexactDivision(&'static str),
}

pub(crate) fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}
