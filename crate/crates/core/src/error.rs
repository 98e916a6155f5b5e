use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{op}: constant term must be {expected}, got {found}")]
    ConstantTerm {
        op: &'static str,
        expected: f64,
        found: String,
    },

    #[error("non-finite coefficient at index {index}")]
    NonFinite { index: usize },

    #[error("{what} = {value} outside admissible range {range}")]
    OutOfRange {
        what: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("unknown {kind} '{name}'")]
    UnknownName { kind: &'static str, name: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("no sign change on [{lo}, {hi}] for {equation}")]
    Bracket {
        equation: &'static str,
        lo: f64,
        hi: f64,
    },

    #[error("no case of {theorem} applies: {diagnostics}")]
    NoCase {
        theorem: &'static str,
        diagnostics: String,
    },

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
}
