use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("unknown symbol `{name}` at position {position}")]
    UnknownSymbol { name: String, position: usize },
    #[error("syntax error at position {position}: {message}")]
    Syntax { message: String, position: usize },
    #[error("division by zero at position {position}")]
    ZeroDivision { position: usize },
    #[error("jet depth exceeded: derivative of `{symbol}` along `{coordinate}` is not materialized")]
    DepthExceeded { symbol: String, coordinate: String },
    #[error("`{0}` is not a coordinate")]
    NotACoordinate(String),
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("symbol `{0}` has no value at the evaluation point")]
    Unassigned(String),
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("invalid symbol name `{0}`")]
    InvalidName(String),
}
