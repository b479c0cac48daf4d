use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("no value assigned to variable '{0}'")]
    MissingVariable(char),
    #[error("operator '{symbol}' with {operands} operand(s) has no meaning in this semantics")]
    UnsupportedOperator { symbol: char, operands: usize },
    #[error("{found} variables exceed the enumeration limit of {limit}")]
    TooManyVariables { found: usize, limit: usize },
    #[error("weight {0} lies outside [0, 1]")]
    WeightOutOfRange(f64),
    #[error("value {0} is not a truth value of this semantics")]
    InvalidValue(f64),
    #[error("dimension {0} is outside the supported range 2..=64")]
    InvalidDimension(usize),
    #[error("vector is not in the span of f and t (residual {residual:e})")]
    OutOfSpan { residual: f64 },
    #[error("operands were built on different bases")]
    BasisMismatch,
}
