use thiserror::Error;

use crate::field::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },
    #[error("label clash: {0}")]
    LabelClash(String),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("span is not closed under the product: e{0} * e{1} leaves it")]
    NotASubalgebra(usize, usize),
    #[error("search space of size {size} exceeds the budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("unsupported prime {0}: need a prime p >= 5")]
    BadPrime(u32),
    #[error("unknown field descriptor {0:?}")]
    BadField(String),
    #[error("bad scalar literal {0:?}")]
    BadScalar(String),
    #[error("operation needs a finite field")]
    InfiniteField,
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("schema error at {path}: {msg}")]
    Schema { path: String, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    pub(crate) fn schema(path: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Schema { path: path.into(), msg: msg.into() }
    }
}

/// Checks a search-space size against a budget.
pub fn within_budget(size: u128, budget: u128) -> Result<()> {
    if size > budget {
        Err(Error::BudgetExceeded { size, budget })
    } else {
        Ok(())
    }
}

pub(crate) fn ensure_field(expected: Field, found: Field) -> Result<()> {
    if expected != found {
        Err(Error::FieldMismatch { expected, found })
    } else {
        Ok(())
    }
}
