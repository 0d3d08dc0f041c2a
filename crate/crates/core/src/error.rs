use thiserror::Error;

/// Errors reported by the decision procedures.
///
/// Decisions themselves (certificate, witness, inconsistency, ...) are never
/// errors; these variants only describe malformed input or exhausted budgets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("band index {index} out of range for ambient dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("invalid partition of unity: {0}")]
    InvalidPartition(String),
    #[error("interval operator has lower bound above upper bound at ({row}, {col})")]
    InvertedInterval { row: usize, col: usize },
    #[error("negative bound u[{k}][{i}] not allowed")]
    NegativeBound { k: usize, i: usize },
    #[error("linear program is empty: no constraints and no objective")]
    EmptyProgram,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("budget exceeded: {what} is {actual}, limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

impl Error {
    pub(crate) fn dims(context: &'static str, expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                context,
                expected,
                found,
            })
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
