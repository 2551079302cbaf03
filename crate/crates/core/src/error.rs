use alloc::string::String;

use crate::validate::ValidationReport;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    Dimension {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{what} failed validation: {report}")]
    Invalid {
        what: &'static str,
        report: ValidationReport,
    },
    #[error("capacity exceeded: {what} is {actual}, limit is {limit}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("structures live over different base rings")]
    RingMismatch,
    #[error("operation needs a finite base ring")]
    NotFinite,
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }

    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Dimension { .. } | Error::Invalid { .. } | Error::Argument(_)
        )
    }
}
