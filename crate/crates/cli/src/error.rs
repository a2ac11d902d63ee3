use isoindex_core::Error;

/// Failures of a CLI run, each tied to one exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("curve is not full: {0}")]
    NotFull(String),
    #[error("internal inconsistency (this is a bug): {0}")]
    Internal(String),
    #[error("{0} example check(s) mismatched")]
    Mismatch(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Input(_) => 2,
            Self::NotFull(_) => 3,
            Self::Internal(_) => 4,
            Self::Mismatch(_) => 5,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotFull => Self::NotFull("the curve lies in a proper projective subspace".into()),
            Error::InternalInconsistency(msg) => Self::Internal(msg),
            other => Self::Input(other.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_taxonomy() {
        assert_eq!(CliError::from(Error::Parse { literal: "x".into(), reason: "bad".into() }).exit_code(), 2);
        assert_eq!(CliError::from(Error::ArityMismatch { expected: 3, found: 2 }).exit_code(), 2);
        assert_eq!(CliError::from(Error::NotFull).exit_code(), 3);
        assert_eq!(CliError::from(Error::InternalInconsistency("x".into())).exit_code(), 4);
        assert_eq!(CliError::Mismatch(1).exit_code(), 5);
    }
}
