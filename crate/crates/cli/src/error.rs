use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const OTHER: i32 = 1;
    pub const INVARIANT: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const INFEASIBLE: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ripcert::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use ripcert::Error as E;
        match self {
            CliError::Core(E::EnumerationTooLarge { .. }) => exit::BUDGET,
            CliError::Core(
                E::NotRealizable { .. }
                | E::NotEtf(_)
                | E::InfeasibleSize(_)
                | E::AmbiguousSign { .. }
                | E::NotAJoin(_)
                | E::NotRegular
                | E::Congruence(_)
                | E::InvalidParameter(_)
                | E::Precondition(_)
                | E::BoundVacuous(_)
                | E::UndefinedCoherence(_)
                | E::Chain(_),
            ) => exit::INFEASIBLE,
            _ => exit::OTHER,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
