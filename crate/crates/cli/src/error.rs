use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] disco_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

impl CliError {
    /// 2: input file missing, 3: labels do not match the data, 4: invalid `mu`, 1: anything else.
    pub fn exit_code(&self) -> i32 {
        use disco_core::Error as E;
        match self {
            CliError::Core(E::Io { source, .. }) if source.kind() == io::ErrorKind::NotFound => 2,
            CliError::Core(E::LengthMismatch { what: "labels", .. }) => 3,
            CliError::Core(E::InvalidMu { .. }) => 4,
            _ => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use disco_core::Error as E;

    #[test]
    fn exit_codes() {
        let missing = CliError::from(E::Io {
            path: "a.csv".into(),
            source: io::Error::from(io::ErrorKind::NotFound),
        });
        assert_eq!(missing.exit_code(), 2);
        let denied = CliError::from(E::Io {
            path: "a.csv".into(),
            source: io::Error::from(io::ErrorKind::PermissionDenied),
        });
        assert_eq!(denied.exit_code(), 1);
        let labels = CliError::from(E::LengthMismatch {
            what: "labels",
            expected: 3,
            found: 2,
        });
        assert_eq!(labels.exit_code(), 3);
        let other = CliError::from(E::LengthMismatch {
            what: "row",
            expected: 3,
            found: 2,
        });
        assert_eq!(other.exit_code(), 1);
        assert_eq!(
            CliError::from(E::InvalidMu {
                mu: 0,
                max: 4,
                n: 5
            })
            .exit_code(),
            4
        );
        assert_eq!(CliError::Usage("x".into()).exit_code(), 1);
    }
}
