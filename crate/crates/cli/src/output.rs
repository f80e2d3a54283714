use std::fmt;
use std::io::Write;
use std::path::Path;

use equicenter::Error;
use serde::Serialize;
use serde_json::Value;
use tempfile::NamedTempFile;

/// Failures, each with its own exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad input or arguments: 2.
    Invalid(String),
    /// A numerical method gave up: 3.
    Convergence(String),
    /// Anything else, including failed verification: 1.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Convergence(_) => 3,
            CliError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::Convergence(m) => write!(f, "no convergence: {m}"),
            CliError::Internal(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::DidNotConverge { .. } | Error::InverseFailed | Error::DegenerateVoronoi => {
                CliError::Convergence(e.to_string())
            }
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

/// `{"command", "result", "residuals", "config"}`; nested keys are sorted.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub command: &'static str,
    pub result: Value,
    pub residuals: Value,
    pub config: Value,
}

impl Envelope {
    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("json values always serialize")
    }
}

/// Writes `contents` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let fail = |e: std::io::Error| CliError::Internal(format!("cannot write {}: {e}", path.display()));
    let mut tmp = NamedTempFile::new_in(dir).map_err(fail)?;
    tmp.write_all(contents.as_bytes()).map_err(fail)?;
    tmp.as_file().sync_all().map_err(fail)?;
    tmp.persist(path).map_err(|e| fail(e.error))?;
    Ok(())
}
