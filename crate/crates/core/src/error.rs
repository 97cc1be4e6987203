//! Library-wide error type.
//!
//! Parse errors carry the 1-based line number of the offending line so that
//! callers (and the CLI) can point users at the exact spot in the file.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("model parse error at line {line}: {msg}")]
    ModelParse { line: usize, msg: String },

    #[error("instance list parse error at line {line}: {msg}")]
    InstanceListParse { line: usize, msg: String },

    #[error("instance parse error at line {line}: {msg}")]
    InstanceParse { line: usize, msg: String },

    #[error("solution parse error at line {line}: {msg}")]
    SolutionParse { line: usize, msg: String },

    #[error("matrix parse error at line {line}: {msg}")]
    MatrixParse { line: usize, msg: String },

    /// The instance file was generated against a different model.
    #[error("model checksum mismatch: instance expects {expected}, model hashes to {actual}")]
    ChecksumMismatch { expected: String, actual: String },

    /// Site sampling is impossible because no street has positive weight.
    #[error("cannot sample a site: every street has zero weight")]
    AllWeightsZero,

    /// Sites that do not share a street component with site 0.
    #[error("sites {0:?} are not connected to the street component of site 0")]
    DisconnectedSites(Vec<usize>),

    /// A site draw kept landing outside the main street component.
    #[error("sampling site {site} gave up after {attempts} attempts outside the main component")]
    SampleRetriesExhausted { site: usize, attempts: usize },

    /// No path exists between two sites (disconnected street graph).
    #[error("no path between the requested sites")]
    UnreachablePair,
}

pub type Result<T> = std::result::Result<T, Error>;
