use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("position {pos} out of range (length {len})")]
    OutOfRange { pos: usize, len: usize },

    #[error("ordinal {ordinal} out of range (only {count} occurrences)")]
    NoSuchOccurrence { ordinal: usize, count: usize },

    #[error("invalid tree position {0}")]
    InvalidNode(usize),

    #[error("the root has no parent")]
    RootHasNoParent,

    #[error("'$' edges are terminal and cannot be followed")]
    TerminalEdge,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("cannot read {path}: {message}")]
    Read { path: PathBuf, message: String },

    #[error("bad index file: {0}")]
    Format(String),

    #[error("unsupported format version {found} (expected {expected})")]
    Version { found: u16, expected: u16 },

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
