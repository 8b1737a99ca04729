//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building automata, reading files,
/// generating data, or benchmarking.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-DNA symbol {ch:?} at line {line}, column {column}")]
    NonDnaSymbol { ch: char, line: usize, column: usize },

    #[error("pattern {second_id} duplicates pattern {first_id}")]
    DuplicatePattern { first_id: u32, second_id: u32 },

    #[error("pattern {id} is empty")]
    EmptyPattern { id: u32 },

    #[error("pattern file contains no patterns")]
    EmptyFile,

    #[error("trie needs {needed} states but the configured maximum is {max}")]
    TooManyStates { needed: u64, max: u64 },

    #[error("value {value} does not fit in a {bits}-bit packed field")]
    PackedOverflow { value: u64, bits: u32 },

    #[error("malformed FASTA: record at line {line} has a header but no sequence")]
    MalformedFasta { line: usize },

    #[error("cannot generate {requested} unique patterns of length {length}")]
    DuplicateSaturation { requested: usize, length: usize },

    #[error("match count mismatch: {variant} with {workers} workers found {got} matches, expected {expected}")]
    MatchCountMismatch {
        variant: String,
        workers: usize,
        got: u64,
        expected: u64,
    },

    #[error("baseline variant {0} not present in the result set")]
    MissingBaseline(String),

    #[error("unknown layout variant {0:?} (valid: split|merged|packed + direct|staged, e.g. \"merged+staged\")")]
    UnknownVariant(String),

    #[error("unknown preset {0:?} (valid: ps1..ps5, ds1..ds5, mini1..mini5)")]
    UnknownPreset(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Stable process exit code for this error class. Documented in the CLI
    /// `--help` output.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NonDnaSymbol { .. } => 2,
            Error::DuplicatePattern { .. } => 3,
            Error::EmptyPattern { .. } => 4,
            Error::EmptyFile => 5,
            Error::TooManyStates { .. } => 6,
            Error::PackedOverflow { .. } => 7,
            Error::MalformedFasta { .. } => 8,
            Error::DuplicateSaturation { .. } => 9,
            Error::MatchCountMismatch { .. } => 10,
            Error::MissingBaseline(_) => 11,
            Error::UnknownVariant(_) => 12,
            Error::UnknownPreset(_) => 13,
            Error::Io { .. } => 14,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
