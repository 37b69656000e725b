use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("operation is undefined on the empty word")]
    EmptyWord,

    #[error("alphabet size must be in 1..=255, got {0}")]
    InvalidSigma(u32),

    #[error("letter {letter} at position {position} is outside the alphabet of size {sigma}")]
    LetterOutOfRange { letter: u8, position: usize, sigma: u8 },

    #[error("invalid character {ch:?} at position {position}: expected a lowercase letter from 'a' to {max:?}")]
    InvalidCharacter { ch: char, position: usize, max: char },

    #[error("enumerating {sigma}^{len} words exceeds the limit of {limit} words")]
    GuardExceeded { sigma: u32, len: usize, limit: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("seed word {0} is bordered")]
    BorderedSeed(String),

    #[error("algorithms disagree on {word}: {first} reports length {first_len}, {second} reports length {second_len}")]
    AlgorithmMismatch {
        word: String,
        first: &'static str,
        first_len: usize,
        second: &'static str,
        second_len: usize,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
