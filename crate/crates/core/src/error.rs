use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {found:?} at index {index} (expected '0' or '1')")]
    InvalidCharacter { index: usize, found: char },

    #[error("invalid rational {0:?} (expected \"a\" or \"a/b\" with b > 0)")]
    InvalidRational(String),

    #[error("illegal move ({i}, {j}) on {word}: {reason}")]
    IllegalMove {
        word: String,
        i: usize,
        j: usize,
        reason: &'static str,
    },

    #[error("word has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("list mixes words of different {what}: index {index}")]
    MixedList { what: &'static str, index: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("word {0} is not a member of the language")]
    NotAMember(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
