use thiserror::Error;

use crate::alphabet::AlphabetId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("unknown alphabet `{0}` (expected one of: latin, cyrillic, new_latin)")]
    UnknownAlphabet(String),
    #[error("no rule set for identity direction {0} -> {0}")]
    IdentityDirection(AlphabetId),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: duplicate {alphabet} form `{form}`")]
    Duplicate {
        line: usize,
        alphabet: AlphabetId,
        form: String,
    },
    #[error("lexicon is empty")]
    EmptyLexicon,
    #[error("rule set {from} -> {to} has {actual} rule groups, expected {expected}")]
    RuleGroupCount {
        from: AlphabetId,
        to: AlphabetId,
        expected: usize,
        actual: usize,
    },
    #[error("invalid count: {correct} correct out of {total}")]
    InvalidCount { correct: usize, total: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
