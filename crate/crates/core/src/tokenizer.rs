//! Lossless splitting of text into word and non-word spans.

use std::ops::Range;

use crate::alphabet::{is_letter, GLOTTAL_STOP, OKINA};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Word,
    NonWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// Byte offsets of the token in the text it was cut from.
    pub byte_range: Range<usize>,
}

impl Token {
    pub fn is_word(&self) -> bool {
        self.kind == TokenKind::Word
    }
}

/// Splits `text` into maximal runs of word and non-word characters.
///
/// A word is a run of letters from any of the three alphabets. An okina or
/// glottal stop joins the word only if the character before it is a letter,
/// so `bogʻ` and `maʼno` stay whole.
pub fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens: Vec<Token> = Vec::new();
    let mut prev: Option<char> = None;
    for (i, ch) in text.char_indices() {
        let in_word =
            is_letter(ch) || ((ch == OKINA || ch == GLOTTAL_STOP) && prev.is_some_and(is_letter));
        let kind = if in_word { TokenKind::Word } else { TokenKind::NonWord };
        match tokens.last_mut() {
            Some(last) if last.kind == kind => {
                last.text.push(ch);
                last.byte_range.end = i + ch.len_utf8();
            }
            _ => tokens.push(Token {
                kind,
                text: ch.to_string(),
                byte_range: i..i + ch.len_utf8(),
            }),
        }
        prev = Some(ch);
    }
    tokens
}

pub fn reunite<'a, I>(tokens: I) -> String
where
    I: IntoIterator<Item = &'a Token>,
{
    tokens.into_iter().map(|t| t.text.as_str()).collect()
}
