//! Transliteration between the three Uzbek alphabets: Cyrillic, Latin and
//! the reformed New Latin.
//!
//! Text goes through five steps: it is split into word and non-word tokens,
//! words found in the exception lexicon are replaced by their stored target
//! form, the remaining words are rewritten by contextual rules and then a
//! one-to-one character map, and the tokens are joined back together.
//!
//! ```
//! use uztranslit::{AlphabetId, TranslitOptions, Transliterator};
//!
//! let t = Transliterator::with_bundled_lexicon();
//! let opts = TranslitOptions::new(AlphabetId::Cyrillic, AlphabetId::Latin);
//! assert_eq!(t.transliterate("Шўрва!", opts), "Shoʻrva!");
//! ```

pub mod alphabet;
pub mod error;
pub mod eval;
pub mod lexicon;
pub mod pipeline;
pub mod rules;
pub mod tokenizer;

pub use alphabet::{classify_case, classify_char, normalize_apostrophes, AlphabetId, CaseClass, CharClass};
pub use error::{Error, Result};
pub use eval::{evaluate, micro_f1, report_key_values, report_render, EvalReport, ParallelLexicon};
pub use lexicon::{ExceptionEntry, ExceptionLexicon};
pub use pipeline::{transliterate, TranslitOptions, Transliterator};
pub use rules::{apply_rules, render_digraph_case, rule_table_dump, ruleset_for, RuleSet};
pub use tokenizer::{reunite, tokenize, Token, TokenKind};
