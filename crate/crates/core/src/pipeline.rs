use crate::alphabet::{classify_case, normalize_apostrophes, AlphabetId, CaseClass};
use crate::error::{Error, Result};
use crate::lexicon::{apply_exception, ExceptionLexicon};
use crate::rules::{ruleset_for, RuleSet};
use crate::tokenizer::{reunite, tokenize};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TranslitOptions {
    pub source: AlphabetId,
    pub target: AlphabetId,
    /// NFC composition plus apostrophe canonicalisation of the input.
    pub normalize_apostrophes: bool,
}

impl TranslitOptions {
    pub fn new(source: AlphabetId, target: AlphabetId) -> Self {
        TranslitOptions {
            source,
            target,
            normalize_apostrophes: true,
        }
    }

    pub fn without_normalization(mut self) -> Self {
        self.normalize_apostrophes = false;
        self
    }
}

/// Exception lexicon plus the six rule sets. Immutable once built, so one
/// instance can be shared by any number of threads.
#[derive(Debug, Clone)]
pub struct Transliterator {
    lexicon: ExceptionLexicon,
    rulesets: Vec<&'static RuleSet>,
}

impl Transliterator {
    pub fn new(lexicon: ExceptionLexicon) -> Result<Self> {
        let mut rulesets = Vec::with_capacity(6);
        for (from, to) in AlphabetId::directions() {
            let rs = ruleset_for(from, to)?;
            let expected = RuleSet::expected_group_count(from, to);
            if rs.group_count() != expected {
                return Err(Error::RuleGroupCount {
                    from,
                    to,
                    expected,
                    actual: rs.group_count(),
                });
            }
            rulesets.push(rs);
        }
        Ok(Transliterator { lexicon, rulesets })
    }

    /// A transliterator using the bundled exception lexicon.
    pub fn with_bundled_lexicon() -> Self {
        Self::new(ExceptionLexicon::bundled()).expect("bundled data is valid")
    }

    pub fn lexicon(&self) -> &ExceptionLexicon {
        &self.lexicon
    }

    fn ruleset(&self, from: AlphabetId, to: AlphabetId) -> &RuleSet {
        self.rulesets
            .iter()
            .find(|rs| rs.from == from && rs.to == to)
            .expect("caller checked for identity direction")
    }

    pub fn transliterate(&self, text: &str, options: TranslitOptions) -> String {
        let normalized;
        let text = if options.normalize_apostrophes {
            normalized = normalize_apostrophes(text);
            normalized.as_str()
        } else {
            text
        };
        if options.source == options.target {
            return text.to_string();
        }
        let mut tokens = tokenize(text);
        for token in tokens.iter_mut().filter(|t| t.is_word()) {
            token.text = self.transliterate_word(&token.text, options.source, options.target);
        }
        reunite(&tokens)
    }

    /// Converts a single word token: exception lookup on its lowercase form
    /// first, then the direction's rules for whatever the lookup left over.
    pub fn transliterate_word(&self, word: &str, source: AlphabetId, target: AlphabetId) -> String {
        if source == target || word.is_empty() {
            return word.to_string();
        }
        let chars: Vec<char> = word.chars().collect();
        let lower: String = chars.iter().map(|&c| lower_char(c)).collect();
        let ruleset = self.ruleset(source, target);
        match self.lexicon.match_prefix(&lower, source) {
            Some((entry, suffix)) => {
                let lemma_len = chars.len() - suffix.chars().count();
                let lemma: String = chars[..lemma_len].iter().collect();
                let case = classify_case(&lemma).unwrap_or(CaseClass::Caseless);
                let converted_suffix = ruleset.apply_from(&chars, lemma_len);
                apply_exception(entry, &converted_suffix, target, case)
            }
            None => ruleset.apply(word),
        }
    }
}

fn lower_char(ch: char) -> char {
    let mut lower = ch.to_lowercase();
    match (lower.next(), lower.next()) {
        (Some(c), None) => c,
        _ => ch,
    }
}

/// Convenience wrapper over [`Transliterator::transliterate`].
pub fn transliterate(text: &str, options: TranslitOptions, t: &Transliterator) -> String {
    t.transliterate(text, options)
}
