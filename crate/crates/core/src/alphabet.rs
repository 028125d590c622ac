//! The three Uzbek alphabets: inventories, character classes, case classes
//! and apostrophe normalization.

use std::fmt;
use std::str::FromStr;

use unicode_normalization::UnicodeNormalization;

use crate::error::Error;

/// MODIFIER LETTER TURNED COMMA, the mark in `oʻ` and `gʻ`.
pub const OKINA: char = '\u{02BB}';
/// MODIFIER LETTER APOSTROPHE, the glottal stop letter (tutuq belgisi).
pub const GLOTTAL_STOP: char = '\u{02BC}';

/// Characters that people type in place of [`OKINA`] or [`GLOTTAL_STOP`].
pub const APOSTROPHE_VARIANTS: [char; 6] = [
    '\u{0027}', '\u{0060}', '\u{2018}', '\u{2019}', OKINA, GLOTTAL_STOP,
];

/// One of the three writing systems in use for Uzbek.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlphabetId {
    Cyrillic,
    Latin,
    NewLatin,
}

impl AlphabetId {
    pub const ALL: [AlphabetId; 3] = [AlphabetId::Latin, AlphabetId::Cyrillic, AlphabetId::NewLatin];

    /// All six ordered pairs of distinct alphabets.
    pub fn directions() -> impl Iterator<Item = (AlphabetId, AlphabetId)> {
        Self::ALL
            .into_iter()
            .flat_map(|s| Self::ALL.into_iter().map(move |t| (s, t)))
            .filter(|(s, t)| s != t)
    }

    /// Lowercase snake-case token used on the command line and in JSON.
    pub fn name(self) -> &'static str {
        match self {
            AlphabetId::Cyrillic => "cyrillic",
            AlphabetId::Latin => "latin",
            AlphabetId::NewLatin => "new_latin",
        }
    }

    /// Human-readable label used in report tables.
    pub fn label(self) -> &'static str {
        match self {
            AlphabetId::Cyrillic => "Cyrillic",
            AlphabetId::Latin => "Latin",
            AlphabetId::NewLatin => "New Latin",
        }
    }

    /// Whether `ch` (either case) belongs to this alphabet's letter inventory,
    /// including the okina and glottal stop marks where the alphabet uses them.
    pub fn contains(self, ch: char) -> bool {
        classify_char(ch, self) != CharClass::NonLetter
    }
}

impl fmt::Display for AlphabetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlphabetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cyrillic" => Ok(AlphabetId::Cyrillic),
            "latin" => Ok(AlphabetId::Latin),
            "new_latin" => Ok(AlphabetId::NewLatin),
            other => Err(Error::UnknownAlphabet(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharClass {
    Vowel,
    Consonant,
    /// The okina of `oʻ`/`gʻ`.
    ModifierApostrophe,
    GlottalStop,
    NonLetter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseClass {
    Lower,
    Title,
    AllCaps,
    Mixed,
    /// No cased letters at all.
    Caseless,
}

const CYRILLIC_VOWELS: &str = "аеёиоуэюяў";
const CYRILLIC_CONSONANTS: &str = "бвгджзйклмнпрстфхцчшқғҳ";
const CYRILLIC_SIGNS: &str = "ъь";
const LATIN_VOWELS: &str = "aeiou";
const NEW_LATIN_EXTRA_CONSONANTS: &str = "ḡşçñ";

fn lower_char(ch: char) -> char {
    let mut lower = ch.to_lowercase();
    match (lower.next(), lower.next()) {
        (Some(c), None) => c,
        _ => ch,
    }
}

/// Classifies `ch` with respect to `alphabet`. Total over all scalar values;
/// characters outside the alphabet's inventory are [`CharClass::NonLetter`].
pub fn classify_char(ch: char, alphabet: AlphabetId) -> CharClass {
    let c = lower_char(ch);
    match alphabet {
        AlphabetId::Cyrillic => {
            if CYRILLIC_VOWELS.contains(c) {
                CharClass::Vowel
            } else if CYRILLIC_CONSONANTS.contains(c) {
                CharClass::Consonant
            } else if CYRILLIC_SIGNS.contains(c) {
                CharClass::GlottalStop
            } else {
                CharClass::NonLetter
            }
        }
        AlphabetId::Latin | AlphabetId::NewLatin => {
            if c == OKINA && alphabet == AlphabetId::Latin {
                CharClass::ModifierApostrophe
            } else if c == GLOTTAL_STOP {
                CharClass::GlottalStop
            } else if LATIN_VOWELS.contains(c) || (alphabet == AlphabetId::NewLatin && c == 'ō') {
                CharClass::Vowel
            } else if c.is_ascii_lowercase()
                || (alphabet == AlphabetId::NewLatin && NEW_LATIN_EXTRA_CONSONANTS.contains(c))
            {
                CharClass::Consonant
            } else {
                CharClass::NonLetter
            }
        }
    }
}

/// A letter of any of the three alphabets (vowel, consonant or sign), not
/// counting the okina and glottal stop marks.
pub fn is_letter(ch: char) -> bool {
    AlphabetId::ALL.iter().any(|&a| {
        matches!(
            classify_char(ch, a),
            CharClass::Vowel | CharClass::Consonant
        )
    }) || classify_char(ch, AlphabetId::Cyrillic) == CharClass::GlottalStop
}

/// Classifies the capitalisation pattern of a word.
///
/// A lone uppercase letter counts as [`CaseClass::Title`]: acronym
/// rendering needs at least two uppercase letters of evidence.
pub fn classify_case(word: &str) -> Result<CaseClass, Error> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let cased: Vec<bool> = word
        .chars()
        .filter(|c| c.is_uppercase() || c.is_lowercase())
        .map(char::is_uppercase)
        .collect();
    let class = match cased.as_slice() {
        [] => CaseClass::Caseless,
        all if all.iter().all(|u| !u) => CaseClass::Lower,
        [true] => CaseClass::Title,
        [true, rest @ ..] if rest.iter().all(|u| !u) => CaseClass::Title,
        all if all.iter().all(|&u| u) => CaseClass::AllCaps,
        _ => CaseClass::Mixed,
    };
    Ok(class)
}

/// Brings text to canonical form: NFC composition, then apostrophe-like
/// characters rewritten to [`OKINA`] after `o`/`g` and to [`GLOTTAL_STOP`]
/// between two letters. Any other apostrophe is left alone as punctuation.
pub fn normalize_apostrophes(text: &str) -> String {
    let chars: Vec<char> = text.nfc().collect();
    let mut out = String::with_capacity(text.len());
    for (i, &ch) in chars.iter().enumerate() {
        if !APOSTROPHE_VARIANTS.contains(&ch) {
            out.push(ch);
            continue;
        }
        let prev = i.checked_sub(1).map(|j| chars[j]);
        let next = chars.get(i + 1).copied();
        if matches!(prev, Some('o' | 'O' | 'g' | 'G')) {
            out.push(OKINA);
        } else if prev.is_some_and(is_letter) && next.is_some_and(is_letter) {
            out.push(GLOTTAL_STOP);
        } else {
            out.push(ch);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn char_classes() {
        assert_eq!(classify_char('а', AlphabetId::Cyrillic), CharClass::Vowel);
        assert_eq!(classify_char('Ў', AlphabetId::Cyrillic), CharClass::Vowel);
        assert_eq!(classify_char('қ', AlphabetId::Cyrillic), CharClass::Consonant);
        assert_eq!(classify_char(GLOTTAL_STOP, AlphabetId::Latin), CharClass::GlottalStop);
        assert_eq!(classify_char(OKINA, AlphabetId::Latin), CharClass::ModifierApostrophe);
        assert_eq!(classify_char('7', AlphabetId::Latin), CharClass::NonLetter);
        assert_eq!(classify_char('ō', AlphabetId::NewLatin), CharClass::Vowel);
        assert_eq!(classify_char('ō', AlphabetId::Latin), CharClass::NonLetter);
        assert_eq!(classify_char('Ş', AlphabetId::NewLatin), CharClass::Consonant);
        assert_eq!(classify_char('a', AlphabetId::Cyrillic), CharClass::NonLetter);
        assert_eq!(classify_char('ъ', AlphabetId::Cyrillic), CharClass::GlottalStop);
    }

    #[test]
    fn vowels_and_consonants_disjoint() {
        assert!(CYRILLIC_VOWELS.chars().all(|c| !CYRILLIC_CONSONANTS.contains(c)));
        assert!(LATIN_VOWELS.chars().all(|c| !NEW_LATIN_EXTRA_CONSONANTS.contains(c)));
        for alphabet in [AlphabetId::Latin, AlphabetId::NewLatin] {
            for c in LATIN_VOWELS.chars() {
                assert_eq!(classify_char(c, alphabet), CharClass::Vowel);
            }
        }
    }

    #[test]
    fn case_classes() {
        assert_eq!(classify_case("АҚШ").unwrap(), CaseClass::AllCaps);
        assert_eq!(classify_case("Шўрва").unwrap(), CaseClass::Title);
        assert_eq!(classify_case("shoʻrva").unwrap(), CaseClass::Lower);
        assert_eq!(classify_case("Ш").unwrap(), CaseClass::Title);
        assert_eq!(classify_case("McDonald").unwrap(), CaseClass::Mixed);
        assert_eq!(classify_case("OʻZBEK").unwrap(), CaseClass::AllCaps);
        assert_eq!(classify_case("ʼ").unwrap(), CaseClass::Caseless);
        assert!(matches!(classify_case(""), Err(Error::EmptyWord)));
    }

    #[test]
    fn apostrophes() {
        assert_eq!(normalize_apostrophes("o'zbek"), "o\u{02BB}zbek");
        assert_eq!(normalize_apostrophes("g`alaba"), "g\u{02BB}alaba");
        assert_eq!(normalize_apostrophes("'quoted'"), "'quoted'");
        assert_eq!(normalize_apostrophes("ma'no"), "ma\u{02BC}no");
        assert_eq!(normalize_apostrophes("bog'"), "bog\u{02BB}");
        for v in APOSTROPHE_VARIANTS {
            let s = format!("O{v}g{v}");
            assert_eq!(normalize_apostrophes(&s), "O\u{02BB}g\u{02BB}");
        }
    }

    #[test]
    fn composes_decomposed_input() {
        assert_eq!(normalize_apostrophes("s\u{0327}"), "ş");
        assert_eq!(normalize_apostrophes("o\u{0304}"), "ō");
    }

    #[test]
    fn alphabet_names_round_trip() {
        for a in AlphabetId::ALL {
            assert_eq!(a.name().parse::<AlphabetId>().unwrap(), a);
        }
        assert!("klingon".parse::<AlphabetId>().is_err());
        assert_eq!(AlphabetId::directions().count(), 6);
    }

    proptest! {
        #[test]
        fn normalization_is_idempotent(s in "[a-zA-Z'`‘’ʻʼоғ ]{0,24}|\\PC{0,24}") {
            let once = normalize_apostrophes(&s);
            prop_assert_eq!(normalize_apostrophes(&once), once);
        }

        #[test]
        fn classify_char_is_pure(c in any::<char>()) {
            for a in AlphabetId::ALL {
                prop_assert_eq!(classify_char(c, a), classify_char(c, a));
            }
        }
    }
}
