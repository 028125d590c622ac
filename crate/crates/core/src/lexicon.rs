//! Words whose forms in the three alphabets are not related by the rewrite
//! rules, mostly Russian loans with `ц`, `ь` or `я`.
//!
//! The file format is UTF-8 TSV with a `latin\tcyrillic\tnew_latin` header,
//! one entry per line. Lines starting with `#` and blank lines are skipped.

use std::collections::BTreeMap;
use std::io::Read;

use unicode_normalization::UnicodeNormalization;

use crate::alphabet::{normalize_apostrophes, AlphabetId, CaseClass};
use crate::error::{Error, Result};

pub const HEADER: &str = "latin\tcyrillic\tnew_latin";

/// Seed lexicon bundled with the library.
pub const BUNDLED_TSV: &str = include_str!("../data/exceptions.tsv");

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExceptionEntry {
    pub latin: String,
    pub cyrillic: String,
    pub new_latin: String,
}

impl ExceptionEntry {
    pub fn form(&self, alphabet: AlphabetId) -> &str {
        match alphabet {
            AlphabetId::Latin => &self.latin,
            AlphabetId::Cyrillic => &self.cyrillic,
            AlphabetId::NewLatin => &self.new_latin,
        }
    }
}

#[derive(Debug, Default, Clone)]
struct TrieNode {
    children: BTreeMap<char, usize>,
    entry: Option<usize>,
}

/// Character trie over one alphabet's surface forms.
#[derive(Debug, Clone)]
struct PrefixIndex {
    nodes: Vec<TrieNode>,
}

impl PrefixIndex {
    fn new() -> Self {
        PrefixIndex {
            nodes: vec![TrieNode::default()],
        }
    }

    /// Returns the entry already stored under `key`, if any.
    fn insert(&mut self, key: &str, entry: usize) -> Option<usize> {
        let mut node = 0;
        for ch in key.chars() {
            node = match self.nodes[node].children.get(&ch) {
                Some(&next) => next,
                None => {
                    self.nodes.push(TrieNode::default());
                    let next = self.nodes.len() - 1;
                    self.nodes[node].children.insert(ch, next);
                    next
                }
            };
        }
        match self.nodes[node].entry {
            Some(existing) => Some(existing),
            None => {
                self.nodes[node].entry = Some(entry);
                None
            }
        }
    }

    /// Longest stored key that is a prefix of `word`: (entry, byte length).
    fn longest_prefix(&self, word: &str) -> Option<(usize, usize)> {
        let mut node = 0;
        let mut best = self.nodes[0].entry.map(|e| (e, 0));
        for (i, ch) in word.char_indices() {
            match self.nodes[node].children.get(&ch) {
                Some(&next) => node = next,
                None => break,
            }
            if let Some(e) = self.nodes[node].entry {
                best = Some((e, i + ch.len_utf8()));
            }
        }
        best
    }
}

#[derive(Debug, Clone)]
pub struct ExceptionLexicon {
    entries: Vec<ExceptionEntry>,
    indexes: [PrefixIndex; 3],
}

fn slot(alphabet: AlphabetId) -> usize {
    match alphabet {
        AlphabetId::Latin => 0,
        AlphabetId::Cyrillic => 1,
        AlphabetId::NewLatin => 2,
    }
}

/// Lowercase, composed, apostrophe-canonical form of a lexicon cell.
pub(crate) fn canonical_cell(cell: &str) -> String {
    let composed: String = cell.trim().nfc().collect();
    normalize_apostrophes(&composed.to_lowercase())
}

impl Default for ExceptionLexicon {
    fn default() -> Self {
        ExceptionLexicon {
            entries: Vec::new(),
            indexes: [PrefixIndex::new(), PrefixIndex::new(), PrefixIndex::new()],
        }
    }
}

impl ExceptionLexicon {
    /// The lexicon shipped with the library.
    pub fn bundled() -> Self {
        Self::from_tsv(BUNDLED_TSV).expect("bundled exception lexicon is valid")
    }

    pub fn load<R: Read>(mut source: R) -> Result<Self> {
        let mut text = String::new();
        source.read_to_string(&mut text)?;
        Self::from_tsv(&text)
    }

    pub fn from_tsv(text: &str) -> Result<Self> {
        let mut lexicon = ExceptionLexicon::default();
        for (line, row) in parse_tsv_rows(text)? {
            lexicon.insert(row, line)?;
        }
        Ok(lexicon)
    }

    fn insert(&mut self, entry: ExceptionEntry, line: usize) -> Result<()> {
        let id = self.entries.len();
        for alphabet in AlphabetId::ALL {
            let form = entry.form(alphabet);
            if self.indexes[slot(alphabet)].insert(form, id).is_some() {
                return Err(Error::Duplicate {
                    line,
                    alphabet,
                    form: form.to_string(),
                });
            }
        }
        self.entries.push(entry);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[ExceptionEntry] {
        &self.entries
    }

    /// Finds the entry whose `source` form is the longest prefix of
    /// `word_lower` and returns it with the unmatched suffix.
    pub fn match_prefix<'w>(
        &self,
        word_lower: &'w str,
        source: AlphabetId,
    ) -> Option<(&ExceptionEntry, &'w str)> {
        self.indexes[slot(source)]
            .longest_prefix(word_lower)
            .filter(|&(_, len)| len > 0)
            .map(|(id, len)| (&self.entries[id], &word_lower[len..]))
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from(HEADER);
        out.push('\n');
        for e in &self.entries {
            out.push_str(&format!("{}\t{}\t{}\n", e.latin, e.cyrillic, e.new_latin));
        }
        out
    }
}

/// Parses the shared three-column TSV format, returning rows with their
/// 1-based line numbers.
pub(crate) fn parse_tsv_rows(text: &str) -> Result<Vec<(usize, ExceptionEntry)>> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let header = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
    match header {
        Some((_, h)) if h.trim_end_matches('\r') == HEADER => {}
        Some((line, h)) => {
            return Err(Error::Parse {
                line,
                message: format!("expected header `{}`, found `{h}`", HEADER.replace('\t', "\\t")),
            })
        }
        None => {
            return Err(Error::Parse {
                line: 1,
                message: "missing header".into(),
            })
        }
    }
    let mut rows = Vec::new();
    for (line, raw) in lines {
        let raw = raw.trim_end_matches('\r');
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let cells: Vec<&str> = raw.split('\t').collect();
        if cells.len() != 3 {
            return Err(Error::Parse {
                line,
                message: format!("expected 3 tab-separated columns, found {}", cells.len()),
            });
        }
        let cells: Vec<String> = cells.into_iter().map(canonical_cell).collect();
        if let Some(pos) = cells.iter().position(String::is_empty) {
            return Err(Error::Parse {
                line,
                message: format!("empty cell in column {}", pos + 1),
            });
        }
        let [latin, cyrillic, new_latin]: [String; 3] = cells.try_into().expect("three cells");
        rows.push((
            line,
            ExceptionEntry {
                latin,
                cyrillic,
                new_latin,
            },
        ));
    }
    Ok(rows)
}

fn capitalize_first(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// Target-alphabet form of `entry`, re-cased to match the source word,
/// followed by the already converted `suffix`.
pub fn apply_exception(
    entry: &ExceptionEntry,
    suffix: &str,
    target: AlphabetId,
    case: CaseClass,
) -> String {
    let form = entry.form(target);
    let lemma = match case {
        CaseClass::Title => capitalize_first(form),
        CaseClass::AllCaps => form.to_uppercase(),
        CaseClass::Lower | CaseClass::Mixed | CaseClass::Caseless => form.to_string(),
    };
    lemma + suffix
}
