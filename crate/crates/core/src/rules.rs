//! Contextual rewrite rules and one-to-one character maps for each ordered
//! pair of alphabets.
//!
//! A word is converted in a single left-to-right pass. At each position the
//! first contextual rule whose pattern and context match fires and consumes
//! its pattern; failing that, the character map is consulted (longest key
//! first); failing that, the character is copied unchanged. Patterns are
//! matched against the lowercased word and the case of the source letters is
//! transferred onto the replacement afterwards.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::alphabet::{classify_char, AlphabetId, CharClass, OKINA};
use crate::error::{Error, Result};

/// Condition on the text around a rule's pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Context {
    Any,
    /// Left side only: the pattern is at the start of the word.
    WordStart,
    /// The adjacent source letter is a vowel.
    Vowel,
    /// Left side only: word start, or the previous letter is a vowel.
    WordStartOrVowel,
    /// Right side only: the next character is not the given one.
    NotFollowedBy(char),
}

impl Context {
    fn describe(self) -> Option<String> {
        match self {
            Context::Any => None,
            Context::WordStart => Some("word start".into()),
            Context::Vowel => Some("vowel".into()),
            Context::WordStartOrVowel => Some("word start or vowel".into()),
            Context::NotFollowedBy(c) => Some(format!("not before {c}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextRule {
    /// Letter phenomenon this rule belongs to; rules sharing a group are
    /// counted once.
    pub group: &'static str,
    /// Lowercase source sequence, one to three characters.
    pub pattern: &'static str,
    pub left: Context,
    pub right: Context,
    /// Lowercase target sequence, possibly empty.
    pub replacement: &'static str,
}

impl ContextRule {
    const fn new(group: &'static str, pattern: &'static str, replacement: &'static str) -> Self {
        ContextRule {
            group,
            pattern,
            left: Context::Any,
            right: Context::Any,
            replacement,
        }
    }

    const fn left(mut self, ctx: Context) -> Self {
        self.left = ctx;
        self
    }

    const fn right(mut self, ctx: Context) -> Self {
        self.right = ctx;
        self
    }

    fn pattern_len(&self) -> usize {
        self.pattern.chars().count()
    }

    fn is_conditional(&self) -> bool {
        self.left != Context::Any || self.right != Context::Any
    }

    fn matches(&self, lower: &[char], at: usize, alphabet: AlphabetId) -> bool {
        let len = self.pattern_len();
        if at + len > lower.len() || !self.pattern.chars().eq(lower[at..at + len].iter().copied()) {
            return false;
        }
        let left_ok = match self.left {
            Context::Any => true,
            Context::WordStart => at == 0,
            Context::Vowel => at > 0 && preceding_is_vowel(lower, at, alphabet),
            Context::WordStartOrVowel => at == 0 || preceding_is_vowel(lower, at, alphabet),
            Context::NotFollowedBy(_) => unreachable!("right-only context used on the left"),
        };
        let after = at + len;
        let right_ok = match self.right {
            Context::Any => true,
            Context::Vowel => lower
                .get(after)
                .is_some_and(|&c| classify_char(c, alphabet) == CharClass::Vowel),
            Context::NotFollowedBy(c) => lower.get(after) != Some(&c),
            Context::WordStart | Context::WordStartOrVowel => {
                unreachable!("left-only context used on the right")
            }
        };
        left_ok && right_ok
    }
}

/// Whether the letter ending just before `at` is a vowel. In Latin the
/// okina belongs to the letter before it, so `oʻ` is a vowel and `gʻ` is not.
fn preceding_is_vowel(lower: &[char], at: usize, alphabet: AlphabetId) -> bool {
    let prev = lower[at - 1];
    if prev == OKINA && alphabet == AlphabetId::Latin {
        return at >= 2 && lower[at - 2] == 'o';
    }
    classify_char(prev, alphabet) == CharClass::Vowel
}

/// One-to-one mapping of the letters left over after contextual rules.
/// Keys are lowercase source graphemes of one or two characters (Cyrillic
/// `нг` is a single letter).
#[derive(Debug, Clone, Default)]
pub struct CharMap {
    entries: Vec<(&'static str, &'static str)>,
    index: HashMap<&'static str, &'static str>,
    max_key_len: usize,
}

impl CharMap {
    fn new(entries: Vec<(&'static str, &'static str)>) -> Self {
        let index = entries.iter().copied().collect();
        let max_key_len = entries.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        CharMap {
            entries,
            index,
            max_key_len,
        }
    }

    pub fn entries(&self) -> &[(&'static str, &'static str)] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_empty()
    }

    fn lookup(&self, lower: &[char], at: usize) -> Option<(usize, &'static str)> {
        let available = self.max_key_len.min(lower.len() - at);
        (1..=available).rev().find_map(|len| {
            let key: String = lower[at..at + len].iter().collect();
            self.index.get(key.as_str()).map(|&v| (len, v))
        })
    }
}

#[derive(Debug, Clone)]
pub struct RuleSet {
    pub from: AlphabetId,
    pub to: AlphabetId,
    /// In priority order: longer patterns first, then declaration order.
    pub rules: Vec<ContextRule>,
    pub char_map: CharMap,
}

impl RuleSet {
    fn new(
        from: AlphabetId,
        to: AlphabetId,
        mut rules: Vec<ContextRule>,
        char_map: Vec<(&'static str, &'static str)>,
    ) -> Self {
        rules.sort_by_key(|r| std::cmp::Reverse(r.pattern_len()));
        RuleSet {
            from,
            to,
            rules,
            char_map: CharMap::new(char_map),
        }
    }

    /// Names of the rule groups, in order of first appearance.
    pub fn groups(&self) -> Vec<&'static str> {
        let mut seen = BTreeSet::new();
        self.rules
            .iter()
            .map(|r| r.group)
            .filter(|g| seen.insert(*g))
            .collect()
    }

    pub fn group_count(&self) -> usize {
        self.groups().len()
    }

    /// Number of rule groups this direction must have: 5 between the two
    /// Latin alphabets, 6 between New Latin and Cyrillic, 11 between Latin
    /// and Cyrillic.
    pub fn expected_group_count(from: AlphabetId, to: AlphabetId) -> usize {
        use AlphabetId::*;
        match (from, to) {
            (Latin, NewLatin) | (NewLatin, Latin) => 5,
            (NewLatin, Cyrillic) | (Cyrillic, NewLatin) => 6,
            (Latin, Cyrillic) | (Cyrillic, Latin) => 11,
            _ => 0,
        }
    }

    pub fn apply(&self, word: &str) -> String {
        let chars: Vec<char> = word.chars().collect();
        self.apply_from(&chars, 0)
    }

    /// Converts `chars[start..]`, using `chars[..start]` only as left context.
    pub fn apply_from(&self, chars: &[char], start: usize) -> String {
        let lower: Vec<char> = chars.iter().map(|&c| lower_char(c)).collect();
        let mut out = String::with_capacity(chars.len() * 2);
        let mut i = start;
        while i < chars.len() {
            let hit = self
                .rules
                .iter()
                .find(|r| r.matches(&lower, i, self.from))
                .map(|r| (r.pattern_len(), r.replacement))
                .or_else(|| self.char_map.lookup(&lower, i));
            match hit {
                Some((len, replacement)) => {
                    out.push_str(&transfer_case(replacement, chars, i, len));
                    i += len;
                }
                None => {
                    out.push(chars[i]);
                    i += 1;
                }
            }
        }
        out
    }
}

fn lower_char(ch: char) -> char {
    let mut lower = ch.to_lowercase();
    match (lower.next(), lower.next()) {
        (Some(c), None) => c,
        _ => ch,
    }
}

fn is_cased(c: char) -> bool {
    c.is_uppercase() || c.is_lowercase()
}

fn upper_str(s: &str) -> String {
    s.chars().flat_map(char::to_uppercase).collect()
}

/// Renders a multi-letter replacement for an uppercase source letter.
///
/// `neighbor_upper` is the case of the adjacent source letter (the next one
/// if present, else the previous one). An uppercase neighbour means the
/// word is written in capitals (`АҚШ` → `AQSH`); otherwise only the first
/// letter is capitalised (`Шўрва` → `Shoʻrva`).
pub fn render_digraph_case(
    replacement: &str,
    source_case_is_upper: bool,
    neighbor_upper: Option<bool>,
) -> String {
    if !source_case_is_upper {
        return replacement.to_string();
    }
    if neighbor_upper == Some(true) {
        return upper_str(replacement);
    }
    let mut chars = replacement.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

fn neighbor_case(chars: &[char], at: usize, len: usize) -> Option<bool> {
    chars[at + len..]
        .iter()
        .find(|&&c| is_cased(c))
        .or_else(|| chars[..at].iter().rev().find(|&&c| is_cased(c)))
        .map(|c| c.is_uppercase())
}

fn transfer_case(replacement: &str, chars: &[char], at: usize, len: usize) -> String {
    let source = &chars[at..at + len];
    let flags: Vec<bool> = source
        .iter()
        .filter(|&&c| is_cased(c))
        .map(|c| c.is_uppercase())
        .collect();
    if !flags.contains(&true) {
        return replacement.to_string();
    }
    let cased_out = replacement.chars().filter(|&c| is_cased(c)).count();
    if flags.len() == 1 && cased_out >= 2 {
        return render_digraph_case(replacement, true, neighbor_case(chars, at, len));
    }
    if flags.len() == cased_out {
        let mut flags = flags.into_iter();
        return replacement
            .chars()
            .flat_map(|c| {
                let upper = is_cased(c) && flags.next() == Some(true);
                let mapped: Vec<char> = if upper { c.to_uppercase().collect() } else { vec![c] };
                mapped
            })
            .collect();
    }
    if flags.iter().all(|&u| u) {
        upper_str(replacement)
    } else {
        render_digraph_case(replacement, true, None)
    }
}

const LATIN_TO_CYRILLIC_MAP: [(&str, &str); 24] = [
    ("a", "а"), ("b", "б"), ("d", "д"), ("e", "е"), ("f", "ф"), ("g", "г"),
    ("h", "ҳ"), ("i", "и"), ("j", "ж"), ("k", "к"), ("l", "л"), ("m", "м"),
    ("n", "н"), ("o", "о"), ("p", "п"), ("q", "қ"), ("r", "р"), ("s", "с"),
    ("t", "т"), ("u", "у"), ("v", "в"), ("x", "х"), ("y", "й"), ("z", "з"),
];

const CYRILLIC_TO_LATIN_MAP: [(&str, &str); 25] = [
    ("а", "a"), ("б", "b"), ("в", "v"), ("г", "g"), ("д", "d"), ("ж", "j"),
    ("з", "z"), ("и", "i"), ("й", "y"), ("к", "k"), ("л", "l"), ("м", "m"),
    ("н", "n"), ("о", "o"), ("п", "p"), ("р", "r"), ("с", "s"), ("т", "t"),
    ("у", "u"), ("ф", "f"), ("х", "x"), ("ҳ", "h"), ("қ", "q"), ("э", "e"),
    ("ь", ""),
];

/// The letters that are digraphs (or `oʻ`/`gʻ`) in Latin but single
/// characters in New Latin, paired with their Cyrillic equivalents.
const NEW_LATIN_LETTERS: [(&str, &str, &str); 5] = [
    ("ш", "sh", "ş"),
    ("ч", "ch", "ç"),
    ("ў", "oʻ", "ō"),
    ("ғ", "gʻ", "ḡ"),
    ("нг", "ng", "ñ"),
];

/// Group label for one of the [`NEW_LATIN_LETTERS`], by its Latin spelling.
fn group_of(latin: &'static str) -> &'static str {
    match latin {
        "oʻ" => "o'",
        "gʻ" => "g'",
        other => other,
    }
}

fn cyrillic_shared_rules() -> Vec<ContextRule> {
    vec![
        ContextRule::new("e", "е", "ye").left(Context::WordStartOrVowel),
        ContextRule::new("e", "е", "e"),
        ContextRule::new("yo", "ё", "yo"),
        ContextRule::new("yu", "ю", "yu"),
        ContextRule::new("ya", "я", "ya"),
        ContextRule::new("ts", "ц", "ts").left(Context::Vowel),
        ContextRule::new("ts", "ц", "s"),
    ]
}

fn latin_script_to_cyrillic_shared_rules() -> Vec<ContextRule> {
    vec![
        ContextRule::new("e", "ye", "е").left(Context::WordStartOrVowel),
        ContextRule::new("e", "e", "э").left(Context::WordStartOrVowel),
        ContextRule::new("yo", "yo", "ё").right(Context::NotFollowedBy(OKINA)),
        ContextRule::new("yu", "yu", "ю"),
        ContextRule::new("ya", "ya", "я"),
        ContextRule::new("ts", "ts", "ц")
            .left(Context::Vowel)
            .right(Context::Vowel),
    ]
}

fn build(from: AlphabetId, to: AlphabetId) -> RuleSet {
    use AlphabetId::*;
    let glottal = "ʼ";
    match (from, to) {
        (Cyrillic, Latin) => {
            let mut rules = cyrillic_shared_rules();
            rules.extend([
                ContextRule::new("glottal", "ъ", glottal),
                ContextRule::new("sh", "сҳ", "sʼh"),
            ]);
            for (cyr, lat, _) in NEW_LATIN_LETTERS {
                rules.push(ContextRule::new(group_of(lat), cyr, lat));
            }
            RuleSet::new(from, to, rules, CYRILLIC_TO_LATIN_MAP.to_vec())
        }
        (Cyrillic, NewLatin) => {
            let mut rules = cyrillic_shared_rules();
            rules.extend([
                ContextRule::new("glottal", "ъ", glottal),
                ContextRule::new("glottal", "сҳ", "sʼh"),
            ]);
            let mut map = CYRILLIC_TO_LATIN_MAP.to_vec();
            map.extend(NEW_LATIN_LETTERS.iter().map(|&(cyr, _, new)| (cyr, new)));
            RuleSet::new(from, to, rules, map)
        }
        (Latin, Cyrillic) => {
            let mut rules = latin_script_to_cyrillic_shared_rules();
            rules.extend([
                ContextRule::new("glottal", glottal, "ъ"),
                ContextRule::new("sh", "sʼh", "сҳ"),
                ContextRule::new("ng", "ng", "нг").right(Context::NotFollowedBy(OKINA)),
            ]);
            for (cyr, lat, _) in NEW_LATIN_LETTERS.into_iter().filter(|l| l.1 != "ng") {
                rules.push(ContextRule::new(group_of(lat), lat, cyr));
            }
            RuleSet::new(from, to, rules, LATIN_TO_CYRILLIC_MAP.to_vec())
        }
        (NewLatin, Cyrillic) => {
            let mut rules = latin_script_to_cyrillic_shared_rules();
            rules.extend([
                ContextRule::new("glottal", glottal, "ъ"),
                ContextRule::new("glottal", "sʼh", "сҳ"),
            ]);
            let mut map = LATIN_TO_CYRILLIC_MAP.to_vec();
            map.extend(NEW_LATIN_LETTERS.iter().map(|&(cyr, _, new)| (new, cyr)));
            RuleSet::new(from, to, rules, map)
        }
        (Latin, NewLatin) => {
            let rules = NEW_LATIN_LETTERS
                .iter()
                .map(|&(_, lat, new)| {
                    let rule = ContextRule::new(group_of(lat), lat, new);
                    if lat == "ng" {
                        rule.right(Context::NotFollowedBy(OKINA))
                    } else {
                        rule
                    }
                })
                .collect();
            RuleSet::new(from, to, rules, Vec::new())
        }
        (NewLatin, Latin) => {
            let rules = NEW_LATIN_LETTERS
                .iter()
                .map(|&(_, lat, new)| ContextRule::new(group_of(lat), new, lat))
                .collect();
            RuleSet::new(from, to, rules, Vec::new())
        }
        _ => unreachable!("identity direction has no rule set"),
    }
}

/// Returns the static rule set for converting `from` → `to`.
pub fn ruleset_for(from: AlphabetId, to: AlphabetId) -> Result<&'static RuleSet> {
    static RULESETS: OnceLock<Vec<RuleSet>> = OnceLock::new();
    if from == to {
        return Err(Error::IdentityDirection(from));
    }
    let all = RULESETS.get_or_init(|| AlphabetId::directions().map(|(f, t)| build(f, t)).collect());
    Ok(all
        .iter()
        .find(|rs| rs.from == from && rs.to == to)
        .expect("every distinct direction is built"))
}

pub fn apply_rules(word: &str, ruleset: &RuleSet) -> String {
    ruleset.apply(word)
}

fn show(s: &str) -> &str {
    if s.is_empty() {
        "∅"
    } else {
        s
    }
}

/// Human-readable listing of a direction's rules and character map.
pub fn rule_table_dump(from: AlphabetId, to: AlphabetId) -> Result<String> {
    let rs = ruleset_for(from, to)?;
    let mut out = String::new();
    let _ = writeln!(out, "{from} -> {to}: {} rule groups", rs.group_count());
    // One line per source pattern, alternatives in priority order.
    let mut lines: Vec<(&str, &str, Vec<&str>, bool)> = Vec::new();
    for group in rs.groups() {
        for rule in rs.rules.iter().filter(|r| r.group == group) {
            match lines.iter_mut().find(|l| l.0 == group && l.1 == rule.pattern) {
                Some(line) => {
                    line.2.push(rule.replacement);
                    line.3 |= rule.is_conditional();
                }
                None => lines.push((group, rule.pattern, vec![rule.replacement], rule.is_conditional())),
            }
        }
    }
    for (group, pattern, alternatives, conditional) in lines {
        let alts: Vec<&str> = alternatives.into_iter().map(show).collect();
        let _ = write!(out, "  [{group}] {pattern} → {}", alts.join(" | "));
        if conditional {
            let contexts: Vec<String> = rs
                .rules
                .iter()
                .filter(|r| r.group == group && r.pattern == pattern && r.is_conditional())
                .filter_map(|r| {
                    let parts: Vec<String> =
                        [r.left.describe().map(|d| format!("after {d}")), r.right.describe()]
                            .into_iter()
                            .flatten()
                            .collect();
                    (!parts.is_empty()).then(|| format!("{}: {}", show(r.replacement), parts.join(", ")))
                })
                .collect();
            let _ = write!(out, " (context; {})", contexts.join("; "));
        }
        out.push('\n');
    }
    if rs.char_map.is_identity() {
        out.push_str("char map: identity (all other characters unchanged)\n");
    } else {
        out.push_str("char map:\n");
        for (src, dst) in rs.char_map.entries() {
            let _ = writeln!(out, "  {src} → {}", show(dst));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use AlphabetId::*;

    fn conv(from: AlphabetId, to: AlphabetId, word: &str) -> String {
        ruleset_for(from, to).unwrap().apply(word)
    }

    #[test]
    fn group_counts() {
        for (from, to) in AlphabetId::directions() {
            let rs = ruleset_for(from, to).unwrap();
            assert_eq!(rs.group_count(), RuleSet::expected_group_count(from, to), "{from}->{to}");
        }
        let groups = ruleset_for(Latin, NewLatin).unwrap().groups();
        assert_eq!(groups.len(), 5);
        for g in ["sh", "ch", "o'", "g'", "ng"] {
            assert!(groups.contains(&g));
        }
    }

    #[test]
    fn identity_direction_is_an_error() {
        assert!(matches!(ruleset_for(Latin, Latin), Err(Error::IdentityDirection(Latin))));
        assert!(rule_table_dump(Cyrillic, Cyrillic).is_err());
    }

    #[test]
    fn examples() {
        assert_eq!(conv(Cyrillic, Latin, "шўрва"), "shoʻrva");
        assert_eq!(conv(Latin, NewLatin, "aksent"), "aksent");
        assert_eq!(conv(Cyrillic, NewLatin, "черепица"), "çerepitsa");
    }

    #[test]
    fn digraph_case_from_context() {
        assert_eq!(conv(Cyrillic, Latin, "Шўрва"), "Shoʻrva");
        assert_eq!(conv(Cyrillic, Latin, "АҚШ"), "AQSH");
        assert_eq!(conv(Cyrillic, Latin, "ЮНЕСКО"), "YUNESKO");
        assert_eq!(conv(Cyrillic, Latin, "Юлдуз"), "Yulduz");
        assert_eq!(conv(Cyrillic, Latin, "Ш"), "Sh");
        assert_eq!(conv(Cyrillic, Latin, "ЎЗБЕК"), "OʻZBEK");
        assert_eq!(conv(NewLatin, Cyrillic, "TOÑ"), "ТОНГ");
        assert_eq!(conv(NewLatin, Cyrillic, "Ñ"), "Нг");
        assert_eq!(conv(Latin, Cyrillic, "SHOʻRVA"), "ШЎРВА");
        assert_eq!(conv(Latin, Cyrillic, "Shoʻrva"), "Шўрва");
        assert_eq!(conv(Latin, NewLatin, "Chiroyli"), "Çiroyli");
    }

    #[test]
    fn render_digraph_case_examples() {
        assert_eq!(render_digraph_case("sh", true, Some(false)), "Sh");
        assert_eq!(render_digraph_case("sh", true, Some(true)), "SH");
        assert_eq!(render_digraph_case("yu", true, Some(true)), "YU");
        assert_eq!(render_digraph_case("yu", true, None), "Yu");
        assert_eq!(render_digraph_case("yu", false, Some(true)), "yu");
    }

    #[test]
    fn e_and_ye_contexts() {
        assert_eq!(conv(Cyrillic, Latin, "ер"), "yer");
        assert_eq!(conv(Cyrillic, Latin, "поезд"), "poyezd");
        assert_eq!(conv(Cyrillic, Latin, "кеча"), "kecha");
        assert_eq!(conv(Latin, Cyrillic, "eshik"), "эшик");
        assert_eq!(conv(Latin, Cyrillic, "yer"), "ер");
        assert_eq!(conv(Latin, Cyrillic, "aeroport"), "аэропорт");
        assert_eq!(conv(Latin, Cyrillic, "kecha"), "кеча");
    }

    #[test]
    fn ts_contexts() {
        assert_eq!(conv(Cyrillic, Latin, "милиция"), "militsiya");
        assert_eq!(conv(Cyrillic, Latin, "цирк"), "sirk");
        assert_eq!(conv(Cyrillic, Latin, "акцент"), "aksent");
        assert_eq!(conv(Latin, Cyrillic, "militsiya"), "милиция");
        assert_eq!(conv(Latin, Cyrillic, "kutsa"), "куца");
        assert_eq!(conv(Latin, Cyrillic, "otsiz"), "оциз");
        assert_eq!(conv(Latin, Cyrillic, "tsement"), "тсемент");
    }

    #[test]
    fn okina_blocks_y_and_n_digraphs() {
        assert_eq!(conv(Latin, Cyrillic, "yoʻl"), "йўл");
        assert_eq!(conv(Latin, Cyrillic, "yogʻ"), "ёғ");
        assert_eq!(conv(Latin, NewLatin, "mingʻ"), "minḡ");
        assert_eq!(conv(NewLatin, Latin, "minḡ"), "mingʻ");
    }

    #[test]
    fn separated_s_h() {
        assert_eq!(conv(Cyrillic, Latin, "исҳоқ"), "isʼhoq");
        assert_eq!(conv(Latin, Cyrillic, "isʼhoq"), "исҳоқ");
        assert_eq!(conv(Cyrillic, NewLatin, "исҳоқ"), "isʼhoq");
        assert_eq!(conv(NewLatin, Cyrillic, "isʼhoq"), "исҳоқ");
        assert_eq!(conv(Latin, NewLatin, "isʼhoq"), "isʼhoq");
    }

    #[test]
    fn glottal_stop_and_soft_sign() {
        assert_eq!(conv(Cyrillic, Latin, "маъно"), "maʼno");
        assert_eq!(conv(Latin, Cyrillic, "maʼno"), "маъно");
        assert_eq!(conv(Cyrillic, Latin, "факультет"), "fakultet");
        assert_eq!(conv(Cyrillic, NewLatin, "кальций"), "kalsiy");
    }

    #[test]
    fn unknown_characters_pass_through() {
        assert_eq!(conv(Cyrillic, Latin, "щука"), "щuka");
        assert_eq!(conv(Latin, Cyrillic, "wc"), "wc");
    }

    #[test]
    fn dumps() {
        let dump = rule_table_dump(Latin, NewLatin).unwrap();
        assert!(dump.contains("5 rule groups"));
        assert!(dump.contains("identity"));
        let dump = rule_table_dump(Cyrillic, Latin).unwrap();
        assert!(dump.contains("ц → ts | s (context"), "{dump}");
        let dump = rule_table_dump(NewLatin, Latin).unwrap();
        assert!(dump.contains("ō → oʻ"));
        assert_eq!(dump, rule_table_dump(NewLatin, Latin).unwrap());
    }

    #[test]
    fn char_maps_are_injective() {
        for (from, to) in AlphabetId::directions() {
            let rs = ruleset_for(from, to).unwrap();
            let mut targets = BTreeSet::new();
            for (_, dst) in rs.char_map.entries() {
                assert!(targets.insert(*dst), "{from}->{to}: {dst} mapped twice");
            }
        }
    }

    fn latin_word() -> impl Strategy<Value = String> {
        proptest::collection::vec(
            prop_oneof![
                "[a-zA-Z]".prop_map(|s| s),
                Just("oʻ".to_string()),
                Just("Gʻ".to_string()),
                Just("ʼ".to_string()),
            ],
            1..12,
        )
        .prop_map(|parts| parts.concat())
    }

    proptest! {
        #[test]
        fn lowercase_in_lowercase_out(word in "[a-zʼ]{1,12}") {
            for to in [Cyrillic, NewLatin] {
                let out = conv(Latin, to, &word);
                prop_assert!(!out.chars().any(char::is_uppercase));
            }
        }

        #[test]
        fn outputs_stay_in_target_alphabet(word in latin_word()) {
            for to in [Cyrillic, NewLatin] {
                let out = conv(Latin, to, &word);
                for c in out.chars() {
                    prop_assert!(to.contains(c) || word.contains(c), "{} -> {}", word, out);
                }
            }
        }
    }
}
