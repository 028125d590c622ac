//! Word-level evaluation against a parallel three-alphabet lexicon.
//!
//! Every gold word yields exactly one prediction, so micro-averaged
//! precision, recall and F1 all collapse to word accuracy.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::io::Read;

use crate::alphabet::AlphabetId;
use crate::error::{Error, Result};
use crate::lexicon::{parse_tsv_rows, ExceptionEntry};
use crate::pipeline::{TranslitOptions, Transliterator};

/// Word triples in the same TSV format as the exception lexicon.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParallelLexicon {
    pub rows: Vec<ExceptionEntry>,
}

impl ParallelLexicon {
    pub fn load<R: Read>(mut source: R) -> Result<Self> {
        let mut text = String::new();
        source.read_to_string(&mut text)?;
        Self::from_tsv(&text)
    }

    pub fn from_tsv(text: &str) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut rows = Vec::new();
        for (line, row) in parse_tsv_rows(text)? {
            if !seen.insert(row.clone()) {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate row `{}`", row.latin),
                });
            }
            rows.push(row);
        }
        Ok(ParallelLexicon { rows })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionScore {
    pub source: AlphabetId,
    pub target: AlphabetId,
    pub total: usize,
    pub correct: usize,
    pub micro_f1: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct EvalReport {
    pub directions: Vec<DirectionScore>,
}

impl EvalReport {
    pub fn score(&self, source: AlphabetId, target: AlphabetId) -> Option<&DirectionScore> {
        self.directions
            .iter()
            .find(|d| d.source == source && d.target == target)
    }
}

/// Word accuracy, which equals micro-F1 when each word gets one prediction.
pub fn micro_f1(correct: usize, total: usize) -> Result<f64> {
    if total == 0 || correct > total {
        return Err(Error::InvalidCount { correct, total });
    }
    Ok(correct as f64 / total as f64)
}

/// Transliterates every word of `lexicon` in all six directions and scores
/// exact matches against the gold forms.
pub fn evaluate(lexicon: &ParallelLexicon, t: &Transliterator) -> Result<EvalReport> {
    if lexicon.is_empty() {
        return Err(Error::EmptyLexicon);
    }
    let mut directions = Vec::with_capacity(6);
    for (source, target) in AlphabetId::directions() {
        let options = TranslitOptions::new(source, target);
        let correct = lexicon
            .rows
            .iter()
            .filter(|row| {
                let predicted = t.transliterate(row.form(source), options).to_lowercase();
                predicted == row.form(target).to_lowercase()
            })
            .count();
        let total = lexicon.len();
        directions.push(DirectionScore {
            source,
            target,
            total,
            correct,
            micro_f1: micro_f1(correct, total)?,
        });
    }
    Ok(EvalReport { directions })
}

/// Renders the 3×3 score matrix: rows are sources, columns are targets.
pub fn report_render(report: &EvalReport) -> Result<String> {
    let mut cells = Vec::new();
    for source in AlphabetId::ALL {
        for target in AlphabetId::ALL {
            let cell = if source == target {
                "-".to_string()
            } else {
                let score = report.score(source, target).ok_or(Error::EmptyLexicon)?;
                format!("{:.2}", score.micro_f1)
            };
            cells.push(cell);
        }
    }
    let width = 10;
    let mut out = format!("{:<width$}", "Alphabets");
    for target in AlphabetId::ALL {
        let _ = write!(out, " | {:^width$}", target.label());
    }
    out.push('\n');
    for (r, source) in AlphabetId::ALL.iter().enumerate() {
        let _ = write!(out, "{:<width$}", source.label());
        for cell in &cells[r * 3..r * 3 + 3] {
            let _ = write!(out, " | {cell:^width$}");
        }
        out.push('\n');
    }
    Ok(out)
}

/// One `source->target=score` line per direction.
pub fn report_key_values(report: &EvalReport) -> String {
    report
        .directions
        .iter()
        .map(|d| format!("{}->{}={:.4}\n", d.source, d.target, d.micro_f1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlphabetId::*;

    #[test]
    fn micro_f1_arithmetic() {
        assert_eq!(micro_f1(18, 20).unwrap(), 0.9);
        assert_eq!(micro_f1(20, 20).unwrap(), 1.0);
        assert_eq!(micro_f1(0, 5).unwrap(), 0.0);
        assert!(micro_f1(0, 0).is_err());
        assert!(micro_f1(3, 2).is_err());
    }

    #[test]
    fn loads_parallel_rows() {
        let lex = ParallelLexicon::from_tsv("latin\tcyrillic\tnew_latin\naksent\tакцент\taksent\n").unwrap();
        assert_eq!(lex.rows[0].cyrillic, "акцент");
        assert!(ParallelLexicon::from_tsv("latin\tcyrillic\tnew_latin\n").unwrap().is_empty());
        let err = ParallelLexicon::from_tsv("latin\tcyrillic\tnew_latin\na\tа\ta\tx\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = ParallelLexicon::from_tsv("latin\tcyrillic\tnew_latin\nol\tол\tol\nol\tол\tol\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn empty_lexicon_is_rejected() {
        let t = Transliterator::with_bundled_lexicon();
        assert!(matches!(evaluate(&ParallelLexicon::default(), &t), Err(Error::EmptyLexicon)));
    }

    #[test]
    fn single_correct_row() {
        let t = Transliterator::with_bundled_lexicon();
        let lex = ParallelLexicon::from_tsv("latin\tcyrillic\tnew_latin\nshahar\tшаҳар\tşahar\n").unwrap();
        let report = evaluate(&lex, &t).unwrap();
        assert_eq!(report.directions.len(), 6);
        assert!(report.directions.iter().all(|d| d.micro_f1 == 1.0 && d.total == 1));
    }

    #[test]
    fn render_layout() {
        let report = EvalReport {
            directions: AlphabetId::directions()
                .map(|(source, target)| DirectionScore {
                    source,
                    target,
                    total: 1,
                    correct: 1,
                    micro_f1: 1.0,
                })
                .collect(),
        };
        let table = report_render(&report).unwrap();
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].contains("Latin") && lines[0].contains("Cyrillic") && lines[0].contains("New Latin"));
        let latin_row: Vec<&str> = lines[1].split('|').map(str::trim).collect();
        assert_eq!(latin_row, vec!["Latin", "-", "1.00", "1.00"]);
        assert_eq!(table.matches("1.00").count(), 6);
        assert!(report_render(&EvalReport::default()).is_err());
        let kv = report_key_values(&report);
        assert!(kv.contains("latin->cyrillic=1.0000\n"));
        assert_eq!(report.score(Latin, Cyrillic).unwrap().correct, 1);
    }
}
