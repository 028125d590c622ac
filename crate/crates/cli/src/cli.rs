//! Argument parsing and dispatch for the `uztranslit` binary.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use uztranslit::{
    evaluate, report_key_values, report_render, rule_table_dump, AlphabetId, ExceptionLexicon,
    ParallelLexicon, TranslitOptions, Transliterator,
};

use crate::server;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } | CliError::Data(_) => EXIT_DATA,
        }
    }

    fn io(path: impl AsRef<Path>, source: io::Error) -> Self {
        CliError::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}

fn parse_alphabet(s: &str) -> Result<AlphabetId, String> {
    s.parse::<AlphabetId>().map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "uztranslit",
    version,
    about = "Transliterate Uzbek text between Cyrillic, Latin and New Latin",
    args_conflicts_with_subcommands = true
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    #[command(flatten)]
    translit: TranslitArgs,

    /// Exception lexicon TSV to use instead of the bundled one.
    #[arg(long, global = true, env = "UZTRANSLIT_LEXICON", value_name = "PATH")]
    lexicon: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Transliterate text (the default when no subcommand is given).
    Translit(TranslitArgs),
    /// Score the tool against a parallel three-alphabet word list.
    Eval(EvalArgs),
    /// Print the rule table for one direction.
    Rules(RulesArgs),
    /// Run the JSON HTTP service.
    Serve(ServeArgs),
}

#[derive(Debug, Args, Default)]
struct TranslitArgs {
    /// Source alphabet: latin, cyrillic or new_latin.
    #[arg(long, value_parser = parse_alphabet)]
    from: Option<AlphabetId>,
    /// Target alphabet: latin, cyrillic or new_latin.
    #[arg(long, value_parser = parse_alphabet)]
    to: Option<AlphabetId>,
    /// Input file (standard input if omitted).
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Output file (standard output if omitted).
    #[arg(long = "out", value_name = "PATH")]
    output: Option<PathBuf>,
    /// Skip Unicode composition and apostrophe canonicalisation.
    #[arg(long)]
    no_normalize: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Kv,
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// Parallel lexicon TSV with a latin/cyrillic/new_latin header.
    #[arg(long, value_name = "PATH")]
    data: PathBuf,
    #[arg(long = "out", value_name = "PATH")]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
}

#[derive(Debug, Args)]
struct RulesArgs {
    #[arg(long, value_parser = parse_alphabet)]
    from: AlphabetId,
    #[arg(long, value_parser = parse_alphabet)]
    to: AlphabetId,
}

#[derive(Debug, Args)]
struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    bind: String,
}

/// Runs the tool with explicit streams and returns the process exit status.
pub fn run_cli<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = write!(stderr, "{e}");
            return EXIT_USAGE;
        }
        Err(e) => {
            // --help and --version
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
    };
    match dispatch(cli, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "uztranslit: {e}");
            e.exit_code()
        }
    }
}

fn load_transliterator(lexicon: Option<&Path>) -> Result<Transliterator, CliError> {
    let lexicon = match lexicon {
        Some(path) => {
            let file = fs::File::open(path).map_err(|e| CliError::io(path, e))?;
            ExceptionLexicon::load(file)
                .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?
        }
        None => ExceptionLexicon::bundled(),
    };
    Transliterator::new(lexicon).map_err(|e| CliError::Data(e.to_string()))
}

fn write_output(path: Option<&Path>, stdout: &mut dyn Write, payload: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, payload).map_err(|e| CliError::io(path, e)),
        None => stdout
            .write_all(payload.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}

fn dispatch(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), CliError> {
    let lexicon = cli.lexicon.as_deref();
    match cli.command {
        None => run_translit(cli.translit, lexicon, stdin, stdout),
        Some(Command::Translit(args)) => run_translit(args, lexicon, stdin, stdout),
        Some(Command::Eval(args)) => {
            let t = load_transliterator(lexicon)?;
            let file = fs::File::open(&args.data).map_err(|e| CliError::io(&args.data, e))?;
            let data = ParallelLexicon::load(file)
                .map_err(|e| CliError::Data(format!("{}: {e}", args.data.display())))?;
            let report = evaluate(&data, &t).map_err(|e| CliError::Data(e.to_string()))?;
            let rendered = match args.format {
                ReportFormat::Table => report_render(&report).map_err(|e| CliError::Data(e.to_string()))?,
                ReportFormat::Kv => report_key_values(&report),
            };
            write_output(args.output.as_deref(), stdout, &rendered)
        }
        Some(Command::Rules(args)) => {
            let dump = rule_table_dump(args.from, args.to).map_err(|e| CliError::Usage(e.to_string()))?;
            write_output(None, stdout, &dump)
        }
        Some(Command::Serve(args)) => {
            let t = Arc::new(load_transliterator(lexicon)?);
            let addr = format!("{}:{}", args.bind, args.port);
            let runtime = tokio::runtime::Runtime::new().map_err(|e| CliError::io("<runtime>", e))?;
            runtime.block_on(async {
                let listener = tokio::net::TcpListener::bind(&addr)
                    .await
                    .map_err(|e| CliError::io(&addr, e))?;
                log::info!("listening on {addr}");
                server::serve(listener, t).await.map_err(|e| CliError::io(&addr, e))
            })
        }
    }
}

fn run_translit(
    args: TranslitArgs,
    lexicon: Option<&Path>,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let (Some(from), Some(to)) = (args.from, args.to) else {
        return Err(CliError::Usage(
            "both --from and --to are required (latin, cyrillic, new_latin)".into(),
        ));
    };
    let t = load_transliterator(lexicon)?;
    let mut raw = Vec::new();
    match &args.input {
        Some(path) => {
            raw = fs::read(path).map_err(|e| CliError::io(path, e))?;
        }
        None => {
            stdin.read_to_end(&mut raw).map_err(|e| CliError::io("<stdin>", e))?;
        }
    }
    let name = args
        .input
        .as_ref()
        .map_or("<stdin>".to_string(), |p| p.display().to_string());
    let text = String::from_utf8(raw).map_err(|e| CliError::Data(format!("{name}: input is not UTF-8: {e}")))?;
    let mut options = TranslitOptions::new(from, to);
    options.normalize_apostrophes = !args.no_normalize;
    write_output(args.output.as_deref(), stdout, &t.transliterate(&text, options))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str], input: &str) -> (i32, String, String) {
        let mut argv = vec!["uztranslit"];
        argv.extend_from_slice(args);
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_cli(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn default_mode_transliterates_stdin() {
        let (code, out, _) = run(&["--from", "cyrillic", "--to", "latin"], "Шўрва!");
        assert_eq!((code, out.as_str()), (0, "Shoʻrva!"));
        let (code, out, _) = run(&["translit", "--from", "cyrillic", "--to", "latin"], "Шўрва!\n\nюз\n");
        assert_eq!((code, out.as_str()), (0, "Shoʻrva!\n\nyuz\n"));
    }

    #[test]
    fn identity_without_normalization() {
        let (code, out, _) = run(&["translit", "--from", "latin", "--to", "latin", "--no-normalize"], "abc");
        assert_eq!((code, out.as_str()), (0, "abc"));
    }

    #[test]
    fn unknown_alphabet_is_a_usage_error() {
        let (code, out, err) = run(&["translit", "--from", "klingon", "--to", "latin"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("latin, cyrillic, new_latin"), "{err}");
    }

    #[test]
    fn missing_direction_is_a_usage_error() {
        let (code, _, err) = run(&["--from", "latin"], "x");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--to"));
    }

    #[test]
    fn rules_subcommand() {
        let (code, out, _) = run(&["rules", "--from", "latin", "--to", "new_latin"], "");
        assert_eq!(code, 0);
        assert!(out.contains("5 rule groups"));
        let (code, _, _) = run(&["rules", "--from", "latin", "--to", "latin"], "");
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn missing_files_are_data_errors() {
        let (code, _, err) = run(&["--from", "latin", "--to", "cyrillic", "--in", "/nonexistent/in.txt"], "");
        assert_eq!(code, EXIT_DATA);
        assert!(err.contains("/nonexistent/in.txt"));
        let (code, _, _) = run(&["eval", "--data", "/nonexistent/gold.tsv"], "");
        assert_eq!(code, EXIT_DATA);
    }

    #[test]
    fn invalid_utf8_is_a_data_error() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_cli(
            ["uztranslit", "--from", "latin", "--to", "cyrillic"],
            &mut &[0xffu8, 0xfe][..],
            &mut out,
            &mut err,
        );
        assert_eq!(code, EXIT_DATA);
        assert!(out.is_empty());
    }
}
