//! Command definitions and dispatch. Every command renders its output to a
//! string so it can be tested without spawning a process.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zinbiel_core::criteria::{dim_st, enumerate_skew_basis, is_jordan, is_lie};
use zinbiel_core::report::Report;
use zinbiel_core::speciality::{counterexample_certificate, IdealPresentation};
use zinbiel_core::{Alphabet, MultiDegree};

use crate::eval::{eval_str, Env, EvalError};
use crate::suites;

#[derive(Debug, Parser)]
#[command(name = "zinbiel", version, about = "Exact computations in free Zinbiel, Tortkara and special Tortkara algebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression and print its expansion in words.
    Eval {
        expr: String,
        /// Generator order, e.g. `x,y,z` (default: order of first appearance).
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Decide whether an expression is a Lie element (p(f) = -f).
    IsLie {
        expr: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Decide whether an expression is a Jordan element (D(f_n) = n! f_n).
    IsJordan {
        expr: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// List the skew words (last two letters ascending) of a multidegree.
    SkewBasis {
        /// Occurrence counts per generator, e.g. `2,1,1`.
        #[arg(long, value_delimiter = ',', required = true)]
        multidegree: Vec<u32>,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Dimension of the free special Tortkara algebra in a multidegree.
    DimSt {
        #[arg(long, value_delimiter = ',', required = true)]
        multidegree: Vec<u32>,
    },
    /// Randomized and exhaustive identity suites.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Free Tortkara algebras: multilinear dimensions, s-identity scan, two generators.
    #[command(subcommand)]
    Tortkara(TortkaraCommand),
    /// Cohn inclusion checks for quotients of the free special Tortkara algebra.
    #[command(subcommand)]
    Speciality(SpecialityCommand),
    /// Integration-operator algebras on truncated polynomials.
    Remark1 {
        #[arg(long, default_value_t = 12)]
        cap: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Zinbiel and Tortkara identities, shuffle laws, skew-bar formulas, Lie brackets.
    Core {
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum TortkaraCommand {
    /// Multilinear dimension of the free Tortkara algebra in degree N.
    Mdim {
        #[arg(short = 'n')]
        n: u32,
    },
    /// Compare the free Tortkara algebra with its special image in degree N.
    Scan {
        #[arg(short = 'n')]
        n: u32,
    },
    /// Ranks of left-normed brackets in two generators up to the given degree.
    TwoGen {
        #[arg(long, default_value_t = 7)]
        max_degree: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum SpecialityCommand {
    /// Check the Cohn inclusion for the ideal generated by the elements in FILE.
    Cohn {
        /// One expression per line; blank lines and `;` comments are ignored.
        #[arg(long)]
        gens: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_total: u32,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Certificate for the three-generator non-special quotient.
    Counterexample,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Core(#[from] zinbiel_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}, line {line}: {source}")]
    GeneratorLine { path: PathBuf, line: usize, source: EvalError },
    #[error("{0}")]
    Usage(String),
}

/// Rendered output and whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

impl Outcome {
    fn value(format: Format, command: &str, text: String, json_value: Value) -> Self {
        let stdout = match format {
            Format::Text => text,
            Format::Json => json!({ "command": command, "value": json_value }).to_string(),
        };
        Outcome { stdout: with_newline(stdout), success: true }
    }

    fn report(format: Format, r: &Report) -> Self {
        let stdout = match format {
            Format::Text => r.to_string(),
            Format::Json => report_json(r).to_string(),
        };
        Outcome { stdout: with_newline(stdout), success: r.all_pass() }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

/// Flat JSON mirror of a report.
pub fn report_json(r: &Report) -> Value {
    let fields: serde_json::Map<String, Value> = r.fields.iter().map(|(k, v)| (k.clone(), Value::from(v.as_str()))).collect();
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "expected": c.expected, "computed": c.computed, "pass": c.pass }))
        .collect();
    json!({
        "title": r.title,
        "fields": fields,
        "checks": checks,
        "result": if r.all_pass() { "PASS" } else { "FAIL" },
    })
}

fn env(alphabet: &Option<String>) -> Result<Env, CliError> {
    Ok(match alphabet {
        Some(list) => Env::fixed(Alphabet::new(list.split(',').map(str::trim))?),
        None => Env::open(),
    })
}

fn multidegree(counts: &[u32]) -> MultiDegree {
    MultiDegree::from_counts(counts)
}

fn names_for(counts: &[u32], alphabet: &Option<String>) -> Result<Alphabet, CliError> {
    let a = match alphabet {
        Some(list) => Alphabet::new(list.split(',').map(str::trim))?,
        None => Alphabet::numbered(counts.len() as u32),
    };
    if a.len() < counts.len() {
        return Err(CliError::Usage(format!("alphabet has {} names but the multidegree has {} entries", a.len(), counts.len())));
    }
    Ok(a)
}

fn read_presentation(path: &PathBuf, alphabet: &Option<String>) -> Result<IdealPresentation, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
    let mut env = env(alphabet)?;
    let mut gens = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let content = line.split(';').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let e = eval_str(content, &mut env).map_err(|source| CliError::GeneratorLine { path: path.clone(), line: i + 1, source })?;
        if !is_lie(&e) {
            return Err(CliError::GeneratorLine {
                path: path.clone(),
                line: i + 1,
                source: EvalError::Core(zinbiel_core::Error::BadGenerator),
            });
        }
        gens.push(e);
    }
    let label = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(IdealPresentation::new(env.alphabet, label, gens)?)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let f = cli.format;
    Ok(match &cli.command {
        Command::Eval { expr, alphabet } => {
            let mut env = env(alphabet)?;
            let e = eval_str(expr, &mut env)?;
            let text = e.to_text(&env.alphabet);
            let lines: Vec<&str> = text.lines().collect();
            Outcome::value(f, "eval", text.clone(), json!(lines))
        }
        Command::IsLie { expr, alphabet } => {
            let e = eval_str(expr, &mut env(alphabet)?)?;
            let v = is_lie(&e);
            Outcome::value(f, "is-lie", v.to_string(), json!(v))
        }
        Command::IsJordan { expr, alphabet } => {
            let e = eval_str(expr, &mut env(alphabet)?)?;
            let v = is_jordan(&e);
            Outcome::value(f, "is-jordan", v.to_string(), json!(v))
        }
        Command::SkewBasis { multidegree: counts, alphabet } => {
            let names = names_for(counts, alphabet)?;
            let words: Vec<String> = enumerate_skew_basis(&multidegree(counts))?
                .iter()
                .map(|s| names.format_word(s.word()))
                .collect();
            Outcome::value(f, "skew-basis", words.join("\n"), json!(words))
        }
        Command::DimSt { multidegree: counts } => {
            let d = dim_st(&multidegree(counts))?;
            Outcome::value(f, "dim-st", d.to_string(), json!(d))
        }
        Command::Verify(VerifyCommand::Core { max_degree, trials, seed }) => {
            Outcome::report(f, &suites::verify_core(*max_degree, *trials, *seed))
        }
        Command::Tortkara(TortkaraCommand::Mdim { n }) => {
            let d = suites::mdim_value(*n)?;
            Outcome::value(f, "tortkara mdim", d.to_string(), json!(d))
        }
        Command::Tortkara(TortkaraCommand::Scan { n }) => Outcome::report(f, &suites::scan_report(*n)?),
        Command::Tortkara(TortkaraCommand::TwoGen { max_degree }) => Outcome::report(f, &suites::two_gen_report(*max_degree)?),
        Command::Speciality(SpecialityCommand::Cohn { gens, max_total, alphabet }) => {
            let p = read_presentation(gens, alphabet)?;
            Outcome::report(f, &suites::cohn_report(&p, *max_total)?)
        }
        Command::Speciality(SpecialityCommand::Counterexample) => match counterexample_certificate() {
            Ok(r) => Outcome::report(f, &r),
            Err(zinbiel_core::Error::CertificateViolation(text)) => Outcome { stdout: with_newline(text), success: false },
            Err(e) => return Err(e.into()),
        },
        Command::Remark1 { cap, trials, seed } => Outcome::report(f, &suites::integration_algebras(*cap, *trials, *seed)?.report),
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| CliError::Usage(e.to_string()))?;
    run(&cli)
}
