//! The `plscl` command line.
//!
//! Exit codes: 0 on success, 1 for invalid input or a rejected certificate,
//! 2 when a displacer search runs out of budget. Diagnostics go to stderr;
//! stdout carries only results, so transcripts are deterministic.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::certificates::{certify, verify_certificate, SclCertificate};
use crate::displacement::{find_displacer_simultaneous, group_fixed_set};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::plmap::PlMap;
use crate::rational;
use crate::thompson::check_reserved;
use crate::words::{CommutatorExpression, GeneratorAssignment, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

const DEFAULT_BUDGET: usize = 6;

#[derive(Parser, Debug)]
#[command(
    name = "plscl",
    version,
    about = "Exact PL⁺(I) algebra and commutator-length certificates"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a map at a rational point.
    Eval {
        #[arg(long)]
        map: PathBuf,
        #[arg(long, value_parser = parse_rational)]
        at: rational::Rational,
    },
    /// Compose maps; the last one is applied first.
    Compose {
        #[arg(long = "map", required = true, num_args = 1)]
        maps: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invert a map.
    Invert {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Slopes at 0 and at 1.
    Eta {
        #[arg(long)]
        map: PathBuf,
    },
    /// Common fixed set of the generators and its complementary components.
    Fix {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a word displacing every target interval at once.
    Displace {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        targets: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = parse_budget)]
        budget: usize,
    },
    /// Build a certificate that g^(n+1) is a product of m+1 commutators.
    Certify {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        expr: PathBuf,
        /// Displacing word; searched for when omitted.
        #[arg(long)]
        j: Option<PathBuf>,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = parse_budget)]
        budget: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a certificate.
    Verify { certificate: PathBuf },
}

fn parse_rational(s: &str) -> std::result::Result<rational::Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

fn parse_budget(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(b) if b > 0 => Ok(b),
        _ => Err(format!("budget must be a positive integer, got {s:?}")),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        let text = e.to_string();
        match text.strip_prefix("invalid map: ") {
            Some(rest) => Error::InvalidMap(format!("{}: {rest}", path.display())),
            None => Error::InvalidInput(format!("{}: {text}", path.display())),
        }
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("values serialize")
}

/// Writes to a sibling temporary file, then renames over the target.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io_err = |e: std::io::Error| Error::InvalidInput(format!("{}: {e}", path.display()));
    let file_name = path
        .file_name()
        .ok_or_else(|| Error::InvalidInput(format!("{} is not a file path", path.display())))?;
    let mut tmp_name = OsString::from(".");
    tmp_name.push(file_name);
    tmp_name.push(format!(".tmp{}", std::process::id()));
    let tmp = path.with_file_name(tmp_name);
    fs::write(&tmp, contents).map_err(io_err)?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        io_err(e)
    })
}

fn emit(out: &mut dyn Write, path: Option<&Path>, json: String) -> Result<()> {
    match path {
        Some(p) => write_atomic(p, &(json + "\n")),
        None => writeln!(out, "{json}").map_err(|e| Error::InvalidInput(e.to_string())),
    }
}

/// Loads generators; `x0`/`x1` may only be bound to the standard generators of F.
fn load_gens(path: &Path) -> Result<GeneratorAssignment> {
    let env: GeneratorAssignment = read_json(path)?;
    check_reserved(&env)?;
    Ok(env)
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    let w = |out: &mut dyn Write, line: String| {
        writeln!(out, "{line}").map_err(|e| Error::InvalidInput(e.to_string()))
    };
    match cmd {
        Command::Eval { map, at } => {
            let f: PlMap = read_json(&map)?;
            w(out, rational::format(&f.eval(&at)?))?;
        }
        Command::Compose { maps, out: path } => {
            let mut acc = PlMap::identity();
            for p in &maps {
                acc = acc.compose(&read_json::<PlMap>(p)?);
            }
            emit(out, path.as_deref(), to_json(&acc))?;
        }
        Command::Invert { map, out: path } => {
            let f: PlMap = read_json(&map)?;
            emit(out, path.as_deref(), to_json(&f.invert()))?;
        }
        Command::Eta { map } => {
            let f: PlMap = read_json(&map)?;
            w(out, to_json(&f.eta()))?;
        }
        Command::Fix { gens, out: path } => {
            let env = load_gens(&gens)?;
            emit(out, path.as_deref(), to_json(&group_fixed_set(&env)))?;
        }
        Command::Displace {
            gens,
            targets,
            budget,
        } => {
            let env = load_gens(&gens)?;
            let targets: Vec<Interval> = read_json(&targets)?;
            let d = find_displacer_simultaneous(&env, &targets, budget)?;
            w(out, to_json(&d.word))?;
        }
        Command::Certify {
            gens,
            expr,
            j,
            n,
            budget,
            out: path,
        } => {
            let env = load_gens(&gens)?;
            let expr: CommutatorExpression = read_json(&expr)?;
            let j_word: Option<Word> = j.as_deref().map(read_json).transpose()?;
            let cert = certify(&expr, j_word.as_ref(), n, budget, &env)?;
            write_atomic(&path, &(to_json(&cert) + "\n"))?;
            w(out, cert.witness_ratio())?;
        }
        Command::Verify { certificate } => {
            let cert: SclCertificate = read_json(&certificate)?;
            match verify_certificate(&cert) {
                Ok(()) => w(out, format!("VALID bound={}", cert.witness_ratio()))?,
                Err(reason) => {
                    w(out, format!("INVALID {reason}"))?;
                    return Ok(EXIT_INVALID);
                }
            }
        }
    }
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_INVALID,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(config.command, out) {
        Ok(code) => code,
        Err(e @ Error::BudgetExhausted { .. }) => {
            let _ = writeln!(out, "BUDGET_EXHAUSTED");
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            EXIT_BUDGET
        }
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            EXIT_INVALID
        }
    }
}
