//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when the answer is a negative verdict (not a
//! UMVUE, no UMVUE, not estimable), 2 on bad input. Errors go to stderr with an
//! `error:` prefix.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::algebra::{product_model, slice_model};
use crate::analysis::{is_umvue, umvue_for, Estimate, UmvueVerdict};
use crate::corpus::{corpus_model, NAMES};
use crate::expr::parse_poly;
use crate::model::{CategoricalModel, Statistic};
use crate::rational::{parse_rational, parse_rational_list};
use crate::report::analyze;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "umvue",
    version,
    about = "UMVUE structure of finite categorical models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report the MVE partition, zero-mean statistics and sufficiency diagnostics.
    Analyze {
        model: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a statistic is a UMVUE.
    Verify {
        model: PathBuf,
        /// Comma-separated values in support order, e.g. "1,0,0,0".
        #[arg(long, allow_hyphen_values = true)]
        statistic: String,
    },
    /// Find the UMVUE of a polynomial parametric function.
    Estimate {
        model: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
    },
    /// Write the independent product of two models.
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Fix parameters at interior values and write the resulting model.
    Slice {
        model: PathBuf,
        /// NAME=VALUE, repeatable.
        #[arg(long = "bind", required = true)]
        bind: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List or emit built-in models.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusAction {
    List,
    Emit {
        name: String,
        /// KEY=INTEGER, repeatable.
        #[arg(long = "param")]
        param: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn load(path: &Path) -> Result<CategoricalModel, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    CategoricalModel::from_json(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn emit(
    out: &mut dyn Write,
    output: Option<&Path>,
    m: &CategoricalModel,
) -> Result<(), InputError> {
    let mut json = m.to_json();
    json.push('\n');
    match output {
        Some(p) => {
            std::fs::write(p, json).map_err(|e| InputError(format!("{}: {e}", p.display())))?
        }
        None => out.write_all(json.as_bytes())?,
    }
    Ok(())
}

fn split_pair(s: &str) -> Result<(&str, &str), InputError> {
    s.split_once('=')
        .map(|(k, v)| (k.trim(), v.trim()))
        .ok_or_else(|| InputError(format!("expected NAME=VALUE, got {s:?}")))
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, InputError> {
    match cmd {
        Command::Analyze { model, json } => {
            let report = analyze(&load(&model)?)?;
            let text = if json {
                report.to_json()
            } else {
                report.to_text()
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify { model, statistic } => {
            let m = load(&model)?;
            let g = Statistic::new(parse_rational_list(&statistic)?);
            match is_umvue(&m, &g)? {
                UmvueVerdict::Umvue => {
                    writeln!(out, "UMVUE: yes")?;
                    Ok(EXIT_OK)
                }
                UmvueVerdict::NotUmvue { witness, residual } => {
                    writeln!(out, "UMVUE: no")?;
                    writeln!(out, "witness: {witness}")?;
                    writeln!(out, "residual: {residual}")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Estimate { model, target } => {
            let m = load(&model)?;
            let t = parse_poly(&target, m.parameters())?;
            match umvue_for(&m, &t)? {
                Estimate::Umvue(g) => {
                    writeln!(out, "UMVUE: {g}")?;
                    Ok(EXIT_OK)
                }
                Estimate::NoUmvue => {
                    writeln!(out, "NoUmvue: {t} is estimable but has no UMVUE")?;
                    Ok(EXIT_NEGATIVE)
                }
                Estimate::NotEstimable => {
                    writeln!(out, "NotEstimable: {t} has no unbiased estimator")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Product {
            first,
            second,
            output,
        } => {
            let m = product_model(&load(&first)?, &load(&second)?)?;
            emit(out, output.as_deref(), &m)?;
            Ok(EXIT_OK)
        }
        Command::Slice {
            model,
            bind,
            output,
        } => {
            let m = load(&model)?;
            let mut bindings = BTreeMap::new();
            for b in &bind {
                let (k, v) = split_pair(b)?;
                bindings.insert(k.to_string(), parse_rational(v)?);
            }
            emit(out, output.as_deref(), &slice_model(&m, &bindings)?)?;
            Ok(EXIT_OK)
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                for name in NAMES {
                    writeln!(out, "{name}")?;
                }
                Ok(EXIT_OK)
            }
            CorpusAction::Emit {
                name,
                param,
                output,
            } => {
                let mut params = BTreeMap::new();
                for p in &param {
                    let (k, v) = split_pair(p)?;
                    let v: i64 = v.parse().map_err(|_| {
                        InputError(format!("parameter {k}: {v:?} is not an integer"))
                    })?;
                    params.insert(k.to_string(), v);
                }
                emit(out, output.as_deref(), &corpus_model(&name, &params)?)?;
                Ok(EXIT_OK)
            }
        },
    }
}

/// Runs one command line (including the program name) and returns the exit code.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    // usage errors already start with "error:", bare help does not
                    let text = e.render().to_string();
                    let prefix = if text.starts_with("error:") {
                        ""
                    } else {
                        "error: missing command\n"
                    };
                    let _ = write!(err, "{prefix}{text}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}
