//! The `agjt` command line.
//!
//! Exit codes: 0 on success, 1 for invalid input or a domain failure (parse
//! error, failed check, exhausted search), 2 when `verify-paper-examples`
//! finds a mismatch.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::apolar::hilbert;
use crate::checks::check_rank_matrix;
use crate::codim2::{jdt_from_jordan_type, rank_matrix_from_jordan_type};
use crate::corpus;
use crate::error::Error;
use crate::jordan::{analyze, jdt_matrix, JordanData, RankMatrix};
use crate::lefschetz::{conjugate, slp_witness, sperner, wlp_witness};
use crate::parse::{parse_linear_form, parse_poly, VarTable};
use crate::partition::Partition;
use crate::poly::{LinearForm, Polynomial};
use crate::realize::{find_collisions, realize, Grouping, RealizeOutcome, SearchConfig};

#[derive(Debug, Parser)]
#[command(
    name = "agjt",
    version,
    about = "Jordan types and Jordan degree types of Artinian Gorenstein algebras"
)]
struct Cli {
    /// Comma-separated variable names, e.g. `X,Y,Z`. Inferred from the input when omitted.
    #[arg(long, global = true)]
    vars: Option<String>,

    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert function of S/Ann(F).
    Hilbert { generator: String },
    /// Rank matrix of (S/Ann(F), l).
    RankMatrix {
        generator: String,
        #[arg(long)]
        ell: String,
    },
    /// Jordan type of multiplication by l.
    Jordan {
        generator: String,
        #[arg(long)]
        ell: String,
    },
    /// Jordan degree type and its matrix.
    Jdt {
        generator: String,
        #[arg(long)]
        ell: String,
    },
    /// Structural checks on a rank matrix file.
    CheckRankMatrix { file: PathBuf },
    /// Jordan degree type forced by a codimension-two Jordan type.
    Codim2Jdt {
        #[arg(long = "jordan-type")]
        jordan_type: String,
        #[arg(long)]
        socle: usize,
    },
    /// Weak/strong Lefschetz witnesses for l.
    Lefschetz {
        generator: String,
        #[arg(long)]
        ell: String,
    },
    /// Search for a generator with the given rank matrix for l = first variable.
    Realize {
        file: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        max_trials: u64,
    },
    /// Find pairs with equal Hilbert function and Jordan type but different Jordan degree types.
    Collide {
        /// One `<F> ; <l>` entry per line; `#` starts a comment.
        #[arg(long)]
        pool: PathBuf,
    },
    /// Recompute the built-in reference corpus.
    VerifyPaperExamples,
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<crate::error::ParseError> for Failure {
    fn from(e: crate::error::ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

type CliResult = Result<String, Failure>;

/// Runs one invocation, writing the rendered result to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            return 1;
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Verification(report)) => {
            let _ = writeln!(out, "{report}");
            let _ = writeln!(err, "error: reference examples do not verify");
            2
        }
    }
}

fn var_table(cli: &Cli, texts: &[&str]) -> Result<VarTable, Failure> {
    Ok(match &cli.vars {
        Some(list) => VarTable::from_list(list)?,
        None => VarTable::infer(texts)?,
    })
}

fn generator_and_ell(cli: &Cli, f: &str, ell: &str) -> Result<(Polynomial, LinearForm), Failure> {
    let vars = var_table(cli, &[f, ell])?;
    Ok((parse_poly(f, &vars)?, parse_linear_form(ell, &vars)?))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Whitespace-separated integer rows, one per line. Blank lines and `#` comments are skipped.
pub fn parse_matrix_file(text: &str) -> Result<RankMatrix, Error> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| {
                    Error::InvalidPartition(format!(
                        "line {}: `{t}` is not a natural number",
                        lineno + 1
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    RankMatrix::from_rows(rows)
}

/// One `<F> ; <l>` entry per line; `#` starts a comment. Without `;` the
/// linear form defaults to the first variable.
pub fn parse_pool_file(
    text: &str,
    vars: Option<&VarTable>,
) -> Result<Vec<(Polynomial, LinearForm)>, Error> {
    let entries: Vec<(&str, Option<&str>)> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| match l.split_once(';') {
            Some((f, ell)) => (f.trim(), Some(ell.trim())),
            None => (l, None),
        })
        .collect();
    let vars = match vars {
        Some(v) => v.clone(),
        None => {
            let texts: Vec<&str> = entries
                .iter()
                .flat_map(|(f, ell)| std::iter::once(*f).chain(*ell))
                .collect();
            VarTable::infer(&texts)?
        }
    };
    entries
        .into_iter()
        .map(|(f, ell)| {
            let f = parse_poly(f, &vars)?;
            let ell = match ell {
                Some(text) => parse_linear_form(text, &vars)?,
                None => LinearForm::coordinate(vars.len(), 0),
            };
            Ok((f, ell))
        })
        .collect()
}

fn jordan_json(data: &JordanData) -> serde_json::Value {
    serde_json::to_value(data).expect("serializable")
}

fn verification_report(json_out: bool) -> (String, bool) {
    let results = corpus::verify_all();
    let ok = results.iter().all(|a| a.passed);
    if json_out {
        let rows: Vec<_> = results
            .iter()
            .map(|a| json!({"instance": a.instance, "assertion": a.what, "passed": a.passed, "value": a.detail}))
            .collect();
        return (to_json(&json!({"passed": ok, "assertions": rows})), ok);
    }
    let mut lines: Vec<String> = results
        .iter()
        .map(|a| {
            format!(
                "{} {} :: {} ({})",
                if a.passed { "PASS" } else { "FAIL" },
                a.instance,
                a.what,
                a.detail
            )
        })
        .collect();
    let failed = results.iter().filter(|a| !a.passed).count();
    lines.push(format!("{} assertions, {} failed", results.len(), failed));
    (lines.join("\n"), ok)
}

fn dispatch(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Hilbert { generator } => {
            let vars = var_table(cli, &[generator])?;
            let h = hilbert(&parse_poly(generator, &vars)?)?;
            Ok(if cli.json {
                to_json(&json!({ "hilbert": h }))
            } else {
                h.to_string()
            })
        }
        Command::RankMatrix { generator, ell } => {
            let (f, l) = generator_and_ell(cli, generator, ell)?;
            let data = analyze(&f, &l)?;
            Ok(if cli.json {
                to_json(&jordan_json(&data))
            } else {
                data.rank_matrix.to_string()
            })
        }
        Command::Jordan { generator, ell } => {
            let (f, l) = generator_and_ell(cli, generator, ell)?;
            let data = analyze(&f, &l)?;
            Ok(if cli.json {
                to_json(&jordan_json(&data))
            } else {
                data.jordan_type.to_string()
            })
        }
        Command::Jdt { generator, ell } => {
            let (f, l) = generator_and_ell(cli, generator, ell)?;
            let data = analyze(&f, &l)?;
            Ok(if cli.json {
                to_json(&jordan_json(&data))
            } else {
                format!("{}\n{}", data.jordan_degree_type, data.jdt_matrix)
            })
        }
        Command::Lefschetz { generator, ell } => {
            let (f, l) = generator_and_ell(cli, generator, ell)?;
            let data = analyze(&f, &l)?;
            let h = &data.hilbert;
            let p = &data.jordan_type;
            let wlp = wlp_witness(p, h)?;
            let slp = slp_witness(p, h)?;
            let conj = conjugate(h);
            if cli.json {
                let mut v = jordan_json(&data);
                let obj = v.as_object_mut().expect("object");
                obj.insert("sperner".into(), json!(sperner(h)));
                obj.insert("conjugate".into(), json!(conj));
                obj.insert("wlp_witness".into(), json!(wlp));
                obj.insert("slp_witness".into(), json!(slp));
                return Ok(to_json(&v));
            }
            Ok(format!(
                "hilbert: {h}\njordan type: {p}\nsperner: {}\nconjugate: {conj}\nwlp witness: {wlp} ({} parts)\nslp witness: {slp}",
                sperner(h),
                p.len()
            ))
        }
        Command::CheckRankMatrix { file } => {
            let m = parse_matrix_file(&read_file(file)?)?;
            let report = check_rank_matrix(&m);
            let text = if cli.json {
                to_json(&report)
            } else {
                report.to_string()
            };
            if report.passed {
                Ok(text)
            } else {
                Err(Failure::Input(text))
            }
        }
        Command::Codim2Jdt { jordan_type, socle } => {
            let p: Partition = jordan_type.parse()?;
            let s = jdt_from_jordan_type(&p, *socle)?;
            if cli.json {
                let m = rank_matrix_from_jordan_type(&p, *socle)?;
                let j = jdt_matrix(&m)?;
                return Ok(to_json(&json!({
                    "hilbert": m.hilbert(),
                    "rank_matrix": m,
                    "jdt_matrix": j,
                    "jordan_type": p,
                    "jordan_degree_type": s,
                })));
            }
            Ok(s.to_string())
        }
        Command::Realize { file, max_trials } => {
            let target = parse_matrix_file(&read_file(file)?)?;
            let vars = match &cli.vars {
                Some(list) => VarTable::from_list(list)?,
                None => VarTable::new(&["X", "Y", "Z"])?,
            };
            let cfg = SearchConfig {
                rng_seed: cli.seed,
                max_total_trials: *max_trials,
                ..SearchConfig::default()
            };
            let result = realize(&target, vars.len(), &cfg);
            match result.outcome {
                RealizeOutcome::Found(f) => {
                    let text = f.render(vars.names());
                    Ok(if cli.json {
                        to_json(&json!({"found": true, "generator": text, "trials": result.trials}))
                    } else {
                        text
                    })
                }
                RealizeOutcome::Exhausted { deepest_layer } => Err(Failure::Input(format!(
                    "no generator found after {} trials ({} layers fixed at best)",
                    result.trials, deepest_layer
                ))),
                RealizeOutcome::InvalidTarget(report) => {
                    Err(Failure::Input(format!("invalid target\n{report}")))
                }
            }
        }
        Command::Collide { pool } => {
            let vars = match &cli.vars {
                Some(list) => Some(VarTable::from_list(list)?),
                None => None,
            };
            let entries = parse_pool_file(&read_file(pool)?, vars.as_ref())?;
            let found = find_collisions(&entries, Grouping::default())?;
            if cli.json {
                return Ok(to_json(&found));
            }
            if found.is_empty() {
                return Ok(format!("no collisions among {} entries", entries.len()));
            }
            Ok(found
                .iter()
                .map(|c| {
                    format!(
                        "#{} ~ #{}: jordan type {}\n  {}\n  {}",
                        c.first + 1,
                        c.second + 1,
                        c.jordan_type,
                        c.first_jdt,
                        c.second_jdt
                    )
                })
                .collect::<Vec<_>>()
                .join("\n"))
        }
        Command::VerifyPaperExamples => {
            let (text, ok) = verification_report(cli.json);
            if ok {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
    }
}
