//! The `hlgt` command line: `compute`, `patterns`, `verify`, `bench`.
//!
//! Exit codes: 0 on success, 1 when a verification identity fails, 2 on a
//! usage or validation error.

pub mod bench;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::gt;
use crate::oracle;
use crate::partition::Partition;
use crate::poly::Polynomial;
use crate::tokuyama;

pub use verify::{Suite, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hlgt", version, about = "Hall-Littlewood polynomials from Gelfand-Tsetlin patterns")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// HL_λ(x;t) by symmetrizing over S_n
    Oracle,
    /// v_n(x;q)·HL_λ as a sum over strict GT patterns
    Closed,
    /// v_n(x;q)·HL_λ one row at a time
    Recursive,
    /// v_n(x;q)·s_λ by Tokuyama's formula
    Tokuyama,
    /// HL_λ(x;-1) over strict patterns with top row λ (λ strict)
    Stanley,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one polynomial.
    Compute {
        /// Comma-separated parts with explicit trailing zeros, e.g. 1,0,0
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_enum, default_value = "oracle")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List GT patterns with a given top row.
    Patterns {
        #[arg(long, value_parser = parse_partition)]
        top: Partition,
        /// Only strict patterns.
        #[arg(long)]
        strict: bool,
        /// Also print the per-row Σ_φ t^l(φ)·M coefficients (needs --strict).
        #[arg(long)]
        stats: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the identities over all λ with length ≤ n and λ_1 ≤ max-part.
    Verify {
        #[arg(long = "n")]
        n_max: usize,
        #[arg(long = "max-part")]
        part_max: u32,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the oracle against the closed form; CSV goes to --out or stdout.
    Bench {
        /// Comma-separated list of n.
        #[arg(long = "n", value_delimiter = ',', required = true)]
        ns: Vec<usize>,
        #[arg(long = "max-part")]
        part_max: u32,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: crate::partition::PartitionError| e.to_string())
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| e.to_string())
        }
    }
}

fn execute(cmd: Command) -> Result<i32, String> {
    match cmd {
        Command::Compute { lambda, mode, format, out } => {
            let p = compute(&lambda, mode)?;
            let text = match format {
                Format::Text => format!("{p}\n"),
                Format::Json => format!("{}\n", p.to_json()),
            };
            emit(&text, out.as_ref())?;
            Ok(EXIT_OK)
        }
        Command::Patterns { top, strict, stats, format, out } => {
            if stats && !strict {
                return Err("--stats needs --strict (Ω is defined for strict rows)".into());
            }
            let text = patterns(&top, strict, stats, format)?;
            emit(&text, out.as_ref())?;
            Ok(EXIT_OK)
        }
        Command::Verify { n_max, part_max, suite, format, out } => {
            let cap = oracle::oracle_nmax();
            if n_max == 0 || n_max > cap {
                return Err(format!("--n must be between 1 and the oracle cap {cap}"));
            }
            let report = verify::run_verify(n_max, part_max, suite);
            let text = match format {
                Format::Text => report.render_text(),
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?),
            };
            emit(&text, out.as_ref())?;
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Bench { ns, part_max, repeats, out } => {
            let cap = oracle::oracle_nmax();
            if let Some(&bad) = ns.iter().find(|&&n| n == 0 || n > cap) {
                return Err(format!("n = {bad} outside 1..={cap}"));
            }
            if repeats == 0 {
                return Err("--repeats must be positive".into());
            }
            let rows = bench::run_bench(&ns, part_max, repeats).map_err(|e| e.to_string())?;
            let mut csv = Vec::new();
            bench::write_csv(&rows, &mut csv).map_err(|e| e.to_string())?;
            let csv = String::from_utf8(csv).expect("utf-8 csv");
            match out {
                Some(path) => {
                    emit(&bench::render_table(&rows), None)?;
                    emit(&csv, Some(&path))?;
                }
                None => emit(&format!("{}\n{csv}", bench::render_table(&rows)), None)?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// The polynomial printed by `compute`.
pub fn compute(lambda: &Partition, mode: Mode) -> Result<Polynomial, String> {
    let r = match mode {
        Mode::Oracle => {
            lambda.require_weak().map_err(|e| e.to_string())?;
            oracle::hall_littlewood(lambda).map_err(Into::into)
        }
        Mode::Closed => tokuyama::theorem_rhs_closed(lambda),
        Mode::Recursive => tokuyama::theorem_rhs_recursive(lambda),
        Mode::Tokuyama => tokuyama::tokuyama_rhs(lambda),
        Mode::Stanley => tokuyama::stanley_rhs(lambda),
    };
    r.map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct PatternRecord {
    rows: Vec<Partition>,
    m: Vec<u32>,
    left: usize,
    right: usize,
    special: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    row_coefficients: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficient: Option<String>,
}

/// The listing printed by `patterns`.
pub fn patterns(top: &Partition, strict: bool, stats: bool, format: Format) -> Result<String, String> {
    let pats = gt::enumerate_gt_patterns(top, strict).map_err(|e| e.to_string())?;
    let mut records = Vec::with_capacity(pats.len());
    for t in &pats {
        let s = t.classic_stats();
        let (row_coefficients, coefficient) = if stats {
            let rows = t
                .rows()
                .windows(2)
                .map(|pair| tokuyama::row_coefficient(&pair[0], &pair[1]))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let product = rows.iter().fold(Polynomial::one(0), |acc, c| acc * c);
            (Some(rows.iter().map(ToString::to_string).collect()), Some(product.to_string()))
        } else {
            (None, None)
        };
        records.push(PatternRecord {
            rows: t.rows().to_vec(),
            m: t.weight_m(),
            left: s.left,
            right: s.right,
            special: s.special,
            row_coefficients,
            coefficient,
        });
    }
    if format == Format::Json {
        return serde_json::to_string_pretty(&records).map(|s| s + "\n").map_err(|e| e.to_string());
    }
    let mut out = String::new();
    for (k, (t, r)) in pats.iter().zip(&records).enumerate() {
        out.push_str(&format!("pattern {}\n{t}", k + 1));
        let m = Partition::new(r.m.clone());
        out.push_str(&format!("m(T) = {m}  l = {}  r = {}  z = {}\n", r.left, r.right, r.special));
        if let (Some(rows), Some(c)) = (&r.row_coefficients, &r.coefficient) {
            for (i, row) in rows.iter().enumerate() {
                out.push_str(&format!("row {}: {row}\n", i + 1));
            }
            out.push_str(&format!("coefficient: {c}\n"));
        }
        out.push('\n');
    }
    let noun = if pats.len() == 1 { "pattern" } else { "patterns" };
    out.push_str(&format!("{} {noun}\n", pats.len()));
    Ok(out)
}
