//! Wall-clock comparison of the `n!` oracle against the pattern sum.

use std::io::Write;
use std::time::Instant;

use itertools::Itertools;
use serde::Serialize;

use crate::oracle::{self, Deform};
use crate::partition::{self, Partition};
use crate::poly::Polynomial;
use crate::tokuyama::{self, FormulaError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BenchMode {
    Oracle,
    Closed,
}

impl BenchMode {
    pub fn name(self) -> &'static str {
        match self {
            BenchMode::Oracle => "oracle",
            BenchMode::Closed => "closed",
        }
    }

    fn compute(self, lambda: &Partition) -> Result<Polynomial, FormulaError> {
        match self {
            BenchMode::Oracle => {
                Ok(oracle::weyl_denominator(lambda.len(), Deform::Q) * oracle::hall_littlewood(lambda)?)
            }
            BenchMode::Closed => tokuyama::theorem_rhs_closed(lambda),
        }
    }
}

/// One CSV row: `n,lambda,mode,terms,seconds`.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub n: usize,
    /// Hyphen-joined parts, e.g. `2-1-0`.
    pub lambda: String,
    pub mode: &'static str,
    pub terms: usize,
    /// Mean wall time over the repeats.
    pub seconds: f64,
}

pub fn lambda_label(lambda: &Partition) -> String {
    lambda.parts().iter().join("-")
}

/// Times both modes for every λ of each length in `ns` with `λ_1 <= part_max`.
pub fn run_bench(ns: &[usize], part_max: u32, repeats: usize) -> Result<Vec<BenchRow>, FormulaError> {
    let repeats = repeats.max(1);
    let mut rows = Vec::new();
    for &n in ns {
        for lambda in partition::weakly_decreasing(n, part_max) {
            for mode in [BenchMode::Oracle, BenchMode::Closed] {
                let mut total = 0.0;
                let mut terms = 0;
                for _ in 0..repeats {
                    let start = Instant::now();
                    let p = mode.compute(&lambda)?;
                    total += start.elapsed().as_secs_f64();
                    terms = p.num_terms();
                }
                rows.push(BenchRow {
                    n,
                    lambda: lambda_label(&lambda),
                    mode: mode.name(),
                    terms,
                    seconds: total / repeats as f64,
                });
            }
        }
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn render_table(rows: &[BenchRow]) -> String {
    let mut out = format!("{:>3}  {:<14} {:<7} {:>7} {:>12}\n", "n", "lambda", "mode", "terms", "seconds");
    for r in rows {
        out.push_str(&format!("{:>3}  {:<14} {:<7} {:>7} {:>12.6}\n", r.n, r.lambda, r.mode, r.terms, r.seconds));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_header_and_rows() {
        let rows = run_bench(&[2], 1, 1).unwrap();
        // (1,1), (1,0), (0,0) in two modes
        assert_eq!(rows.len(), 6);
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("n,lambda,mode,terms,seconds\n2,1-1,oracle,"));
        for pair in rows.chunks(2) {
            assert_eq!(pair[0].terms, pair[1].terms);
            assert!(pair.iter().all(|r| r.seconds > 0.0));
        }
    }
}
