//! Exact identity checks between the pattern-side formulas and the
//! brute-force oracle, driven over a grid of partitions.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::oracle::{self, Deform};
use crate::partition::{self, Partition};
use crate::poly::{Param, Polynomial};
use crate::raising;
use crate::tokuyama::{self, FormulaError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Main,
    Recursive,
    Tokuyama,
    Stanley,
    Monomial,
    Raising,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Main, Suite::Recursive, Suite::Tokuyama, Suite::Stanley, Suite::Monomial, Suite::Raising];

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Main => "main",
            Suite::Recursive => "recursive",
            Suite::Tokuyama => "tokuyama",
            Suite::Stanley => "stanley",
            Suite::Monomial => "monomial",
            Suite::Raising => "raising",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "main" => Suite::Main,
            "recursive" => Suite::Recursive,
            "tokuyama" => Suite::Tokuyama,
            "stanley" => Suite::Stanley,
            "monomial" => Suite::Monomial,
            "raising" => Suite::Raising,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s:?}")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub lambda: Partition,
    pub identity: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub cases: Vec<CaseResult>,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub wall_time: f64,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} {}", c.lambda, c.identity));
            if let Some(e) = &c.error {
                out.push_str(&format!(" ({e})"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "suite {}: {} cases, {} passed, {} failed in {:.3}s\n",
            self.suite, self.total, self.passed, self.failed, self.wall_time
        ));
        out
    }
}

/// All weakly decreasing λ of length `1..=n_max` with `λ_1 <= part_max`,
/// by length, then lexicographic-descending.
pub fn lambda_grid(n_max: usize, part_max: u32) -> Vec<Partition> {
    (1..=n_max).flat_map(|n| partition::weakly_decreasing(n, part_max)).collect()
}

/// Lazily computed values shared by the identities for one λ.
struct Context<'a> {
    lambda: &'a Partition,
    hl: OnceCell<Result<Polynomial, FormulaError>>,
    schur: OnceCell<Result<Polynomial, FormulaError>>,
    closed: OnceCell<Result<Polynomial, FormulaError>>,
    vq: OnceCell<Polynomial>,
}

type Value = Result<Polynomial, FormulaError>;

impl<'a> Context<'a> {
    fn new(lambda: &'a Partition) -> Self {
        Context { lambda, hl: OnceCell::new(), schur: OnceCell::new(), closed: OnceCell::new(), vq: OnceCell::new() }
    }

    fn n(&self) -> usize {
        self.lambda.len()
    }

    fn hl(&self) -> Value {
        self.hl.get_or_init(|| Ok(oracle::hall_littlewood(self.lambda)?)).clone()
    }

    fn schur(&self) -> Value {
        self.schur.get_or_init(|| Ok(oracle::schur(self.lambda)?)).clone()
    }

    fn closed(&self) -> Value {
        self.closed.get_or_init(|| tokuyama::theorem_rhs_closed(self.lambda)).clone()
    }

    fn vq(&self) -> Polynomial {
        self.vq.get_or_init(|| oracle::weyl_denominator(self.n(), Deform::Q)).clone()
    }

    fn vq_hl(&self) -> Value {
        Ok(self.vq() * self.hl()?)
    }

    fn vq_schur(&self) -> Value {
        Ok(self.vq() * self.schur()?)
    }
}

fn check(lambda: &Partition, identity: impl Into<String>, lhs: Value, rhs: Value) -> CaseResult {
    let identity = identity.into();
    match (lhs, rhs) {
        (Ok(a), Ok(b)) => CaseResult { lambda: lambda.clone(), identity, passed: a == b, error: None },
        (Err(e), _) | (_, Err(e)) => {
            CaseResult { lambda: lambda.clone(), identity, passed: false, error: Some(e.to_string()) }
        }
    }
}

/// Closed form equals `v_n(x;q)·HL_λ`.
pub fn check_main(lambda: &Partition) -> Vec<CaseResult> {
    let cx = Context::new(lambda);
    vec![check(lambda, "closed = v_n(q)*HL", cx.closed(), cx.vq_hl())]
}

pub fn check_recursive(lambda: &Partition) -> Vec<CaseResult> {
    let cx = Context::new(lambda);
    vec![check(lambda, "recursive = v_n(q)*HL", tokuyama::theorem_rhs_recursive(lambda), cx.vq_hl())]
}

pub fn check_tokuyama(lambda: &Partition) -> Vec<CaseResult> {
    let cx = Context::new(lambda);
    tokuyama_cases(&cx)
}

pub fn check_stanley(lambda: &Partition) -> Vec<CaseResult> {
    let cx = Context::new(lambda);
    stanley_cases(&cx)
}

pub fn check_monomial(lambda: &Partition) -> Vec<CaseResult> {
    let cx = Context::new(lambda);
    monomial_cases(&cx)
}

pub fn check_raising(lambda: &Partition) -> Vec<CaseResult> {
    let cx = Context::new(lambda);
    raising_cases(&cx)
}

fn tokuyama_cases(cx: &Context) -> Vec<CaseResult> {
    let lambda = cx.lambda;
    let tok = tokuyama::tokuyama_rhs(lambda);
    vec![
        check(lambda, "tokuyama = v_n(q)*s", tok.clone(), cx.vq_schur()),
        check(lambda, "closed|t=0 = tokuyama", cx.closed().map(|p| p.substitute_param(Param::T, 0)), tok),
        check(lambda, "tokuyama_recursive = v_n(q)*s", tokuyama::tokuyama_recursive_rhs(lambda), cx.vq_schur()),
    ]
}

fn stanley_cases(cx: &Context) -> Vec<CaseResult> {
    let lambda = cx.lambda;
    let n = cx.n();
    let hl_minus1 = cx.hl().map(|p| p.substitute_param(Param::T, -1));
    let mut out = vec![check(
        lambda,
        "closed|q=-1,t=0 = v_n(-1)*s",
        cx.closed().map(|p| p.substitute_param(Param::Q, -1).substitute_param(Param::T, 0)),
        cx.schur().map(|s| oracle::weyl_denominator_at(n, -1) * s),
    )];
    if lambda.is_strictly_decreasing() {
        out.push(check(lambda, "stanley = HL|t=-1", tokuyama::stanley_rhs(lambda), hl_minus1.clone()));
    }
    out.push(check(
        lambda,
        "stanley_filtered = x^rho*HL|t=-1",
        tokuyama::stanley_filtered_rhs(lambda),
        hl_minus1.map(|h| oracle::x_rho(n) * h),
    ));
    out
}

fn monomial_cases(cx: &Context) -> Vec<CaseResult> {
    let lambda = cx.lambda;
    let m = oracle::monomial_symmetric(lambda).map_err(FormulaError::from);
    vec![
        check(lambda, "HL|t=1 = m", cx.hl().map(|p| p.substitute_param(Param::T, 1)), m.clone()),
        check(
            lambda,
            "closed|t=1 = v_n(q)*m",
            cx.closed().map(|p| p.substitute_param(Param::T, 1)),
            m.map(|m| cx.vq() * m),
        ),
    ]
}

/// Indices `i` (0-based) with `λ_i = λ_{i+1} + 1`.
pub fn raising_positions(lambda: &Partition) -> Vec<usize> {
    (0..lambda.len().saturating_sub(1)).filter(|&i| lambda[i] == lambda[i + 1] + 1).collect()
}

fn raising_cases(cx: &Context) -> Vec<CaseResult> {
    let lambda = cx.lambda;
    raising_positions(lambda)
        .into_iter()
        .map(|i| {
            let raised = raising::apply_raising(i, lambda).expect("λ_i >= 1");
            let lhs = oracle::hall_littlewood(&raised).map_err(FormulaError::from);
            let rhs = cx.hl().map(|h| Polynomial::param(cx.n(), Param::T) * h);
            check(lambda, format!("HL([{} {}]λ) = t*HL", i + 1, i + 2), lhs, rhs)
        })
        .collect()
}

/// Every identity of `suite` for one λ.
pub fn check_lambda(lambda: &Partition, suite: Suite) -> Vec<CaseResult> {
    let cx = Context::new(lambda);
    let mut out = Vec::new();
    if suite.includes(Suite::Main) {
        out.push(check(lambda, "closed = v_n(q)*HL", cx.closed(), cx.vq_hl()));
    }
    if suite.includes(Suite::Recursive) {
        out.push(check(lambda, "recursive = v_n(q)*HL", tokuyama::theorem_rhs_recursive(lambda), cx.vq_hl()));
    }
    if suite.includes(Suite::Tokuyama) {
        out.extend(tokuyama_cases(&cx));
    }
    if suite.includes(Suite::Stanley) {
        out.extend(stanley_cases(&cx));
    }
    if suite.includes(Suite::Monomial) {
        out.extend(monomial_cases(&cx));
    }
    if suite.includes(Suite::Raising) {
        out.extend(raising_cases(&cx));
    }
    out
}

/// Runs `suite` over `lambdas` in parallel; cases come back in input order.
pub fn verify_lambdas(lambdas: &[Partition], suite: Suite) -> VerifyReport {
    let start = Instant::now();
    let cases: Vec<CaseResult> =
        lambdas.par_iter().map(|l| check_lambda(l, suite)).collect::<Vec<_>>().into_iter().flatten().collect();
    let passed = cases.iter().filter(|c| c.passed).count();
    VerifyReport {
        suite,
        total: cases.len(),
        passed,
        failed: cases.len() - passed,
        cases,
        wall_time: start.elapsed().as_secs_f64(),
    }
}

pub fn run_verify(n_max: usize, part_max: u32, suite: Suite) -> VerifyReport {
    verify_lambdas(&lambda_grid(n_max, part_max), suite)
}
