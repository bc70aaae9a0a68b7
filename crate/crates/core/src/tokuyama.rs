//! Pattern-side formulas: the tridiagonal determinant `M(α;μ)`, the
//! closed-form and recursive expansions of `v_n(x;q)·HL_λ(x;t)`, Tokuyama's
//! formula for `v_n(x;q)·s_λ(x)`, and the Stanley-type sums at `t = -1`.
//!
//! Throughout, `v_n(x;q) = ∏_{i<j} (x_i - q x_j)` and `α = λ + ρ_n`.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::gt::{self, GtError, GtPattern, LeftProperty, RightProperty};
use crate::oracle::{self, Deform, OracleError};
use crate::partition::{Partition, PartitionError};
use crate::poly::{Monomial, Param, Polynomial};
use crate::raising::{self, RaisingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Gt(#[from] GtError),
    #[error(transparent)]
    Raising(#[from] RaisingError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("partition must have at least one part")]
    Empty,
}

fn q0() -> Polynomial {
    Polynomial::param(0, Param::Q)
}

/// `M(α;μ)`: 1 for `α` of length one, 0 when `μ ∉ GT₂(α)`, otherwise the
/// determinant of the tridiagonal matrix with diagonal `w(μ_1..μ_{n-1})`,
/// superdiagonal 1 and subdiagonal `d(α_2..α_{n-1})`.
///
/// Evaluated bottom-up with `D_k = w(μ_k)·D_{k+1} - d(α_{k+1})·D_{k+2}`.
pub fn det_m(alpha: &Partition, mu: &Partition) -> Result<Polynomial, FormulaError> {
    alpha.require_strict()?;
    if alpha.is_empty() {
        return Err(FormulaError::Empty);
    }
    if !gt::in_gt2(alpha, mu) {
        return Ok(Polynomial::zero(0));
    }
    let m = mu.len();
    if m == 0 {
        return Ok(Polynomial::one(0));
    }
    // below[k] = determinant of the trailing block starting at row k
    let mut below_next = Polynomial::one(0); // D_{m}
    let mut below = gt::w_unchecked(alpha, mu, m - 1); // D_{m-1}
    for k in (0..m - 1).rev() {
        let d = gt::d_unchecked(alpha, mu, k + 1);
        let next = gt::w_unchecked(alpha, mu, k) * &below - d * below_next;
        below_next = below;
        below = next;
    }
    Ok(below)
}

/// `Σ_{φ ∈ Ω(lower)} t^{l(φ)}·M(upper; φ(lower))` for a strict `lower`.
pub fn row_coefficient(upper: &Partition, lower: &Partition) -> Result<Polynomial, FormulaError> {
    let omega = raising::omega_set(lower)?;
    let mut acc = Polynomial::zero(0);
    for phi in &omega {
        let m = det_m(upper, &phi.result)?;
        if !m.is_zero() {
            acc = acc + m * Polynomial::param_pow(0, Param::T, phi.length);
        }
    }
    Ok(acc)
}

fn alpha_of(lambda: &Partition) -> Result<Partition, FormulaError> {
    if lambda.is_empty() {
        return Err(FormulaError::Empty);
    }
    lambda.require_weak()?;
    Ok(lambda.plus_rho())
}

/// One strict pattern's contribution to the closed-form sum.
#[derive(Debug, Clone, Serialize)]
pub struct PatternTerm {
    pub pattern: GtPattern,
    /// `Σ_φ t^{l(φ)} M(r_i; φ(r_{i+1}))` for each consecutive row pair.
    pub row_coefficients: Vec<Polynomial>,
    /// Product of the row coefficients.
    pub coefficient: Polynomial,
    pub weight: Vec<u32>,
}

impl PatternTerm {
    pub fn to_polynomial(&self) -> Polynomial {
        self.coefficient.times_x_monomial(&self.weight)
    }
}

/// Per-pattern data behind [`theorem_rhs_closed`], in enumeration order.
pub fn closed_pattern_terms(lambda: &Partition) -> Result<Vec<PatternTerm>, FormulaError> {
    let alpha = alpha_of(lambda)?;
    let patterns = gt::enumerate_gt_patterns(&alpha, true)?;
    patterns
        .into_par_iter()
        .map(|pattern| {
            let row_coefficients = pattern
                .rows()
                .windows(2)
                .map(|pair| row_coefficient(&pair[0], &pair[1]))
                .collect::<Result<Vec<_>, _>>()?;
            let coefficient = row_coefficients.iter().fold(Polynomial::one(0), |acc, c| acc * c);
            let weight = pattern.weight_m();
            Ok(PatternTerm { pattern, row_coefficients, coefficient, weight })
        })
        .collect()
}

/// Closed form of `v_n(x;q)·HL_λ(x;t)` as a sum over strict GT patterns with
/// top row `λ + ρ` of `∏_i (Σ_{φ ∈ Ω(r_{i+1})} t^{l(φ)} M(r_i; φ(r_{i+1}))) · x^{m(T)}`.
pub fn theorem_rhs_closed(lambda: &Partition) -> Result<Polynomial, FormulaError> {
    let n = lambda.len();
    let terms = closed_pattern_terms(lambda)?;
    Ok(terms.iter().map(PatternTerm::to_polynomial).fold(Polynomial::zero(n), |acc, p| acc + p))
}

/// `x_1^{e}·ζ(inner)` where `inner` lives in `n - 1` variables.
fn lift_first(inner: &Polynomial, e: u32, n: usize) -> Polynomial {
    let shifted = inner.shift_variables(1, n).expect("shift into n variables");
    let mut x = vec![0; n];
    x[0] = e;
    shifted.mul_monomial(&Monomial::new(x, 0, 0))
}

/// Recursive form: `Σ_{μ ∈ GT₂(α)} M(α;μ)·x_1^{|α|-|μ|}·ζ(v_{n-1}(x;q)·HL_{μ-ρ})`,
/// over every `μ` including non-strict ones (whose `μ - ρ` has ascents).
pub fn theorem_rhs_recursive(lambda: &Partition) -> Result<Polynomial, FormulaError> {
    let alpha = alpha_of(lambda)?;
    let n = alpha.len();
    if n == 1 {
        return Ok(Polynomial::x_monomial(alpha.parts()));
    }
    let v = oracle::weyl_denominator(n - 1, Deform::Q);
    let mut acc = Polynomial::zero(n);
    for mu in gt::enumerate_gt2(&alpha)? {
        let m = det_m(&alpha, &mu)?;
        if m.is_zero() {
            continue;
        }
        let kappa = mu.minus_rho().expect("μ - ρ is nonnegative for μ ∈ GT₂(λ + ρ)");
        let inner = &v * &oracle::hall_littlewood(&kappa)?;
        let lifted = lift_first(&inner, alpha.size() - mu.size(), n);
        acc = acc + lifted * m.times_x_monomial(&vec![0; n]);
    }
    Ok(acc)
}

/// Tokuyama: `Σ_{T strict, top λ+ρ} (1-q)^{z(T)}·(-q)^{l(T)}·x^{m(T)}`.
pub fn tokuyama_rhs(lambda: &Partition) -> Result<Polynomial, FormulaError> {
    let alpha = alpha_of(lambda)?;
    let n = alpha.len();
    let one_minus_q = Polynomial::one(0) - q0();
    let mut acc = Polynomial::zero(n);
    for pattern in gt::enumerate_gt_patterns(&alpha, true)? {
        let s = pattern.classic_stats();
        let c = one_minus_q.pow(s.special as u32) * (-q0()).pow(s.left as u32);
        acc = acc + c.times_x_monomial(&pattern.weight_m());
    }
    Ok(acc)
}

/// Tokuyama over one row at a time:
/// `Σ_{μ ∈ GT₂(α) strict} (-q)^{#left}(1-q)^{#special}·x_1^{|α|-|μ|}·ζ(v_{n-1}(x;q)·s_{μ-ρ})`.
pub fn tokuyama_recursive_rhs(lambda: &Partition) -> Result<Polynomial, FormulaError> {
    let alpha = alpha_of(lambda)?;
    let n = alpha.len();
    if n == 1 {
        return Ok(Polynomial::x_monomial(alpha.parts()));
    }
    let v = oracle::weyl_denominator(n - 1, Deform::Q);
    let one_minus_q = Polynomial::one(0) - q0();
    let mut acc = Polynomial::zero(n);
    for mu in gt::enumerate_gt2(&alpha)? {
        if !mu.is_strictly_decreasing() {
            continue;
        }
        let left = (0..mu.len()).filter(|&i| mu[i] == alpha[i]).count() as u32;
        let special = (0..mu.len()).filter(|&i| mu[i] != alpha[i] && mu[i] != alpha[i + 1]).count() as u32;
        let c = (-q0()).pow(left) * one_minus_q.pow(special);
        let kappa = mu.minus_rho().expect("strict μ below λ + ρ");
        let inner = &v * &oracle::schur(&kappa)?;
        let lifted = lift_first(&inner, alpha.size() - mu.size(), n);
        acc = acc + lifted * c.times_x_monomial(&vec![0; n]);
    }
    Ok(acc)
}

/// Stanley: `Σ_{T strict, top λ} 2^{z(T)}·x^{m(T)}` for strict `λ`.
pub fn stanley_rhs(lambda: &Partition) -> Result<Polynomial, FormulaError> {
    if lambda.is_empty() {
        return Err(FormulaError::Empty);
    }
    lambda.require_strict()?;
    let mut acc = Polynomial::zero(lambda.len());
    for pattern in gt::enumerate_gt_patterns(lambda, true)? {
        let z = pattern.classic_stats().special as u32;
        let c = Polynomial::constant(0, BigInt::from(2u32).pow(z));
        acc = acc + c.times_x_monomial(&pattern.weight_m());
    }
    Ok(acc)
}

/// True when no entry is `l` and no two neighbours in a row are `r` then `al`.
pub fn avoids_left_and_r_al(pattern: &GtPattern) -> bool {
    pattern.rows().windows(2).all(|pair| {
        let (upper, lower) = (&pair[0], &pair[1]);
        let labels: Vec<_> =
            (0..lower.len()).map(|i| gt::entry_properties(upper, lower, i).expect("strict pattern")).collect();
        labels.iter().all(|l| l.left != LeftProperty::Left)
            && labels.windows(2).all(|w| !(w[0].right == RightProperty::Right && w[1].left == LeftProperty::AlmostLeft))
    })
}

/// `Σ ∏ w(τ)|_{q=0,t=-1}·x^{m(T)}` over strict patterns with top row `λ + ρ`
/// that avoid `l` entries and adjacent `r`, `al` pairs. Equals `x^ρ·HL_λ(x;-1)`.
pub fn stanley_filtered_rhs(lambda: &Partition) -> Result<Polynomial, FormulaError> {
    let alpha = alpha_of(lambda)?;
    let n = alpha.len();
    let mut acc = Polynomial::zero(n);
    for pattern in gt::enumerate_gt_patterns(&alpha, true)? {
        if !avoids_left_and_r_al(&pattern) {
            continue;
        }
        let mut c = Polynomial::one(0);
        for pair in pattern.rows().windows(2) {
            for i in 0..pair[1].len() {
                let w = gt::stat_w(&pair[0], &pair[1], i)?;
                c = c * w.substitute_param(Param::Q, 0).substitute_param(Param::T, -1);
            }
        }
        acc = acc + c.times_x_monomial(&pattern.weight_m());
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(v: [u32; N]) -> Partition {
        Partition::from(v)
    }
    fn q(n: usize) -> Polynomial {
        Polynomial::param(n, Param::Q)
    }
    fn t(n: usize) -> Polynomial {
        Polynomial::param(n, Param::T)
    }
    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }
    fn one(n: usize) -> Polynomial {
        Polynomial::one(n)
    }

    #[test]
    fn det_worked_example() {
        let alpha = p([3, 1, 0]);
        let expected = one(0) - q(0) + t(0) - q(0) * t(0) + q(0) * t(0) * t(0);
        assert_eq!(det_m(&alpha, &p([2, 0])).unwrap(), expected);
        // raw determinant for the raised row, before the t^{l(φ)} factor
        assert_eq!(det_m(&alpha, &p([1, 1])).unwrap(), -(q(0) * t(0)));
        assert_eq!(det_m(&p([5]), &Partition::empty()).unwrap(), one(0));
    }

    #[test]
    fn det_outside_gt2_is_zero() {
        assert!(det_m(&p([3, 1, 0]), &p([4, 0])).unwrap().is_zero());
        assert!(det_m(&p([3, 1, 0]), &p([2])).unwrap().is_zero());
        assert!(det_m(&p([5]), &p([1])).unwrap().is_zero());
        assert!(det_m(&p([3, 3]), &p([3])).is_err());
    }

    #[test]
    fn worked_example_row_coefficients() {
        let row1 = row_coefficient(&p([3, 1, 0]), &p([2, 0])).unwrap();
        assert_eq!(row1, (one(0) - q(0)) * (one(0) + t(0)));
        let row2 = row_coefficient(&p([2, 0]), &p([1])).unwrap();
        assert_eq!(row2, one(0) - q(0));
    }

    #[test]
    fn closed_small_cases() {
        assert_eq!(theorem_rhs_closed(&p([0])).unwrap(), one(1));
        // v_2·HL_(0,0) with HL_(0,0) = 1 + t
        let expected = (one(2) + t(2)) * (x(2, 1) - q(2) * x(2, 2));
        assert_eq!(theorem_rhs_closed(&p([0, 0])).unwrap(), expected);
        assert_eq!(theorem_rhs_recursive(&p([0, 0])).unwrap(), expected);
        assert_eq!(theorem_rhs_recursive(&p([0])).unwrap(), one(1));
        assert_eq!(theorem_rhs_closed(&p([3])).unwrap(), x(1, 1).pow(3));
    }

    #[test]
    fn tokuyama_small_cases() {
        let v2 = x(2, 1) - q(2) * x(2, 2);
        assert_eq!(tokuyama_rhs(&p([0, 0])).unwrap(), v2);
        assert_eq!(tokuyama_recursive_rhs(&p([0, 0])).unwrap(), v2);
        assert_eq!(tokuyama_rhs(&p([0])).unwrap(), one(1));
        assert_eq!(tokuyama_recursive_rhs(&p([0])).unwrap(), one(1));
    }

    #[test]
    fn stanley_small_cases() {
        assert_eq!(stanley_rhs(&p([1, 0])).unwrap(), x(2, 1) + x(2, 2));
        assert_eq!(stanley_rhs(&p([0])).unwrap(), one(1));
        let expected = x(2, 1).pow(2) + Polynomial::constant(2, 2) * x(2, 1) * x(2, 2) + x(2, 2).pow(2);
        assert_eq!(stanley_rhs(&p([2, 0])).unwrap(), expected);
        assert!(stanley_rhs(&p([1, 1])).is_err());

        assert_eq!(stanley_filtered_rhs(&p([0])).unwrap(), one(1));
        assert_eq!(stanley_filtered_rhs(&p([1, 0])).unwrap(), x(2, 1) * (x(2, 1) + x(2, 2)));
    }

    #[test]
    fn rejects_bad_lambda() {
        assert!(theorem_rhs_closed(&p([0, 1])).is_err());
        assert!(theorem_rhs_closed(&Partition::empty()).is_err());
        assert!(tokuyama_rhs(&p([1, 2, 0])).is_err());
        assert!(stanley_filtered_rhs(&p([0, 1])).is_err());
    }
}
