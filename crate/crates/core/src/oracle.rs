//! Brute-force symmetric functions straight from the symmetrization
//! definitions: every `n!` permutation is visited.
//!
//! `Σ_σ σ(f / Δ_n)` is computed as `(Σ_σ sgn(σ)·σ(f)) / Δ_n`, so all
//! arithmetic stays in the polynomial ring and each division by a Vandermonde
//! factor is exact. A nonzero remainder means the numerator was not
//! antisymmetric and is reported as an error.

use itertools::Itertools;
use thiserror::Error;

use crate::partition::{Partition, PartitionError};
use crate::poly::{Monomial, Param, PolyError, Polynomial};

/// Default bound on `n` for `n!` enumeration.
pub const DEFAULT_ORACLE_NMAX: usize = 6;

/// Environment variable overriding [`DEFAULT_ORACLE_NMAX`].
pub const ORACLE_NMAX_ENV: &str = "GT_ORACLE_NMAX";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("n = {n} exceeds the oracle cap of {cap} (set {ORACLE_NMAX_ENV} to raise it)")]
    TooManyVariables { n: usize, cap: usize },
    #[error("an oracle polynomial needs at least one variable")]
    NoVariables,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("internal inconsistency: {0}")]
    Poly(#[from] PolyError),
}

/// Current cap on `n`, from [`ORACLE_NMAX_ENV`] if set and parseable.
pub fn oracle_nmax() -> usize {
    std::env::var(ORACLE_NMAX_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_ORACLE_NMAX)
}

fn check_n(n: usize) -> Result<(), OracleError> {
    if n == 0 {
        return Err(OracleError::NoVariables);
    }
    let cap = oracle_nmax();
    if n > cap {
        return Err(OracleError::TooManyVariables { n, cap });
    }
    Ok(())
}

/// Which subtrahend the Weyl denominator uses: `x_i - x_j`, `x_i - q x_j`
/// or `x_i - t x_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Deform {
    None,
    Q,
    T,
}

/// `∏_{i<j} (x_i - p·x_j)` with `p ∈ {1, q, t}`.
pub fn weyl_denominator(n: usize, deform: Deform) -> Polynomial {
    assert!(n >= 1, "weyl_denominator needs n >= 1");
    let p = match deform {
        Deform::None => Polynomial::one(n),
        Deform::Q => Polynomial::param(n, Param::Q),
        Deform::T => Polynomial::param(n, Param::T),
    };
    (1..=n)
        .tuple_combinations()
        .map(|(i, j)| Polynomial::var(n, i) - &p * &Polynomial::var(n, j))
        .fold(Polynomial::one(n), |acc, f| acc * f)
}

/// Weyl denominator with an integer in place of the deformation parameter,
/// e.g. `v_n(x; -1)`.
pub fn weyl_denominator_at(n: usize, value: i64) -> Polynomial {
    weyl_denominator(n, Deform::Q).substitute_param(Param::Q, value)
}

/// Permutations of `0..n` in lexicographic order, paired with their sign.
fn signed_permutations(n: usize) -> impl Iterator<Item = (Vec<usize>, bool)> {
    (0..n).permutations(n).map(|p| {
        let inversions = p.iter().tuple_combinations().filter(|(a, b)| a > b).count();
        (p, inversions % 2 == 0)
    })
}

/// `Σ_σ sgn(σ)·σ(f)`.
pub fn antisymmetrize(f: &Polynomial) -> Polynomial {
    let n = f.n_vars();
    let mut acc = Polynomial::zero(n);
    for (sigma, even) in signed_permutations(n) {
        let image = f.permute_unchecked(sigma.iter().copied());
        acc = if even { acc + image } else { acc - image };
    }
    acc
}

/// `Σ_σ σ(f)`.
pub fn symmetrize(f: &Polynomial) -> Polynomial {
    let n = f.n_vars();
    signed_permutations(n)
        .map(|(sigma, _)| f.permute_unchecked(sigma.iter().copied()))
        .fold(Polynomial::zero(n), |acc, p| acc + p)
}

/// Divides by `Δ_n(x)` one factor `(x_i - x_j)` at a time, `(i, j)` in
/// lexicographic order.
pub fn divide_by_vandermonde(numerator: &Polynomial) -> Result<Polynomial, OracleError> {
    let n = numerator.n_vars();
    let mut q = numerator.clone();
    for (i, j) in (1..=n).tuple_combinations() {
        q = q.exact_divide_binomial(i, j)?;
    }
    Ok(q)
}

/// Schur polynomial by the bialternant formula.
pub fn schur(lambda: &Partition) -> Result<Polynomial, OracleError> {
    check_n(lambda.len())?;
    lambda.require_weak()?;
    let numerator = antisymmetrize(&Polynomial::x_monomial(lambda.plus_rho().parts()));
    divide_by_vandermonde(&numerator)
}

/// `HL_κ(x;t) = Σ_σ σ(x^κ · Δ_n(x;t) / Δ_n(x))`, without the stabilizing
/// normalization. `κ` may be any nonnegative tuple, ascents included.
pub fn hall_littlewood(kappa: &Partition) -> Result<Polynomial, OracleError> {
    let n = kappa.len();
    check_n(n)?;
    let x_kappa = Monomial::new(kappa.parts().to_vec(), 0, 0);
    let f = weyl_denominator(n, Deform::T).mul_monomial(&x_kappa);
    divide_by_vandermonde(&antisymmetrize(&f))
}

/// `m_λ = Σ_{σ ∈ S_n} σ(x^λ)`, each permutation counted (so `m_(0,0) = 2`).
pub fn monomial_symmetric(lambda: &Partition) -> Result<Polynomial, OracleError> {
    check_n(lambda.len())?;
    Ok(symmetrize(&Polynomial::x_monomial(lambda.parts())))
}

/// `x^ρ` in `n` variables.
pub fn x_rho(n: usize) -> Polynomial {
    let rho: Vec<u32> = (0..n as u32).rev().collect();
    Polynomial::x_monomial(&rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p<const N: usize>(v: [u32; N]) -> Partition {
        Partition::from(v)
    }
    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn denominators() {
        let v = weyl_denominator(2, Deform::Q);
        assert_eq!(v, x(2, 1) - Polynomial::param(2, Param::Q) * x(2, 2));
        assert_eq!(weyl_denominator(1, Deform::T), Polynomial::one(1));
        for n in 1..=4 {
            let at0 = weyl_denominator(n, Deform::T).substitute_param(Param::T, 0);
            assert_eq!(at0, x_rho(n));
            let at1 = weyl_denominator(n, Deform::Q).substitute_param(Param::Q, 1);
            assert_eq!(at1, weyl_denominator(n, Deform::None));
        }
    }

    #[test]
    fn schur_small() {
        assert_eq!(schur(&p([1, 0, 0])).unwrap(), x(3, 1) + x(3, 2) + x(3, 3));
        assert_eq!(schur(&p([0, 0, 0, 0])).unwrap(), Polynomial::one(4));
        assert_eq!(schur(&p([1, 1])).unwrap(), x(2, 1) * x(2, 2));
        assert!(schur(&p([0, 1])).is_err());
    }

    #[test]
    fn hall_littlewood_small() {
        assert_eq!(hall_littlewood(&p([1, 0])).unwrap(), x(2, 1) + x(2, 2));
        let one_plus_t = Polynomial::one(2) + Polynomial::param(2, Param::T);
        assert_eq!(hall_littlewood(&p([1, 1])).unwrap(), one_plus_t * x(2, 1) * x(2, 2));
        for n in 1..=4 {
            let hl0 = hall_littlewood(&Partition::new(vec![0; n])).unwrap();
            assert_eq!(hl0.substitute_param(Param::T, 0), Polynomial::one(n));
        }
    }

    #[test]
    fn monomial_orbit_sums() {
        assert_eq!(monomial_symmetric(&p([1, 0])).unwrap(), x(2, 1) + x(2, 2));
        assert_eq!(monomial_symmetric(&p([1, 1])).unwrap(), Polynomial::constant(2, 2) * x(2, 1) * x(2, 2));
        let m = monomial_symmetric(&p([2, 1, 0])).unwrap();
        assert_eq!(m.num_terms(), 6);
        assert!(m.terms().all(|(_, c)| *c == BigInt::from(1)));
    }

    #[test]
    fn numerators_are_antisymmetric() {
        let f = weyl_denominator(3, Deform::T).mul_monomial(&Monomial::new(vec![2, 0, 1], 0, 0));
        let num = antisymmetrize(&f);
        for swap in [[2, 1, 3], [1, 3, 2], [3, 2, 1]] {
            assert_eq!(num.apply_permutation(&swap).unwrap(), -&num);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = hall_littlewood(&Partition::new(vec![0; DEFAULT_ORACLE_NMAX + 1]));
        if std::env::var(ORACLE_NMAX_ENV).is_err() {
            assert!(matches!(err, Err(OracleError::TooManyVariables { .. })));
        }
    }
}
