//! Exact sparse polynomials over ℤ in `x_1..x_n` and the two deformation
//! parameters `q` and `t`.
//!
//! A [`Polynomial`] is an immutable map from [`Monomial`] to a nonzero
//! [`BigInt`] coefficient. Terms are kept in one fixed order, so structural
//! equality is polynomial equality and every rendering is deterministic.
//!
//! Term order: x-part first, graded-lex descending on `(x_1..x_n)`; ties on
//! the x-part are broken by the `(q, t)` part in ascending total degree, with
//! higher powers of `q` first inside a degree. So `(1-q)(1+t)·x_1` renders as
//! `x1 - q*x1 + t*x1 - q*t*x1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    VarCountMismatch(usize, usize),
    #[error("not a permutation of 1..={0}: {1:?}")]
    NotAPermutation(usize, Vec<usize>),
    #[error("variable index {index} out of range for {n_vars} variables")]
    IndexOutOfRange { index: usize, n_vars: usize },
    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { got: usize, expected: usize },
    #[error("nonzero remainder dividing by (x{i} - x{j})")]
    NonzeroRemainder { i: usize, j: usize },
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

/// The two deformation parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    Q,
    T,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Q => f.write_str("q"),
            Param::T => f.write_str("t"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    x: Vec<u32>,
    q: u32,
    t: u32,
}

impl Monomial {
    pub fn new(x: Vec<u32>, q: u32, t: u32) -> Self {
        Monomial { x, q, t }
    }

    pub fn one(n_vars: usize) -> Self {
        Monomial { x: vec![0; n_vars], q: 0, t: 0 }
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.x
    }

    pub fn q_exp(&self) -> u32 {
        self.q
    }

    pub fn t_exp(&self) -> u32 {
        self.t
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.q == 0 && self.t == 0 && self.x.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            q: self.q + other.q,
            t: self.t + other.t,
        }
    }
}

impl Ord for Monomial {
    /// Position in the canonical term order: `Less` means "printed earlier".
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .x_degree()
            .cmp(&self.x_degree())
            .then_with(|| other.x.cmp(&self.x))
            .then_with(|| (self.q + self.t).cmp(&(other.q + other.t)))
            .then_with(|| other.q.cmp(&self.q))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `n_vars` x-variables and `q`, `t`.
///
/// `n_vars == 0` is allowed and denotes a polynomial in `q`, `t` only; the
/// statistics `w`, `d` and the determinants built from them live there.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n_vars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(n_vars: usize) -> Self {
        Polynomial { n_vars, terms: BTreeMap::new() }
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, 1)
    }

    pub fn constant(n_vars: usize, c: impl Into<BigInt>) -> Self {
        Self::term(n_vars, c, Monomial::one(n_vars))
    }

    /// `c · m`, panicking if `m` has the wrong number of x-exponents.
    pub fn term(n_vars: usize, c: impl Into<BigInt>, m: Monomial) -> Self {
        assert_eq!(m.x.len(), n_vars, "monomial arity");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { n_vars, terms }
    }

    /// The single variable `x_i`, 1-based.
    pub fn var(n_vars: usize, i: usize) -> Self {
        assert!((1..=n_vars).contains(&i), "x{i} out of range");
        let mut x = vec![0; n_vars];
        x[i - 1] = 1;
        Self::term(n_vars, 1, Monomial::new(x, 0, 0))
    }

    /// `x^exps`.
    pub fn x_monomial(exps: &[u32]) -> Self {
        Self::term(exps.len(), 1, Monomial::new(exps.to_vec(), 0, 0))
    }

    pub fn param(n_vars: usize, p: Param) -> Self {
        Self::param_pow(n_vars, p, 1)
    }

    pub fn param_pow(n_vars: usize, p: Param, k: u32) -> Self {
        let m = match p {
            Param::Q => Monomial::new(vec![0; n_vars], k, 0),
            Param::T => Monomial::new(vec![0; n_vars], 0, k),
        };
        Self::term(n_vars, 1, m)
    }

    /// Builds from arbitrary `(coefficient, monomial)` pairs, collecting like terms.
    pub fn from_terms<I>(n_vars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (BigInt, Monomial)>,
    {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (c, m) in terms {
            if m.x.len() != n_vars {
                return Err(PolyError::ExponentLength { got: m.x.len(), expected: n_vars });
            }
            accumulate(&mut map, m, c);
        }
        Ok(Polynomial { n_vars, terms: map })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_arity(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial { n_vars: self.n_vars, terms })
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_arity(other)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Ok(Polynomial { n_vars: self.n_vars, terms })
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n_vars);
        }
        Polynomial { n_vars: self.n_vars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(self.n_vars), |acc, _| &acc * self)
    }

    /// Multiplies by the monomial `x^exps · q^qe · t^te` without touching coefficients.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        assert_eq!(m.x.len(), self.n_vars, "monomial arity");
        Polynomial { n_vars: self.n_vars, terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// Reinterprets a `q,t`-only polynomial as a coefficient of `x^exps`.
    pub fn times_x_monomial(&self, exps: &[u32]) -> Polynomial {
        assert_eq!(self.n_vars, 0, "times_x_monomial expects a q,t polynomial");
        Polynomial {
            n_vars: exps.len(),
            terms: self.terms.iter().map(|(m, c)| (Monomial::new(exps.to_vec(), m.q, m.t), c.clone())).collect(),
        }
    }

    /// `σ(f)` with `σ(x_i) = x_{σ(i)}`; `sigma` is 1-based one-line notation.
    pub fn apply_permutation(&self, sigma: &[usize]) -> Result<Polynomial, PolyError> {
        let n = self.n_vars;
        let mut seen = vec![false; n];
        let ok = sigma.len() == n
            && sigma.iter().all(|&s| (1..=n).contains(&s) && !std::mem::replace(&mut seen[s - 1], true));
        if !ok {
            return Err(PolyError::NotAPermutation(n, sigma.to_vec()));
        }
        Ok(self.permute_unchecked(sigma.iter().map(|s| s - 1)))
    }

    /// Same as [`apply_permutation`](Self::apply_permutation) with a 0-based,
    /// already validated image vector.
    pub(crate) fn permute_unchecked(&self, sigma0: impl Iterator<Item = usize> + Clone) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut x = vec![0; self.n_vars];
            for (i, s) in sigma0.clone().enumerate() {
                x[s] = m.x[i];
            }
            terms.insert(Monomial::new(x, m.q, m.t), c.clone());
        }
        Polynomial { n_vars: self.n_vars, terms }
    }

    /// The shift `ζ_i`: `x_k ↦ x_{k+1}` for `k ≥ i` (1-based), landing in
    /// `new_n` variables. Slot `i` is left unused.
    pub fn shift_variables(&self, i: usize, new_n: usize) -> Result<Polynomial, PolyError> {
        if i == 0 || i > self.n_vars + 1 {
            return Err(PolyError::IndexOutOfRange { index: i, n_vars: self.n_vars });
        }
        if new_n < self.n_vars + 1 {
            return Err(PolyError::VarCountMismatch(self.n_vars + 1, new_n));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut x = vec![0; new_n];
                for (k, &e) in m.x.iter().enumerate() {
                    let dst = if k + 1 >= i { k + 1 } else { k };
                    x[dst] = e;
                }
                (Monomial::new(x, m.q, m.t), c.clone())
            })
            .collect();
        Ok(Polynomial { n_vars: new_n, terms })
    }

    /// Exact quotient by `(x_i - x_j)`, 1-based, via synthetic division in
    /// `x_i` at `x_i = x_j`.
    pub fn exact_divide_binomial(&self, i: usize, j: usize) -> Result<Polynomial, PolyError> {
        let n = self.n_vars;
        for idx in [i, j] {
            if idx == 0 || idx > n {
                return Err(PolyError::IndexOutOfRange { index: idx, n_vars: n });
            }
        }
        if i == j {
            return Err(PolyError::NonzeroRemainder { i, j });
        }
        let (xi, xj) = (i - 1, j - 1);

        // p = Σ_k a_k x_i^k with a_k free of x_i.
        let mut by_degree: BTreeMap<u32, BTreeMap<Monomial, BigInt>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut m0 = m.clone();
            let k = std::mem::replace(&mut m0.x[xi], 0);
            by_degree.entry(k).or_default().insert(m0, c.clone());
        }
        let Some(&top) = by_degree.keys().next_back() else {
            return Ok(Polynomial::zero(n));
        };

        // b_{k-1} = a_k + x_j b_k, from the top down; remainder a_0 + x_j b_0.
        let mut quotient = BTreeMap::new();
        let mut carry: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for k in (0..=top).rev() {
            let mut b: BTreeMap<Monomial, BigInt> = carry
                .into_iter()
                .map(|(mut m, c)| {
                    m.x[xj] += 1;
                    (m, c)
                })
                .collect();
            if let Some(a) = by_degree.get(&k) {
                for (m, c) in a {
                    accumulate(&mut b, m.clone(), c.clone());
                }
            }
            if k == 0 {
                if !b.is_empty() {
                    return Err(PolyError::NonzeroRemainder { i, j });
                }
                break;
            }
            for (m, c) in &b {
                let mut mq = m.clone();
                mq.x[xi] = k - 1;
                quotient.insert(mq, c.clone());
            }
            carry = b;
        }
        Ok(Polynomial { n_vars: n, terms: quotient })
    }

    /// Replaces `q` or `t` by an integer constant.
    pub fn substitute_param(&self, which: Param, value: i64) -> Polynomial {
        let v = BigInt::from(value);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = match which {
                Param::Q => std::mem::replace(&mut m2.q, 0),
                Param::T => std::mem::replace(&mut m2.t, 0),
            };
            accumulate(&mut terms, m2, c * Pow::pow(&v, e));
        }
        Polynomial { n_vars: self.n_vars, terms }
    }

    /// The `q,t` polynomial multiplying `x^x_exps` (result has `n_vars == 0`).
    pub fn coefficient_of(&self, x_exps: &[u32]) -> Result<Polynomial, PolyError> {
        if x_exps.len() != self.n_vars {
            return Err(PolyError::ExponentLength { got: x_exps.len(), expected: self.n_vars });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.x == x_exps)
            .map(|(m, c)| (Monomial::new(Vec::new(), m.q, m.t), c.clone()))
            .collect();
        Ok(Polynomial { n_vars: 0, terms })
    }

    /// Value at `x_1 = … = x_n = 1`, as a `q,t` polynomial.
    pub fn at_all_ones(&self) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            accumulate(&mut terms, Monomial::new(Vec::new(), m.q, m.t), c.clone());
        }
        Polynomial { n_vars: 0, terms }
    }

    /// The constant term if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_constant().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("polynomial JSON")
    }

    pub fn from_json(s: &str) -> Result<Polynomial, PolyError> {
        let raw: PolyJson = serde_json::from_str(s).map_err(|e| PolyError::Json(e.to_string()))?;
        raw.try_into()
    }

    fn same_arity(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.n_vars == other.n_vars {
            Ok(())
        } else {
            Err(PolyError::VarCountMismatch(self.n_vars, other.n_vars))
        }
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { n_vars: self.n_vars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    /// Panics on an empty iterator, since the arity is unknown.
    fn sum<I: Iterator<Item = Polynomial>>(mut iter: I) -> Polynomial {
        let first = iter.next().expect("sum of no polynomials");
        iter.fold(first, |acc, p| &acc + &p)
    }
}

impl fmt::Display for Polynomial {
    /// `x1 - q*x2`, `x1*x2 + t*x1*x2`, `2*x1^2*x3`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            let abs = c.abs();
            if !abs.is_one() || m.is_constant() {
                factors.push(abs.to_string());
            }
            let mut push = |name: String, e: u32| match e {
                0 => {}
                1 => factors.push(name),
                _ => factors.push(format!("{name}^{e}")),
            };
            push("q".into(), m.q);
            push("t".into(), m.t);
            for (i, &e) in m.x.iter().enumerate() {
                push(format!("x{}", i + 1), e);
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    c: String,
    x: Vec<u32>,
    q: u32,
    t: u32,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n_vars: usize,
    terms: Vec<TermJson>,
}

impl From<&Polynomial> for PolyJson {
    fn from(p: &Polynomial) -> Self {
        PolyJson {
            n_vars: p.n_vars,
            terms: p.terms.iter().map(|(m, c)| TermJson { c: c.to_string(), x: m.x.clone(), q: m.q, t: m.t }).collect(),
        }
    }
}

impl TryFrom<PolyJson> for Polynomial {
    type Error = PolyError;

    fn try_from(raw: PolyJson) -> Result<Self, PolyError> {
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                let c: BigInt = t.c.parse().map_err(|_| PolyError::Json(format!("bad coefficient {:?}", t.c)))?;
                Ok((c, Monomial::new(t.x, t.q, t.t)))
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        Polynomial::from_terms(raw.n_vars, terms)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        raw.try_into().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }
    fn q(n: usize) -> Polynomial {
        Polynomial::param(n, Param::Q)
    }
    fn t(n: usize) -> Polynomial {
        Polynomial::param(n, Param::T)
    }
    fn c(n: usize, v: i64) -> Polynomial {
        Polynomial::constant(n, v)
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!((&x(2, 1) + &(-&x(2, 1))).is_zero());
    }

    #[test]
    fn add_collects() {
        let a = &x(2, 1) - &(&q(2) * &x(2, 2));
        let b = &x(2, 2) - &(&q(2) * &x(2, 1));
        let expected = &(&c(2, 1) - &q(2)) * &(&x(2, 1) + &x(2, 2));
        assert_eq!(&a + &b, expected);
    }

    #[test]
    fn mul_hand_expansion() {
        let p = &(&x(2, 1) - &(&t(2) * &x(2, 2))) * &(&x(2, 1) - &x(2, 2));
        let x1 = x(2, 1);
        let x2 = x(2, 2);
        let expected = &(&(&x1 * &x1) - &(&(&c(2, 1) + &t(2)) * &(&x1 * &x2))) + &(&t(2) * &(&x2 * &x2));
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "x1^2 - x1*x2 - t*x1*x2 + t*x2^2");
        assert!((&p * &c(2, 0)).is_zero());
        assert_eq!(&p * &c(2, 1), p);
    }

    #[test]
    fn arity_mismatch_is_error() {
        assert_eq!(x(2, 1).checked_add(&x(3, 1)), Err(PolyError::VarCountMismatch(2, 3)));
        assert!(x(2, 1).checked_mul(&x(3, 1)).is_err());
    }

    #[test]
    fn permutations() {
        let p = &(&x(2, 1) * &x(2, 1)) * &x(2, 2);
        let swapped = p.apply_permutation(&[2, 1]).unwrap();
        assert_eq!(swapped, &(&x(2, 2) * &x(2, 2)) * &x(2, 1));
        assert_eq!(p.apply_permutation(&[1, 2]).unwrap(), p);

        let r = &x(3, 1) - &(&q(3) * &x(3, 3));
        let cyc = r.apply_permutation(&[2, 3, 1]).unwrap();
        assert_eq!(cyc, &x(3, 2) - &(&q(3) * &x(3, 1)));

        assert!(r.apply_permutation(&[1, 1, 2]).is_err());
        assert!(r.apply_permutation(&[1, 2]).is_err());
        assert!(r.apply_permutation(&[0, 1, 2]).is_err());
    }

    #[test]
    fn shifts() {
        let p = &x(2, 1) * &(&x(2, 2) * &x(2, 2));
        assert_eq!(p.shift_variables(1, 3).unwrap(), &x(3, 2) * &(&x(3, 3) * &x(3, 3)));
        let p = &x(2, 1) * &x(2, 2);
        assert_eq!(p.shift_variables(3, 3).unwrap(), &x(3, 1) * &x(3, 2));
        assert!(p.shift_variables(0, 3).is_err());
        assert!(p.shift_variables(4, 4).is_err());
        assert!(p.shift_variables(1, 2).is_err());
    }

    #[test]
    fn binomial_division() {
        let x1 = x(2, 1);
        let x2 = x(2, 2);
        let diff_sq = &(&x1 * &x1) - &(&x2 * &x2);
        assert_eq!(diff_sq.exact_divide_binomial(1, 2).unwrap(), &x1 + &x2);

        let p = &(&(&x1 * &x1) * &x2) - &(&x1 * &(&x2 * &x2));
        assert_eq!(p.exact_divide_binomial(1, 2).unwrap(), &x1 * &x2);
        // dividing by (x2 - x1) flips the sign
        assert_eq!(p.exact_divide_binomial(2, 1).unwrap(), -&(&x1 * &x2));

        assert_eq!(x1.exact_divide_binomial(1, 2), Err(PolyError::NonzeroRemainder { i: 1, j: 2 }));
        assert!(Polynomial::zero(2).exact_divide_binomial(1, 2).unwrap().is_zero());
    }

    #[test]
    fn substitutions() {
        let one_minus_q = &c(1, 1) - &q(1);
        let p = &one_minus_q * &(&c(1, 1) + &t(1));
        assert_eq!(p.substitute_param(Param::T, 0), one_minus_q);

        let p = &one_minus_q * &(&c(1, 1) - &t(1));
        assert_eq!(p.substitute_param(Param::T, -1), &c(1, 2) * &one_minus_q);

        let p = &(-&q(1)) - &(&q(1) * &t(1));
        assert_eq!(p.substitute_param(Param::Q, -1), &c(1, 1) + &t(1));
    }

    #[test]
    fn coefficients() {
        let p = &x(2, 1) - &(&q(2) * &x(2, 2));
        assert_eq!(p.coefficient_of(&[1, 0]).unwrap(), c(0, 1));
        assert_eq!(p.coefficient_of(&[0, 1]).unwrap(), -q(0));
        assert!(p.coefficient_of(&[1, 1]).unwrap().is_zero());
        assert!(p.coefficient_of(&[1]).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!((&x(2, 1) - &(&q(2) * &x(2, 2))).to_string(), "x1 - q*x2");
        let p = &(&c(2, 1) + &t(2)) * &(&x(2, 1) * &x(2, 2));
        assert_eq!(p.to_string(), "x1*x2 + t*x1*x2");
        let w = &(&c(0, 1) - &q(0)) * &(&c(0, 1) + &t(0));
        assert_eq!(w.to_string(), "1 - q + t - q*t");
        assert_eq!(Polynomial::zero(3).to_string(), "0");
        assert_eq!(c(0, -3).to_string(), "-3");
    }

    #[test]
    fn json_shape() {
        let p = &x(2, 1) - &(&c(2, 3) * &(&q(2) * &x(2, 2)));
        assert_eq!(
            p.to_json(),
            r#"{"n_vars":2,"terms":[{"c":"1","x":[1,0],"q":0,"t":0},{"c":"-3","x":[0,1],"q":1,"t":0}]}"#
        );
        assert_eq!(Polynomial::from_json(&p.to_json()).unwrap(), p);
        assert!(Polynomial::from_json(r#"{"n_vars":2,"terms":[{"c":"1","x":[1],"q":0,"t":0}]}"#).is_err());
        assert!(Polynomial::from_json(r#"{"n_vars":1,"terms":[{"c":"one","x":[1],"q":0,"t":0}]}"#).is_err());
    }

    #[test]
    fn big_coefficients_survive() {
        let big = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let p = Polynomial::constant(1, big.clone());
        let sq = &p * &p;
        assert_eq!(sq.as_constant().unwrap(), &big * &big);
        assert_eq!(Polynomial::from_json(&sq.to_json()).unwrap(), sq);
    }
}
