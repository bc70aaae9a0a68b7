use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("rho(0) is undefined")]
    EmptyRho,
    #[error("{0} is not weakly decreasing")]
    NotWeaklyDecreasing(Partition),
    #[error("{0} is not strictly decreasing")]
    NotStrictlyDecreasing(Partition),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
}

/// A finite tuple of nonnegative parts. Trailing zeros are significant:
/// `(1)` and `(1,0,0)` are different partitions.
///
/// Monotonicity is not enforced; raised tuples and `μ - ρ` may have ascents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn require_weak(&self) -> Result<(), PartitionError> {
        if self.is_weakly_decreasing() {
            Ok(())
        } else {
            Err(PartitionError::NotWeaklyDecreasing(self.clone()))
        }
    }

    pub fn require_strict(&self) -> Result<(), PartitionError> {
        if self.is_strictly_decreasing() {
            Ok(())
        } else {
            Err(PartitionError::NotStrictlyDecreasing(self.clone()))
        }
    }

    /// Component-wise sum.
    pub fn add(&self, other: &Partition) -> Result<Partition, PartitionError> {
        if self.len() != other.len() {
            return Err(PartitionError::LengthMismatch(self.len(), other.len()));
        }
        Ok(Partition(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// `self + ρ_n` where `n` is the length.
    pub fn plus_rho(&self) -> Partition {
        let n = self.len() as u32;
        Partition(self.0.iter().enumerate().map(|(i, &p)| p + n - 1 - i as u32).collect())
    }

    /// `self - ρ_n`, or `None` if some part would go negative.
    pub fn minus_rho(&self) -> Option<Partition> {
        let n = self.len() as u32;
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| p.checked_sub(n - 1 - i as u32))
            .collect::<Option<Vec<_>>>()
            .map(Partition)
    }

    pub fn concat(&self, other: &Partition) -> Partition {
        Partition(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Drops the first `k` parts.
    pub fn tail(&self, k: usize) -> Partition {
        Partition(self.0[k.min(self.len())..].to_vec())
    }
}

/// `ρ_n = (n-1, …, 1, 0)`.
pub fn rho(n: usize) -> Result<Partition, PartitionError> {
    if n == 0 {
        return Err(PartitionError::EmptyRho);
    }
    Ok(Partition((0..n as u32).rev().collect()))
}

impl Index<usize> for Partition {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for Partition {
    fn from(v: Vec<u32>) -> Self {
        Partition(v)
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    fn from(v: [u32; N]) -> Self {
        Partition(v.to_vec())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Comma-separated parts, optionally parenthesized: `1,0,0` or `(1,0,0)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Err(PartitionError::Parse(s.to_string()));
        }
        inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map(Partition)
            .map_err(|_| PartitionError::Parse(s.to_string()))
    }
}

/// All weakly decreasing partitions of exactly `len` parts with largest part
/// at most `max_part`, in lexicographic-descending order.
pub fn weakly_decreasing(len: usize, max_part: u32) -> Vec<Partition> {
    fn go(len: usize, bound: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if prefix.len() == len {
            out.push(Partition(prefix.clone()));
            return;
        }
        for v in (0..=bound).rev() {
            prefix.push(v);
            go(len, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max_part, &mut Vec::with_capacity(len), &mut out);
    out
}
