//! Gelfand–Tsetlin patterns and the per-entry statistics on them.
//!
//! Indices in this module are 0-based positions *within a row*. An entry
//! `lower[p]` of a row sits below `upper[p]` (its upper-left parent) and
//! `upper[p + 1]` (its upper-right parent), and interleaving means
//! `upper[p] >= lower[p] >= upper[p + 1]`.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::partition::{Partition, PartitionError};
use crate::poly::{Param, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GtError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("row {row} has length {got}, expected {expected}")]
    RowLength { row: usize, got: usize, expected: usize },
    #[error("rows {row} and {} do not interleave", row + 1)]
    NotInterleaving { row: usize },
    #[error("a pattern needs at least one row")]
    NoRows,
    #[error("index {index} out of range for a row pair of lengths {upper}/{lower}")]
    IndexOutOfRange { index: usize, upper: usize, lower: usize },
    #[error("entry {lower} below {upper} is both left and right")]
    LeftAndRight { upper: Partition, lower: Partition },
}

/// Validated triangular array; row `k` has `n - k` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GtPattern {
    rows: Vec<Partition>,
}

impl GtPattern {
    pub fn new(rows: Vec<Partition>) -> Result<Self, GtError> {
        let n = rows.first().ok_or(GtError::NoRows)?.len();
        if n == 0 || rows.len() != n {
            return Err(GtError::RowLength { row: 0, got: rows.len(), expected: n });
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != n - k {
                return Err(GtError::RowLength { row: k, got: row.len(), expected: n - k });
            }
            row.require_weak()?;
        }
        for (k, pair) in rows.windows(2).enumerate() {
            if !interleaves(&pair[0], &pair[1]) {
                return Err(GtError::NotInterleaving { row: k });
            }
        }
        Ok(GtPattern { rows })
    }

    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    pub fn top(&self) -> &Partition {
        &self.rows[0]
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn is_strict(&self) -> bool {
        self.rows.iter().all(Partition::is_strictly_decreasing)
    }

    /// `m_k = |r_k| - |r_{k+1}|`, and `m_n = |r_n|`.
    pub fn weight_m(&self) -> Vec<u32> {
        let sizes: Vec<u32> = self.rows.iter().map(Partition::size).collect();
        (0..sizes.len()).map(|k| sizes[k] - sizes.get(k + 1).copied().unwrap_or(0)).collect()
    }

    /// Counts of left-leaning, right-leaning and special entries below the
    /// top row. An entry equal to both parents counts for both `l` and `r`.
    pub fn classic_stats(&self) -> ClassicStats {
        let mut s = ClassicStats::default();
        for pair in self.rows.windows(2) {
            let (upper, lower) = (pair[0].parts(), pair[1].parts());
            for (p, &v) in lower.iter().enumerate() {
                let left = v == upper[p];
                let right = v == upper[p + 1];
                s.left += left as usize;
                s.right += right as usize;
                s.special += (!left && !right) as usize;
            }
        }
        s
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows[0].parts().iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for (k, row) in self.rows.iter().enumerate() {
            let pad = " ".repeat(k * (width + 1) / 2);
            let cells = row.parts().iter().map(|v| format!("{v:>width$}")).join(" ");
            writeln!(f, "{pad}{cells}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClassicStats {
    pub left: usize,
    pub right: usize,
    pub special: usize,
}

fn interleaves(upper: &Partition, lower: &Partition) -> bool {
    lower.len() + 1 == upper.len() && lower.parts().iter().enumerate().all(|(p, &v)| upper[p] >= v && v >= upper[p + 1])
}

/// Every row that can sit directly below `upper` (weakly decreasing),
/// lexicographic-descending.
fn rows_below(upper: &Partition) -> Vec<Partition> {
    if upper.len() <= 1 {
        return vec![Partition::empty()];
    }
    upper.parts().windows(2).map(|w| (w[1]..=w[0]).rev()).multi_cartesian_product().map(Partition::new).collect()
}

/// `GT₂(α)`: all `μ` one part shorter with `α_i >= μ_i >= α_{i+1}`, in
/// lexicographic-descending order. For `α` of length one this is `[∅]`.
pub fn enumerate_gt2(alpha: &Partition) -> Result<Vec<Partition>, GtError> {
    alpha.require_strict()?;
    if alpha.is_empty() {
        return Err(GtError::NoRows);
    }
    Ok(rows_below(alpha))
}

/// Membership in `GT₂(α)` for an arbitrary tuple.
pub fn in_gt2(alpha: &Partition, mu: &Partition) -> bool {
    if alpha.len() == 1 {
        return mu.is_empty();
    }
    interleaves(alpha, mu)
}

/// All GT patterns with the given top row, depth-first with each row in
/// lexicographic-descending order. With `strict_only`, only strict patterns.
pub fn enumerate_gt_patterns(top: &Partition, strict_only: bool) -> Result<Vec<GtPattern>, GtError> {
    if top.is_empty() {
        return Err(GtError::NoRows);
    }
    if strict_only {
        top.require_strict()?;
    } else {
        top.require_weak()?;
    }
    let mut out = Vec::new();
    let mut rows = vec![top.clone()];
    extend_patterns(&mut rows, strict_only, &mut out);
    Ok(out)
}

fn extend_patterns(rows: &mut Vec<Partition>, strict_only: bool, out: &mut Vec<GtPattern>) {
    let last = rows.last().expect("nonempty");
    if last.len() == 1 {
        out.push(GtPattern { rows: rows.clone() });
        return;
    }
    for next in rows_below(last) {
        if strict_only && !next.is_strictly_decreasing() {
            continue;
        }
        rows.push(next);
        extend_patterns(rows, strict_only, out);
        rows.pop();
    }
}

/// Relation of an entry to its upper-left parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LeftProperty {
    /// equal to the parent
    Left,
    /// one less than the parent
    AlmostLeft,
    Special,
}

/// Relation of an entry to its upper-right parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RightProperty {
    /// equal to the parent
    Right,
    /// one more than the parent
    AlmostRight,
    Special,
}

impl LeftProperty {
    fn of(entry: u32, parent: u32) -> Self {
        if entry == parent {
            LeftProperty::Left
        } else if entry + 1 == parent {
            LeftProperty::AlmostLeft
        } else {
            LeftProperty::Special
        }
    }

    /// `g`: `l ↦ -q`, `al ↦ t`, `s ↦ 0`.
    pub fn weight(self) -> Polynomial {
        match self {
            LeftProperty::Left => -Polynomial::param(0, Param::Q),
            LeftProperty::AlmostLeft => Polynomial::param(0, Param::T),
            LeftProperty::Special => Polynomial::zero(0),
        }
    }
}

impl RightProperty {
    fn of(entry: u32, parent: u32) -> Self {
        if entry == parent {
            RightProperty::Right
        } else if entry == parent + 1 {
            RightProperty::AlmostRight
        } else {
            RightProperty::Special
        }
    }

    /// `g`: `r ↦ 1`, `ar ↦ -qt`, `s ↦ 0`.
    pub fn weight(self) -> Polynomial {
        match self {
            RightProperty::Right => Polynomial::one(0),
            RightProperty::AlmostRight => -(Polynomial::param(0, Param::Q) * Polynomial::param(0, Param::T)),
            RightProperty::Special => Polynomial::zero(0),
        }
    }
}

impl fmt::Display for LeftProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LeftProperty::Left => "l",
            LeftProperty::AlmostLeft => "al",
            LeftProperty::Special => "s",
        })
    }
}

impl fmt::Display for RightProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RightProperty::Right => "r",
            RightProperty::AlmostRight => "ar",
            RightProperty::Special => "s",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PropertyLabel {
    pub left: LeftProperty,
    pub right: RightProperty,
}

impl fmt::Display for PropertyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

fn check_pair(upper: &Partition, lower: &Partition) -> Result<(), GtError> {
    upper.require_strict()?;
    if lower.len() + 1 != upper.len() {
        return Err(GtError::RowLength { row: 1, got: lower.len(), expected: upper.len().saturating_sub(1) });
    }
    Ok(())
}

/// `(p_l, p_r)` of `lower[i]` relative to the strict row `upper`.
pub fn entry_properties(upper: &Partition, lower: &Partition, i: usize) -> Result<PropertyLabel, GtError> {
    check_pair(upper, lower)?;
    if i >= lower.len() {
        return Err(GtError::IndexOutOfRange { index: i, upper: upper.len(), lower: lower.len() });
    }
    Ok(label(upper, lower, i))
}

fn label(upper: &Partition, lower: &Partition, i: usize) -> PropertyLabel {
    PropertyLabel { left: LeftProperty::of(lower[i], upper[i]), right: RightProperty::of(lower[i], upper[i + 1]) }
}

/// `w = c + g(p_l) + g(p_r)`, where `c = (1-t)(1-q)` unless the entry is
/// `l` or `r`.
pub fn stat_w(upper: &Partition, lower: &Partition, i: usize) -> Result<Polynomial, GtError> {
    let lab = entry_properties(upper, lower, i)?;
    w_of_label(lab).ok_or_else(|| GtError::LeftAndRight { upper: upper.clone(), lower: lower.clone() })
}

pub(crate) fn w_of_label(lab: PropertyLabel) -> Option<Polynomial> {
    let c = match (lab.left, lab.right) {
        (LeftProperty::Left, RightProperty::Right) => return None,
        (LeftProperty::Left, _) | (_, RightProperty::Right) => Polynomial::zero(0),
        _ => {
            let one = Polynomial::one(0);
            (&one - &Polynomial::param(0, Param::T)) * (&one - &Polynomial::param(0, Param::Q))
        }
    };
    Some(c + lab.left.weight() + lab.right.weight())
}

/// `d` of the interior entry `upper[j]` (`1 <= j <= len - 2`):
/// `g(p_r(lower[j-1])) · g(p_l(lower[j]))`.
pub fn stat_d(upper: &Partition, lower: &Partition, j: usize) -> Result<Polynomial, GtError> {
    check_pair(upper, lower)?;
    if j == 0 || j + 1 >= upper.len() {
        return Err(GtError::IndexOutOfRange { index: j, upper: upper.len(), lower: lower.len() });
    }
    Ok(d_unchecked(upper, lower, j))
}

pub(crate) fn d_unchecked(upper: &Partition, lower: &Partition, j: usize) -> Polynomial {
    let right = label(upper, lower, j - 1).right;
    let left = label(upper, lower, j).left;
    right.weight() * left.weight()
}

pub(crate) fn w_unchecked(upper: &Partition, lower: &Partition, i: usize) -> Polynomial {
    w_of_label(label(upper, lower, i)).expect("(l,r) below a strict row")
}
