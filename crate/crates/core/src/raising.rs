//! Raising operators `[i j]` and the closure set `Ω(α)`.
//!
//! An operator is identified by the tuple it produces from its source. Its
//! length (the number of elementary `[i i+1]` factors in a minimal word) is a
//! function of that tuple alone: each elementary step raises the weighted sum
//! `Σ_j j·κ_j` by exactly one.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::partition::{Partition, PartitionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RaisingError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("[{} {}] does not act on a tuple of length {len}", index + 1, index + 2)]
    IndexOutOfRange { index: usize, len: usize },
    #[error("[{} {}] would make part {} negative", index + 1, index + 2, index + 1)]
    NegativePart { index: usize },
    #[error("image {image} reached at depth {depth} but has weighted length {length}")]
    InconsistentLength { image: Partition, depth: u32, length: u32 },
}

/// The elementary operator `[i i+1]` with 0-based `i`: decrement part `i`,
/// increment part `i + 1`.
pub fn apply_raising(i: usize, kappa: &Partition) -> Result<Partition, RaisingError> {
    if i + 1 >= kappa.len() {
        return Err(RaisingError::IndexOutOfRange { index: i, len: kappa.len() });
    }
    let mut parts = kappa.parts().to_vec();
    parts[i] = parts[i].checked_sub(1).ok_or(RaisingError::NegativePart { index: i })?;
    parts[i + 1] += 1;
    Ok(Partition::new(parts))
}

/// A member of `Ω(α)`: its image `φ(α)` and length `l(φ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RaisingOperator {
    pub result: Partition,
    pub length: u32,
}

impl RaisingOperator {
    pub fn is_identity(&self) -> bool {
        self.length == 0
    }
}

/// `Σ_j (j+1)·(image_j - source_j)`; the minimal word length for images
/// reachable by elementary raises.
pub fn weighted_length(source: &Partition, image: &Partition) -> i64 {
    source
        .parts()
        .iter()
        .zip(image.parts())
        .enumerate()
        .map(|(j, (&a, &b))| (j as i64 + 1) * (b as i64 - a as i64))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaSet {
    source: Partition,
    elements: Vec<RaisingOperator>,
}

impl OmegaSet {
    pub fn source(&self) -> &Partition {
        &self.source
    }

    /// Identity first, then breadth-first discovery order.
    pub fn elements(&self) -> &[RaisingOperator] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, RaisingOperator> {
        self.elements.iter()
    }
}

impl<'a> IntoIterator for &'a OmegaSet {
    type Item = &'a RaisingOperator;
    type IntoIter = std::slice::Iter<'a, RaisingOperator>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// `Ω(α)` for strict `α`: closure of `{Id}` under "if the image has
/// consecutive parts `a, a - 2`, apply `[i i+1]` to it".
pub fn omega_set(alpha: &Partition) -> Result<OmegaSet, RaisingError> {
    alpha.require_strict()?;
    let mut depth: HashMap<Partition, u32> = HashMap::from([(alpha.clone(), 0)]);
    let mut elements = vec![RaisingOperator { result: alpha.clone(), length: 0 }];
    let mut queue = VecDeque::from([alpha.clone()]);

    while let Some(image) = queue.pop_front() {
        let d = depth[&image];
        for i in 0..image.len().saturating_sub(1) {
            if image[i] != image[i + 1] + 2 {
                continue;
            }
            let next = apply_raising(i, &image)?;
            if depth.contains_key(&next) {
                continue;
            }
            let length = weighted_length(alpha, &next) as u32;
            if length != d + 1 {
                return Err(RaisingError::InconsistentLength { image: next, depth: d + 1, length });
            }
            depth.insert(next.clone(), d + 1);
            elements.push(RaisingOperator { result: next.clone(), length });
            queue.push_back(next);
        }
    }
    Ok(OmegaSet { source: alpha.clone(), elements })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(v: [u32; N]) -> Partition {
        Partition::from(v)
    }

    #[test]
    fn elementary_raises() {
        let k = p([6, 4, 3, 1]);
        assert_eq!(apply_raising(0, &k).unwrap(), p([5, 5, 3, 1]));
        assert_eq!(apply_raising(2, &k).unwrap(), p([6, 4, 2, 2]));
        let via = apply_raising(1, &apply_raising(0, &p([3, 1, 0])).unwrap()).unwrap();
        assert_eq!(via, p([2, 1, 1]));
        assert!(apply_raising(3, &k).is_err());
        assert!(apply_raising(0, &p([0, 4])).is_err());
    }

    #[test]
    fn omega_example() {
        let om = omega_set(&p([6, 4, 3, 1])).unwrap();
        let mut got: Vec<(Partition, u32)> = om.iter().map(|r| (r.result.clone(), r.length)).collect();
        got.sort();
        let mut expected = vec![
            (p([6, 4, 3, 1]), 0), // Id
            (p([5, 5, 3, 1]), 1), // [1 2]
            (p([5, 4, 4, 1]), 2), // [1 3]
            (p([6, 3, 3, 2]), 2), // [2 4]
            (p([6, 4, 2, 2]), 1), // [3 4]
            (p([5, 5, 2, 2]), 2), // [1 2][3 4]
        ];
        expected.sort();
        assert_eq!(got, expected);
        assert!(om.elements()[0].is_identity());
    }

    #[test]
    fn omega_trivial_cases() {
        assert_eq!(omega_set(&p([1, 0])).unwrap().len(), 1);
        let om = omega_set(&p([2, 0])).unwrap();
        let got: Vec<_> = om.iter().map(|r| (r.result.clone(), r.length)).collect();
        assert_eq!(got, vec![(p([2, 0]), 0), (p([1, 1]), 1)]);
        assert_eq!(omega_set(&p([7])).unwrap().len(), 1);
        assert!(omega_set(&p([2, 2])).is_err());
    }

    #[test]
    fn weighted_length_of_long_raise() {
        // [1 3] moves one unit two places
        assert_eq!(weighted_length(&p([3, 1, 0]), &p([2, 1, 1])), 2);
    }
}
