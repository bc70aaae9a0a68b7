#![allow(dead_code)]

use hlgt::gt;
use hlgt::{Param, Partition, Polynomial};

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

pub fn q() -> Polynomial {
    Polynomial::param(0, Param::Q)
}

pub fn t() -> Polynomial {
    Polynomial::param(0, Param::T)
}

pub fn c(v: i64) -> Polynomial {
    Polynomial::constant(0, v)
}

/// Lifts a q,t polynomial into `n` x-variables.
pub fn lift(poly: &Polynomial, n: usize) -> Polynomial {
    poly.times_x_monomial(&vec![0; n])
}

/// All strictly decreasing tuples of length `len` with parts in `0..=max`.
pub fn strict_partitions(len: usize, max: u32) -> Vec<Partition> {
    use itertools::Itertools;
    (0..=max).rev().combinations(len).map(Partition::new).collect()
}

/// The tridiagonal matrix behind M(α;μ), built entry by entry.
pub fn tridiagonal(alpha: &Partition, mu: &Partition) -> Vec<Vec<Polynomial>> {
    let m = mu.len();
    let mut a = vec![vec![Polynomial::zero(0); m]; m];
    for k in 0..m {
        a[k][k] = gt::stat_w(alpha, mu, k).unwrap();
        if k + 1 < m {
            a[k][k + 1] = Polynomial::one(0);
            a[k + 1][k] = gt::stat_d(alpha, mu, k + 1).unwrap();
        }
    }
    a
}

/// Cofactor expansion along the first row; no structure assumed.
pub fn laplace_det(a: &[Vec<Polynomial>]) -> Polynomial {
    let m = a.len();
    if m == 0 {
        return Polynomial::one(0);
    }
    let mut acc = Polynomial::zero(0);
    for col in 0..m {
        if a[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &a[0][col] * &laplace_det(&minor);
        acc = if col % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}
