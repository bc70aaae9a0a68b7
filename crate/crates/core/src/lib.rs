//! Hall–Littlewood polynomials computed two ways: by brute-force
//! symmetrization over `S_n`, and as sums over strict Gelfand–Tsetlin
//! patterns weighted by tridiagonal determinants in `q` and `t`.
//!
//! The pattern-side expansions produce `v_n(x;q)·HL_λ(x;t)` where
//! `v_n(x;q) = ∏_{i<j}(x_i - q x_j)`; the [`oracle`] module computes the
//! same product directly so the two can be compared as exact polynomials.
//!
//! ```
//! use hlgt::{oracle, tokuyama, Partition};
//!
//! let lambda = Partition::from([1, 0, 0]);
//! let lhs = oracle::weyl_denominator(3, oracle::Deform::Q) * oracle::hall_littlewood(&lambda).unwrap();
//! assert_eq!(tokuyama::theorem_rhs_closed(&lambda).unwrap(), lhs);
//! ```

pub mod cli;
pub mod gt;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod raising;
pub mod tokuyama;

pub use gt::{GtPattern, PropertyLabel};
pub use partition::Partition;
pub use poly::{Monomial, Param, Polynomial};
pub use raising::{OmegaSet, RaisingOperator};
