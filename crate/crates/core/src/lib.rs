//! Exact algebra for secant and tangential varieties of Grassmannians and
//! spinor varieties.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact`]: rationals, sparse polynomials, exact linear algebra.
//! - [`young`]: partitions with an explicit row/column convention,
//!   Littlewood-Richardson coefficients, GL dimensions.
//! - [`symfunc`]: plethysm characters and Schur expansion.
//! - [`plethysm`]: closed-form multiplicities in `S^3(∧^k)` and reduction lemmas.
//! - [`minuscule`]: weights, generalized determinants and compatibility
//!   constants for Grassmannians (type A) and spinor varieties (type D).
//! - [`cumulant`]: the `x → y → z` coordinate changes and the secant/tangent
//!   parametrizations in each system.
//! - [`secant`]: low-degree ideals of secant varieties, cubic equations,
//!   highest-weight vectors, and the open-orbit coordinate ring.

pub mod cumulant;
pub mod error;
pub mod exact;
pub mod minuscule;
pub mod plethysm;
pub mod report;
pub mod secant;
pub mod symfunc;
pub mod young;

pub use error::{Error, Result};
pub use exact::{Bindings, Monomial, Rational, RationalMatrix, RowEchelon, SparsePolynomial, Var, VarIndex};
pub use young::{Convention, IsotypicTable, Partition};
