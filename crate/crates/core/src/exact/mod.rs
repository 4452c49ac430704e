//! Exact rational arithmetic, sparse polynomials and linear algebra.

pub mod matrix;
pub mod poly;
pub mod rational;

pub use matrix::{RationalMatrix, RowEchelon};
pub use poly::{Bindings, Monomial, SparsePolynomial, Var, VarIndex};
pub use rational::Rational;
