use thiserror::Error;

use crate::young::Convention;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("weight mismatch: |lambda| = {outer} but |mu| + |nu| = {inner}")]
    WeightMismatch { outer: u32, inner: u32 },
    #[error("expected a diagram in {expected} convention, got {found}")]
    ConventionMismatch { expected: Convention, found: Convention },
    #[error("outer degree {0} is not supported (at most 4)")]
    UnsupportedDegree(u32),
    #[error("polynomial is not homogeneous")]
    NonHomogeneous,
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("incompatible weights: {0}")]
    Incompatible(String),
    #[error("map is not unitriangular: {0}")]
    NonTriangular(String),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
