//! Equations of secant varieties of Grassmannians.
//!
//! - [`ideal`]: polarization, simple vectors and exact evaluation kernels
//!   for low-degree ideal pieces.
//! - [`cubic`]: the cubic ideal of `σ(G(k,n))`, the tensor-product lower
//!   bound and the reduction to smaller Grassmannians.
//! - [`hwv`]: explicit highest-weight cubics of weight `(2k,k)`.
//! - [`orbit`]: the coordinate ring of the open orbit in `σ(G(k,2k))`.

pub mod cubic;
pub mod hwv;
pub mod ideal;
pub mod orbit;

pub use cubic::{
    alpha, crucial_bound, cubic_ideal_table, cubic_multiplicity, longarein_predicate, quotient_degree3, reduce_secant,
    CrucialBound, CubicCase, CubicMultiplicity, QuotientReadings,
};
pub use hwv::{check_hwv, hwv_even, hwv_odd, HwvReport};
pub use ideal::{
    ideal_degree_d, ideal_multiplicities, no_low_degree, polarize, DegreeDIdealPiece, Polarization, SimpleVector,
};
pub use orbit::{orbit_ring_multiplicity, orbit_ring_oracle};
