//! Exact combinatorics of cohomologically induced modules `A_q(λ)` of `U(a,b)`.
//!
//! * [`partitions`]: Young diagrams in an `a x b` frame and compatible pairs.
//! * [`parabolic`]: block decompositions of standard theta-stable parabolics
//!   and the invariants read off from them.
//! * [`arthur`]: restrictions of Arthur parameters to `W_C x SL(2,C)`.
//! * [`thetalift`]: the lift `U(a',b') -> U(a,b)` with exact verification of
//!   its identities.
//! * [`convergence`]: chains of theta predecessors ending in a compact Levi.
//!
//! All arithmetic is exact. Scalars live in [`exact`], generic over the
//! backing integer; the aliases below fix it to `i64`.

pub mod arthur;
pub mod cli;
pub mod convergence;
pub mod error;
pub mod exact;
pub mod parabolic;
pub mod partitions;
pub mod thetalift;

pub use error::{Error, Result};
pub use exact::{Scalar, Signature};

/// A half-integer backed by `i64`.
pub type HalfInt = exact::Half<i64>;
/// A weight `(x_1..x_a) ⊗ (y_1..y_b)` with `i64`-backed coordinates.
pub type Weight = exact::SplitWeight<i64>;
/// An infinitesimal character, compared up to permutation.
pub type CharMultiset = exact::Multiset<i64>;
