//! Exact half-integer scalars and the weight vectors built from them.
//!
//! Everything is generic over the backing integer [`Scalar`]; the crate root
//! exposes the `i64` instantiation under the names used elsewhere.

mod half;
mod multiset;
mod weight;

pub use half::{Half, Scalar};
pub use multiset::Multiset;
pub use weight::{Signature, SplitWeight};
