use std::fmt;

use serde::{Deserialize, Serialize};

use super::half::{Half, Scalar};
use super::multiset::Multiset;
use crate::error::{Error, Result};

/// The real form `U(a,b)`, or equivalently the split `C^a x C^b` of a weight.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct Signature {
    pub a: usize,
    pub b: usize,
}

impl Signature {
    pub const fn new(a: usize, b: usize) -> Self {
        Self { a, b }
    }

    /// `n = a + b`.
    pub const fn dim(self) -> usize {
        self.a + self.b
    }

    pub fn min(self) -> usize {
        self.a.min(self.b)
    }

    pub fn transpose(self) -> Self {
        Self {
            a: self.b,
            b: self.a,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A weight `(x_1..x_a) ⊗ (y_1..y_b)` of the compact Cartan of `U(a,b)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(
    try_from = "WeightRepr<S>",
    into = "WeightRepr<S>",
    bound = "S: Scalar"
)]
pub struct SplitWeight<S: Scalar> {
    x: Vec<Half<S>>,
    y: Vec<Half<S>>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "S: Scalar")]
struct WeightRepr<S: Scalar> {
    a: usize,
    b: usize,
    x: Vec<Half<S>>,
    y: Vec<Half<S>>,
}

impl<S: Scalar> TryFrom<WeightRepr<S>> for SplitWeight<S> {
    type Error = Error;
    fn try_from(r: WeightRepr<S>) -> Result<Self> {
        Self::new(Signature::new(r.a, r.b), r.x, r.y)
    }
}

impl<S: Scalar> From<SplitWeight<S>> for WeightRepr<S> {
    fn from(w: SplitWeight<S>) -> Self {
        WeightRepr {
            a: w.x.len(),
            b: w.y.len(),
            x: w.x,
            y: w.y,
        }
    }
}

impl<S: Scalar> SplitWeight<S> {
    pub fn new(sig: Signature, x: Vec<Half<S>>, y: Vec<Half<S>>) -> Result<Self> {
        if x.len() != sig.a || y.len() != sig.b {
            return Err(Error::WeightShape {
                a: sig.a,
                b: sig.b,
                x: x.len(),
                y: y.len(),
            });
        }
        Ok(Self { x, y })
    }

    /// Builds a weight whose signature is read off the part lengths.
    pub fn from_parts(x: Vec<Half<S>>, y: Vec<Half<S>>) -> Self {
        Self { x, y }
    }

    pub fn from_integers(x: &[S], y: &[S]) -> Self {
        Self {
            x: x.iter().map(|&k| Half::integer(k)).collect(),
            y: y.iter().map(|&k| Half::integer(k)).collect(),
        }
    }

    pub fn zero(sig: Signature) -> Self {
        Self {
            x: vec![Half::zero(); sig.a],
            y: vec![Half::zero(); sig.b],
        }
    }

    pub fn constant(sig: Signature, c: Half<S>) -> Self {
        Self {
            x: vec![c; sig.a],
            y: vec![c; sig.b],
        }
    }

    pub fn signature(&self) -> Signature {
        Signature::new(self.x.len(), self.y.len())
    }

    pub fn x(&self) -> &[Half<S>] {
        &self.x
    }

    pub fn y(&self) -> &[Half<S>] {
        &self.y
    }

    /// All `a+b` coordinates, x-part first.
    pub fn coords(&self) -> impl Iterator<Item = Half<S>> + '_ {
        self.x.iter().chain(self.y.iter()).copied()
    }

    /// Both parts weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        let dec = |v: &[Half<S>]| v.windows(2).all(|w| w[0] >= w[1]);
        dec(&self.x) && dec(&self.y)
    }

    pub fn is_integral(&self) -> bool {
        self.coords().all(Half::is_integral)
    }

    /// Adds `c` to every coordinate.
    pub fn shift(&self, c: Half<S>) -> Self {
        Self {
            x: self.x.iter().map(|&v| v + c).collect(),
            y: self.y.iter().map(|&v| v + c).collect(),
        }
    }

    /// Coordinatewise sum. Panics on a signature mismatch.
    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(
            self.signature(),
            other.signature(),
            "weight signature mismatch"
        );
        Self {
            x: self.x.iter().zip(&other.x).map(|(&p, &q)| p + q).collect(),
            y: self.y.iter().zip(&other.y).map(|(&p, &q)| p + q).collect(),
        }
    }

    pub fn x_mut(&mut self) -> &mut [Half<S>] {
        &mut self.x
    }

    pub fn y_mut(&mut self) -> &mut [Half<S>] {
        &mut self.y
    }

    pub fn multiset(&self) -> Multiset<S> {
        self.coords().collect()
    }
}

impl<S: Scalar> fmt::Display for SplitWeight<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Half<S>]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({})⊗({})", join(&self.x), join(&self.y))
    }
}

impl<S: Scalar> fmt::Debug for SplitWeight<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
