//! Young diagrams inside an `a x b` frame.
//!
//! Rows are indexed from 1 when exposed as cells, matching the usual
//! `(row, column)` picture of a diagram drawn top-left justified.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parabolic::ThetaStableAlgebra;

/// A weakly decreasing sequence of positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    /// Validates monotonicity and strips trailing zeros.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(rows));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The full rectangle `b^a`.
    pub fn rectangle(a: usize, b: usize) -> Self {
        if b == 0 {
            return Self::empty();
        }
        Self { rows: vec![b; a] }
    }

    /// Nonzero rows.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Length of row `i` (0-based), zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// Rows padded with zeros to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.row(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn fits_in(&self, a: usize, b: usize) -> bool {
        self.rows.len() <= a && self.row(0) <= b
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.rows.len() <= other.rows.len()
            && self.rows.iter().zip(&other.rows).all(|(p, q)| p <= q)
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Self {
        let width = self.row(0);
        let rows = (0..width)
            .map(|j| self.rows.iter().take_while(|&&r| r > j).count())
            .collect();
        Self { rows }
    }

    /// The complement of the diagram in `b^a`, rotated by a half turn.
    pub fn complement(&self, a: usize, b: usize) -> Result<Self> {
        if !self.fits_in(a, b) {
            return Err(Error::NotInFrame {
                partition: self.rows.clone(),
                a,
                b,
            });
        }
        let rows = (0..a).map(|i| b - self.row(a - 1 - i)).collect();
        Self::new(rows)
    }

    /// Every partition inside `b^a`, in increasing lexicographic order.
    pub fn all_in_frame(a: usize, b: usize) -> Vec<Partition> {
        fn grow(prefix: &mut Vec<usize>, rows_left: usize, max: usize, out: &mut Vec<Partition>) {
            out.push(Partition::new(prefix.clone()).expect("decreasing by construction"));
            if rows_left == 0 {
                return;
            }
            for r in 1..=max {
                prefix.push(r);
                grow(prefix, rows_left - 1, r, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        grow(&mut Vec::new(), a, b, &mut out);
        out.sort();
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.rows
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.rows.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Nested diagrams `alpha ⊆ beta ⊆ b^a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "PairRepr", into = "PairRepr")]
pub struct FramedPair {
    a: usize,
    b: usize,
    alpha: Partition,
    beta: Partition,
}

#[derive(Serialize, Deserialize)]
struct PairRepr {
    a: usize,
    b: usize,
    alpha: Partition,
    beta: Partition,
}

impl TryFrom<PairRepr> for FramedPair {
    type Error = Error;
    fn try_from(r: PairRepr) -> Result<Self> {
        Self::new(r.a, r.b, r.alpha, r.beta)
    }
}

impl From<FramedPair> for PairRepr {
    fn from(p: FramedPair) -> Self {
        PairRepr {
            a: p.a,
            b: p.b,
            alpha: p.alpha,
            beta: p.beta,
        }
    }
}

impl FramedPair {
    pub fn new(a: usize, b: usize, alpha: Partition, beta: Partition) -> Result<Self> {
        if !beta.fits_in(a, b) {
            return Err(Error::NotInFrame {
                partition: beta.rows,
                a,
                b,
            });
        }
        if !alpha.is_contained_in(&beta) {
            return Err(Error::NotNested {
                alpha: alpha.rows,
                beta: beta.rows,
            });
        }
        Ok(Self { a, b, alpha, beta })
    }

    pub fn frame(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    /// The cells `(row, col)` of `beta \ alpha`, 1-indexed, row-major.
    pub fn skew_cells(&self) -> Vec<(usize, usize)> {
        (0..self.beta.len())
            .flat_map(|i| (self.alpha.row(i) + 1..=self.beta.row(i)).map(move |j| (i + 1, j)))
            .collect()
    }

    /// Whether the pair comes from some standard theta-stable parabolic.
    pub fn is_compatible(&self) -> bool {
        ThetaStableAlgebra::from_pair(self).is_ok()
    }
}

impl fmt::Display for FramedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊆ {} in {}x{}", self.alpha, self.beta, self.a, self.b)
    }
}

/// All compatible pairs in the `a x b` frame, ordered by `(beta, alpha)`.
pub fn enumerate_compatible(a: usize, b: usize) -> Vec<FramedPair> {
    let frame = Partition::all_in_frame(a, b);
    let mut out = Vec::new();
    for beta in &frame {
        for alpha in frame.iter().filter(|p| p.is_contained_in(beta)) {
            let pair =
                FramedPair::new(a, b, alpha.clone(), beta.clone()).expect("nested by construction");
            if pair.is_compatible() {
                out.push(pair);
            }
        }
    }
    out
}
