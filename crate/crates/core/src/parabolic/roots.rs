use serde::{Deserialize, Serialize};

use super::ThetaStableAlgebra;
use crate::{HalfInt, Signature, Weight};

/// The root `±(x_row - y_{b+1-col})` attached to the cell `(row, col)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct NoncompactRoot {
    pub positive: bool,
    pub row: usize,
    pub col: usize,
}

impl NoncompactRoot {
    /// The root as a weight of `U(sig)`.
    pub fn weight(&self, sig: Signature) -> Weight {
        let mut w = Weight::zero(sig);
        let s = if self.positive { 1 } else { -1 };
        w.x_mut()[self.row - 1] += HalfInt::integer(s);
        w.y_mut()[sig.b - self.col] -= HalfInt::integer(s);
        w
    }
}

/// `R = dim(u ∩ p)` with its holomorphic and antiholomorphic parts.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CohomologicalDegree {
    #[serde(rename = "R")]
    pub r: usize,
    #[serde(rename = "R+")]
    pub r_plus: usize,
    #[serde(rename = "R-")]
    pub r_minus: usize,
}

impl ThetaStableAlgebra {
    /// `Δ(u ∩ p)`: positive roots on the cells of alpha, negative roots on the
    /// cells outside beta, each row-major.
    pub fn delta_u_p(&self) -> Vec<NoncompactRoot> {
        let pair = self.pair();
        let (a, b) = pair.frame();
        let mut out = Vec::new();
        for i in 0..a {
            out.extend((1..=pair.alpha().row(i)).map(|j| NoncompactRoot {
                positive: true,
                row: i + 1,
                col: j,
            }));
        }
        for i in 0..a {
            out.extend((pair.beta().row(i) + 1..=b).map(|j| NoncompactRoot {
                positive: false,
                row: i + 1,
                col: j,
            }));
        }
        out
    }

    pub fn cohomological_degree(&self) -> CohomologicalDegree {
        let pair = self.pair();
        let (a, b) = pair.frame();
        let r_plus = pair.alpha().size();
        let r_minus = a * b - pair.beta().size();
        CohomologicalDegree {
            r: r_plus + r_minus,
            r_plus,
            r_minus,
        }
    }

    /// `2ρ(u ∩ p) = (α_i + β_i - b)_i ⊗ (a - α̃_{b+1-j} - β̃_{b+1-j})_j`.
    pub fn two_rho_up(&self) -> Weight {
        let pair = self.pair();
        let (a, b) = pair.frame();
        let (alpha, beta) = (pair.alpha(), pair.beta());
        let (alpha_t, beta_t) = (alpha.conjugate(), beta.conjugate());
        let x: Vec<i64> = (0..a)
            .map(|i| (alpha.row(i) + beta.row(i)) as i64 - b as i64)
            .collect();
        let y: Vec<i64> = (1..=b)
            .map(|j| a as i64 - (alpha_t.row(b - j) + beta_t.row(b - j)) as i64)
            .collect();
        Weight::from_integers(&x, &y)
    }
}
