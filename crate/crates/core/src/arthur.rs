//! Arthur parameters restricted to `W_C x SL(2,C)`.
//!
//! Such a restriction is a formal sum `⊕_j μ^{k_j} ⊗ σ_{n_j}` with `k_j` half
//! integral; only this restriction is modeled. The action of `j` enters solely
//! through the parity condition checked by [`parity_check`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parabolic::{LambdaCharacter, ThetaStableAlgebra};
use crate::{CharMultiset, HalfInt};

/// One summand `μ^k ⊗ σ_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Summand {
    pub k: HalfInt,
    pub n: usize,
}

impl Summand {
    pub fn new(k: HalfInt, n: usize) -> Self {
        Self { k, n }
    }
}

/// A multiset of summands, stored by decreasing `k`, then decreasing `n`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "ParamRepr", into = "ParamRepr")]
pub struct ParameterRestriction {
    summands: Vec<Summand>,
}

#[derive(Serialize, Deserialize)]
struct ParamRepr {
    summands: Vec<Summand>,
}

impl TryFrom<ParamRepr> for ParameterRestriction {
    type Error = Error;
    fn try_from(r: ParamRepr) -> Result<Self> {
        Self::new(r.summands)
    }
}

impl From<ParameterRestriction> for ParamRepr {
    fn from(p: ParameterRestriction) -> Self {
        ParamRepr {
            summands: p.summands,
        }
    }
}

impl ParameterRestriction {
    pub fn new(summands: Vec<Summand>) -> Result<Self> {
        if let Some(i) = summands.iter().position(|s| s.n == 0) {
            return Err(Error::EmptySummand(i + 1));
        }
        Ok(Self::sorted(summands))
    }

    fn sorted(mut summands: Vec<Summand>) -> Self {
        summands.sort_unstable_by(|p, q| q.k.cmp(&p.k).then(q.n.cmp(&p.n)));
        Self { summands }
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    /// Total dimension `Σ n_j`.
    pub fn dim(&self) -> usize {
        self.summands.iter().map(|s| s.n).sum()
    }

    /// `{ k_j + (n_j + 1 - 2t)/2 : t = 1..n_j }`.
    pub fn inf_char(&self) -> CharMultiset {
        self.summands
            .iter()
            .flat_map(|s| {
                let n = s.n as i64;
                (1..=n).map(move |t| s.k + HalfInt::from_twice(n + 1 - 2 * t))
            })
            .collect()
    }

    /// Tensors with `μ^c`.
    pub fn twist(&self, c: HalfInt) -> Self {
        Self::sorted(
            self.summands
                .iter()
                .map(|s| Summand::new(s.k + c, s.n))
                .collect(),
        )
    }

    /// Direct sum.
    pub fn plus(&self, other: &Self) -> Self {
        Self::sorted(
            self.summands
                .iter()
                .chain(&other.summands)
                .copied()
                .collect(),
        )
    }
}

impl fmt::Display for ParameterRestriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| format!("μ^{}⊗σ{}", s.k, s.n))
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

impl fmt::Debug for ParameterRestriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The splitting characters `χ = (χ₁, χ₂)` of a dual pair
/// `(U(n'), U(n))`, recorded by their winding numbers `α(χ₁), α(χ₂)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ChiPair {
    pub alpha1: i64,
    pub alpha2: i64,
    pub n: usize,
    pub n_prime: usize,
}

impl ChiPair {
    /// Requires `α(χ₁) ≡ n` and `α(χ₂) ≡ n'` mod 2.
    pub fn new(alpha1: i64, alpha2: i64, n: usize, n_prime: usize) -> Result<Self> {
        if (alpha1 - n as i64).rem_euclid(2) != 0 || (alpha2 - n_prime as i64).rem_euclid(2) != 0 {
            return Err(Error::ChiParity {
                alpha1,
                alpha2,
                n,
                n_prime,
            });
        }
        Ok(Self {
            alpha1,
            alpha2,
            n,
            n_prime,
        })
    }

    /// Smallest non-negative winding numbers of the right parity.
    pub fn minimal(n: usize, n_prime: usize) -> Self {
        Self {
            alpha1: (n % 2) as i64,
            alpha2: (n_prime % 2) as i64,
            n,
            n_prime,
        }
    }

    pub fn half_alpha1(&self) -> HalfInt {
        HalfInt::from_twice(self.alpha1)
    }

    pub fn half_alpha2(&self) -> HalfInt {
        HalfInt::from_twice(self.alpha2)
    }
}

/// `m_i = -n_1 - ... - n_{i-1} + n_{i+1} + ... + n_r`.
pub fn m_coeffs(q: &ThetaStableAlgebra) -> Vec<i64> {
    q.m_coeffs()
}

/// Whether `⊕ μ^{k_i} I_{n_i}` extends to an L-homomorphism:
/// `2k_i ≡ n - n_i (mod 2)` for every block.
pub fn parity_check(k: &[HalfInt], q: &ThetaStableAlgebra) -> bool {
    let n = q.signature().dim() as i64;
    k.len() == q.rank()
        && k.iter()
            .zip(q.sizes())
            .all(|(ki, ni)| (ki.twice() - (n - ni as i64)).rem_euclid(2) == 0)
}

/// `ψ_{λ,q} = ⊕_i μ^{λ_i + m_i/2} ⊗ σ_{n_i}`.
pub fn psi_lambda_q(
    q: &ThetaStableAlgebra,
    lambda: &LambdaCharacter,
) -> Result<ParameterRestriction> {
    q.check_aligned(lambda)?;
    let summands = q
        .sizes()
        .into_iter()
        .zip(lambda.values())
        .zip(q.m_coeffs())
        .map(|((n, &l), m)| Summand::new(HalfInt::from_twice(2 * l + m), n))
        .collect();
    ParameterRestriction::new(summands)
}

/// `θ_χ(ψ') = μ^{(α(χ₂)-α(χ₁))/2} ⊗ ψ' ⊕ μ^{α(χ₂)/2} ⊗ σ_{n-n'}`.
pub fn theta_lift_param(
    psi_prime: &ParameterRestriction,
    chi: &ChiPair,
    n: usize,
) -> Result<ParameterRestriction> {
    let n_prime = psi_prime.dim();
    if n_prime >= n {
        return Err(Error::TargetTooSmall { n_prime, n });
    }
    if chi.n != n || chi.n_prime != n_prime {
        return Err(Error::ChiContext {
            n: chi.n,
            n_prime: chi.n_prime,
            want_n: n,
            want_n_prime: n_prime,
        });
    }
    let shifted = psi_prime.twist(chi.half_alpha2() - chi.half_alpha1());
    let tail = ParameterRestriction::sorted(vec![Summand::new(chi.half_alpha2(), n - n_prime)]);
    Ok(shifted.plus(&tail))
}
