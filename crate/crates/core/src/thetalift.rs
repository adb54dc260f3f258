//! The lift from `U(a',b')` to `U(a,b)` attached to a block `r0` of a
//! standard algebra `q`, with exact checks of the identities it satisfies.
//!
//! Block indices `r0` are 1-based throughout.

use serde::{Deserialize, Serialize};

use crate::arthur::{psi_lambda_q, theta_lift_param, ChiPair, ParameterRestriction};
use crate::error::{Error, Result};
use crate::parabolic::{degree, Block, LambdaCharacter, ThetaStableAlgebra};
use crate::{CharMultiset, HalfInt, Signature, Weight};

/// Default bound for the minimal-degree search.
pub const DEFAULT_BOUND: usize = 3;

/// Sizes of the four corners of the partition diagram around block `r0`:
/// `m`/`k` count y/x slots before `r0`, `s`/`l` count y/x slots after it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Mslk {
    pub m: usize,
    pub s: usize,
    pub k: usize,
    pub l: usize,
}

/// Counts `(t, u, v, w)` of strictly positive and strictly negative tails of
/// a K'-type, after removing `α(χ₁)/2` and the `±(a-b)/2` centering.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct HoweShape {
    pub t: usize,
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

/// Everything fixed by choosing `(q, λ, r0, χ)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LiftDatum {
    pub target_q: ThetaStableAlgebra,
    pub target_lambda: LambdaCharacter,
    pub r0: usize,
    pub chi: ChiPair,
    /// `(a_i,b_i)_{i<r0}` then `(b_i,a_i)_{i>r0}`, unmerged so that
    /// `source_lambda` stays aligned.
    pub source_q: ThetaStableAlgebra,
    pub source_lambda: LambdaCharacter,
    /// The exponent `λ_{r0} + (m_{r0} - α(χ₂))/2` of the determinant twist.
    pub det_shift: HalfInt,
    pub mslk: Mslk,
}

impl LiftDatum {
    pub fn target_signature(&self) -> Signature {
        self.target_q.signature()
    }

    pub fn source_signature(&self) -> Signature {
        self.source_q.signature()
    }

    /// `n_{r0}`.
    pub fn removed(&self) -> usize {
        self.target_q.blocks()[self.r0 - 1].n()
    }
}

/// All block indices of maximal size, smallest first.
pub fn select_r0(q: &ThetaStableAlgebra) -> Vec<usize> {
    let sizes = q.sizes();
    let Some(&max) = sizes.iter().max() else {
        return Vec::new();
    };
    sizes
        .iter()
        .enumerate()
        .filter(|&(_, &n)| n == max)
        .map(|(i, _)| i + 1)
        .collect()
}

fn check_r0(q: &ThetaStableAlgebra, r0: usize) -> Result<()> {
    if r0 == 0 || r0 > q.rank() {
        return Err(Error::BadBlockIndex { r0, rank: q.rank() });
    }
    Ok(())
}

/// Source block list `(a_i,b_i)_{i<r0} ++ (b_i,a_i)_{i>r0}`, unmerged.
pub fn source_blocks(q: &ThetaStableAlgebra, r0: usize) -> Result<ThetaStableAlgebra> {
    check_r0(q, r0)?;
    let blocks = q.blocks();
    let list: Vec<Block> = blocks[..r0 - 1]
        .iter()
        .copied()
        .chain(blocks[r0..].iter().map(|b| b.swapped()))
        .collect();
    ThetaStableAlgebra::new(list)
}

/// `χ` with the smallest non-negative winding numbers for this lift.
pub fn default_chi(q: &ThetaStableAlgebra, r0: usize) -> Result<ChiPair> {
    check_r0(q, r0)?;
    let n = q.signature().dim();
    Ok(ChiPair::minimal(n, n - q.blocks()[r0 - 1].n()))
}

/// Every block other than `r0` fits in the stable range:
/// `Σ_{i≠r0} n_i <= min(a,b)`.
pub fn in_stable_range(q: &ThetaStableAlgebra, r0: usize) -> bool {
    let sig = q.signature();
    r0 >= 1 && r0 <= q.rank() && sig.dim() - q.blocks()[r0 - 1].n() <= sig.min()
}

/// Some block has size at least `max(a,b)`.
pub fn lift_applicable(q: &ThetaStableAlgebra) -> bool {
    let sig = q.signature();
    q.sizes()
        .into_iter()
        .max()
        .is_some_and(|n| n >= sig.a.max(sig.b))
}

/// Builds the source side of the lift.
pub fn build_source(
    q: &ThetaStableAlgebra,
    lambda: &LambdaCharacter,
    r0: usize,
    chi: ChiPair,
) -> Result<LiftDatum> {
    check_r0(q, r0)?;
    q.check_aligned(lambda)?;
    let n = q.signature().dim();
    let removed = q.blocks()[r0 - 1].n();
    if chi.n != n || chi.n_prime != n - removed {
        return Err(Error::ChiContext {
            n: chi.n,
            n_prime: chi.n_prime,
            want_n: n,
            want_n_prime: n - removed,
        });
    }
    let chi = ChiPair::new(chi.alpha1, chi.alpha2, chi.n, chi.n_prime)?;
    let source_q = source_blocks(q, r0)?;
    let m = q.m_coeffs();
    let l = lambda.values();
    let (l0, m0, n0) = (l[r0 - 1], m[r0 - 1], removed as i64);
    let mut source_lambda = Vec::with_capacity(q.rank() - 1);
    for (i, &li) in l.iter().enumerate() {
        let twice = match (i + 1).cmp(&r0) {
            std::cmp::Ordering::Less => 2 * (li - l0) + n0 - m0 + chi.alpha1,
            std::cmp::Ordering::Greater => 2 * (li - l0) - n0 - m0 + chi.alpha1,
            std::cmp::Ordering::Equal => continue,
        };
        match HalfInt::from_twice(twice).to_integer() {
            Some(v) => source_lambda.push(v),
            None => return Err(Error::NonIntegral(i + 1)),
        }
    }
    let source_lambda = LambdaCharacter::new(source_lambda)?;
    let det_shift = HalfInt::from_twice(2 * l0 + m0 - chi.alpha2);
    let before = &q.blocks()[..r0 - 1];
    let after = &q.blocks()[r0..];
    let mslk = Mslk {
        m: before.iter().map(|b| b.b).sum(),
        s: after.iter().map(|b| b.b).sum(),
        k: before.iter().map(|b| b.a).sum(),
        l: after.iter().map(|b| b.a).sum(),
    };
    Ok(LiftDatum {
        target_q: q.clone(),
        target_lambda: lambda.clone(),
        r0,
        chi,
        source_q,
        source_lambda,
        det_shift,
        mslk,
    })
}

/// `θ_χ(ψ_{λ',q'})`, or `None` when the datum is inconsistent.
pub fn lifted_parameter(d: &LiftDatum) -> Option<ParameterRestriction> {
    let source = psi_lambda_q(&d.source_q, &d.source_lambda).ok()?;
    theta_lift_param(&source, &d.chi, d.target_signature().dim()).ok()
}

/// `ψ_{λ,q}` twisted by `-det_shift`.
pub fn twisted_target_parameter(d: &LiftDatum) -> Option<ParameterRestriction> {
    Some(
        psi_lambda_q(&d.target_q, &d.target_lambda)
            .ok()?
            .twist(-d.det_shift),
    )
}

pub fn verify_parameter_identity(d: &LiftDatum) -> bool {
    match (lifted_parameter(d), twisted_target_parameter(d)) {
        (Some(lhs), Some(rhs)) => lhs == rhs,
        _ => false,
    }
}

/// Infinitesimal character of the twisted lift, composed from the source:
/// each `α(χ₁)/2 + t_j` becomes `α(χ₂)/2 + t_j`, the block `r0` contributes
/// `α(χ₂)/2 + (n_{r0} - 2i + 1)/2`, and everything is shifted by `det_shift`.
pub fn lifted_inf_char(d: &LiftDatum) -> Option<CharMultiset> {
    let source = d.source_q.inf_char(&d.source_lambda).ok()?;
    let to_target = d.chi.half_alpha2() - d.chi.half_alpha1();
    let n0 = d.removed() as i64;
    let extra: CharMultiset = (1..=n0)
        .map(|i| d.chi.half_alpha2() + HalfInt::from_twice(n0 - 2 * i + 1))
        .collect();
    Some(source.shift(to_target).union(&extra).shift(d.det_shift))
}

pub fn verify_inf_char(d: &LiftDatum) -> bool {
    match (lifted_inf_char(d), d.target_q.inf_char(&d.target_lambda)) {
        (Some(lhs), Ok(rhs)) => lhs == rhs,
        _ => false,
    }
}

/// Splits a K'-type `μ'` of `U(a',b')` paired with `U(partner)` into its tails.
pub fn howe_shape(mu_prime: &Weight, partner: Signature, chi1_alpha: i64) -> Result<HoweShape> {
    let (x, y) = centered_parts(mu_prime, partner, chi1_alpha)?;
    Ok(HoweShape {
        t: x.iter().filter(|&&v| v > 0).count(),
        u: x.iter().filter(|&&v| v < 0).count(),
        v: y.iter().filter(|&&v| v > 0).count(),
        w: y.iter().filter(|&&v| v < 0).count(),
    })
}

fn centered_parts(
    mu_prime: &Weight,
    partner: Signature,
    chi1_alpha: i64,
) -> Result<(Vec<i64>, Vec<i64>)> {
    if !mu_prime.is_dominant() {
        return Err(Error::NotDominant);
    }
    let center = HalfInt::from_twice(partner.a as i64 - partner.b as i64);
    let base = HalfInt::from_twice(chi1_alpha);
    let strip = |vals: &[HalfInt], c: HalfInt| -> Result<Vec<i64>> {
        vals.iter()
            .map(|&v| (v - base - c).to_integer().ok_or(Error::Lattice))
            .collect()
    };
    Ok((strip(mu_prime.x(), center)?, strip(mu_prime.y(), -center)?))
}

/// Howe's correspondence of K-types for the pair `(U(a',b'), U(a,b))`.
///
/// Writing `μ' = α(χ₁)/2 + {(a-b)/2 + (a_1..a_t, 0.., -b_1..-b_u)} ⊗
/// {(b-a)/2 + (c_1..c_v, 0.., -d_1..-d_w)}`, the image is
/// `α(χ₂)/2 + {(a'-b')/2 + (a_1..a_t, 0.., -d_1..-d_w)} ⊗
/// {(b'-a')/2 + (c_1..c_v, 0.., -b_1..-b_u)}`: positive tails stay, negative
/// tails change sides.
pub fn howe_type_map(mu_prime: &Weight, target: Signature, chi: &ChiPair) -> Result<Weight> {
    let (x, y) = centered_parts(mu_prime, target, chi.alpha1)?;
    let shape = howe_shape(mu_prime, target, chi.alpha1)?;
    if shape.t + shape.w > target.a || shape.v + shape.u > target.b {
        return Err(Error::HoweBound {
            tw: shape.t + shape.w,
            vu: shape.v + shape.u,
            a: target.a,
            b: target.b,
        });
    }
    let source = mu_prime.signature();
    let center = HalfInt::from_twice(source.a as i64 - source.b as i64);
    let base = chi.half_alpha2();
    let assemble = |pos: &[i64], neg: &[i64], len: usize, c: HalfInt| -> Vec<HalfInt> {
        let zeros = len - pos.len() - neg.len();
        pos.iter()
            .copied()
            .chain(std::iter::repeat_n(0, zeros))
            .chain(neg.iter().copied())
            .map(|v| base + c + HalfInt::integer(v))
            .collect()
    };
    let (x_pos, x_neg): (Vec<i64>, Vec<i64>) = (
        x.iter().copied().filter(|&v| v > 0).collect(),
        x.iter().copied().filter(|&v| v < 0).collect(),
    );
    let (y_pos, y_neg): (Vec<i64>, Vec<i64>) = (
        y.iter().copied().filter(|&v| v > 0).collect(),
        y.iter().copied().filter(|&v| v < 0).collect(),
    );
    let out_x = assemble(&x_pos, &y_neg, target.a, center);
    let out_y = assemble(&y_pos, &x_neg, target.b, -center);
    Weight::new(target, out_x, out_y)
}

/// `det_shift + θ(λ' + 2ρ(u'∩p'))`, the candidate lowest K-type of the lift.
pub fn lifted_k_type(d: &LiftDatum) -> Result<Weight> {
    let source = d.source_q.lowest_k_type(&d.source_lambda)?;
    Ok(howe_type_map(&source, d.target_signature(), &d.chi)?.shift(d.det_shift))
}

/// The source lowest K-type has tails `(t,u,v,w) = (k,s,m,l)` and its Howe
/// image, twisted by `det_shift`, is the target lowest K-type.
pub fn verify_k_type(d: &LiftDatum) -> bool {
    let Ok(source) = d.source_q.lowest_k_type(&d.source_lambda) else {
        return false;
    };
    let Ok(shape) = howe_shape(&source, d.target_signature(), d.chi.alpha1) else {
        return false;
    };
    let Mslk { m, s, k, l } = d.mslk;
    if shape
        != (HoweShape {
            t: k,
            u: s,
            v: m,
            w: l,
        })
    {
        return false;
    }
    match (lifted_k_type(d), d.target_q.lowest_k_type(&d.target_lambda)) {
        (Ok(lhs), Ok(rhs)) => lhs == rhs,
        _ => false,
    }
}

/// Degree of the source lowest K-type and the smallest degree met among the
/// bounded cone of candidate K-types.
pub fn degree_search(d: &LiftDatum, bound: usize) -> Result<(HalfInt, HalfInt)> {
    let target = d.target_signature();
    let lowest = d.source_q.lowest_k_type(&d.source_lambda)?;
    let own = degree(&lowest, d.chi.alpha1, target);
    let min = d
        .source_q
        .k_types_bounded(&d.source_lambda, bound)?
        .iter()
        .map(|w| degree(w, d.chi.alpha1, target))
        .min()
        .unwrap_or(own);
    Ok((own, min))
}

/// No weight in the bounded cone has degree below the lowest K-type's.
pub fn verify_min_degree(d: &LiftDatum, bound: usize) -> bool {
    matches!(degree_search(d, bound), Ok((own, min)) if min >= own)
}

/// Computed intermediates echoed alongside the verdicts.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LiftDetails {
    pub target_signature: Signature,
    pub source_signature: Signature,
    pub source_canonical: ThetaStableAlgebra,
    pub lifted_parameter: Option<ParameterRestriction>,
    pub target_parameter: Option<ParameterRestriction>,
    pub lifted_inf_char: Option<CharMultiset>,
    pub target_inf_char: CharMultiset,
    pub source_k_type: Weight,
    pub howe_shape: Option<HoweShape>,
    pub lifted_k_type: Option<Weight>,
    pub target_k_type: Weight,
    pub source_degree: HalfInt,
    pub min_degree_found: HalfInt,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LiftReport {
    pub parameter_ok: bool,
    pub infchar_ok: bool,
    pub ktype_ok: bool,
    pub mindegree_ok: bool,
    pub bound: usize,
    pub datum: LiftDatum,
    pub details: LiftDetails,
}

impl LiftReport {
    pub fn all_ok(&self) -> bool {
        self.parameter_ok && self.infchar_ok && self.ktype_ok && self.mindegree_ok
    }
}

/// Checks an already built datum.
pub fn report_for(d: &LiftDatum, bound: usize) -> Result<LiftReport> {
    let source_k_type = d.source_q.lowest_k_type(&d.source_lambda)?;
    let (source_degree, min_degree_found) = degree_search(d, bound)?;
    let details = LiftDetails {
        target_signature: d.target_signature(),
        source_signature: d.source_signature(),
        source_canonical: d.source_q.canonical(),
        lifted_parameter: lifted_parameter(d),
        target_parameter: twisted_target_parameter(d),
        lifted_inf_char: lifted_inf_char(d),
        target_inf_char: d.target_q.inf_char(&d.target_lambda)?,
        howe_shape: howe_shape(&source_k_type, d.target_signature(), d.chi.alpha1).ok(),
        source_k_type,
        lifted_k_type: lifted_k_type(d).ok(),
        target_k_type: d.target_q.lowest_k_type(&d.target_lambda)?,
        source_degree,
        min_degree_found,
    };
    Ok(LiftReport {
        parameter_ok: verify_parameter_identity(d),
        infchar_ok: verify_inf_char(d),
        ktype_ok: verify_k_type(d),
        mindegree_ok: min_degree_found >= source_degree,
        bound,
        datum: d.clone(),
        details,
    })
}

pub fn full_report(
    q: &ThetaStableAlgebra,
    lambda: &LambdaCharacter,
    r0: usize,
    chi: ChiPair,
    bound: usize,
) -> Result<LiftReport> {
    report_for(&build_source(q, lambda, r0, chi)?, bound)
}
