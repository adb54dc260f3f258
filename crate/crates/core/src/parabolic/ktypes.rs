use super::{Block, LambdaCharacter, ThetaStableAlgebra};
use crate::error::Result;
use crate::{CharMultiset, HalfInt, Signature, Weight};

impl ThetaStableAlgebra {
    /// `λ` as a weight, constant on the slots of each block.
    pub fn expand_lambda(&self, lambda: &LambdaCharacter) -> Result<Weight> {
        self.check_aligned(lambda)?;
        let (xs, ys) = self.slot_blocks();
        let v = lambda.values();
        let x: Vec<i64> = xs.iter().map(|&t| v[t]).collect();
        let y: Vec<i64> = ys.iter().map(|&t| v[t]).collect();
        Ok(Weight::from_integers(&x, &y))
    }

    /// Infinitesimal character `λ + ρ_q` of `A_q(λ)`:
    /// `{ λ_i + m_i/2 + (n_i + 1 - 2t)/2 : t = 1..n_i }`.
    pub fn inf_char(&self, lambda: &LambdaCharacter) -> Result<CharMultiset> {
        self.check_aligned(lambda)?;
        let m = self.m_coeffs();
        let mut out = Vec::with_capacity(self.signature().dim());
        for ((blk, &li), &mi) in self.blocks.iter().zip(lambda.values()).zip(&m) {
            let n = blk.n() as i64;
            out.extend((1..=n).map(|t| HalfInt::from_twice(2 * li + mi + n + 1 - 2 * t)));
        }
        Ok(out.into())
    }

    /// Highest weight `λ + 2ρ(u ∩ p)` of the lowest K-type.
    pub fn lowest_k_type(&self, lambda: &LambdaCharacter) -> Result<Weight> {
        Ok(self.expand_lambda(lambda)?.plus(&self.two_rho_up()))
    }

    /// All `λ + 2ρ(u ∩ p) + Σ n_τ τ` over `τ ∈ Δ(u ∩ p)` with `Σ n_τ <= bound`.
    ///
    /// One entry per coefficient vector, so a weight reachable in two ways is
    /// listed twice. This contains every K-type of `A_q(λ)` of that height.
    pub fn k_types_bounded(&self, lambda: &LambdaCharacter, bound: usize) -> Result<Vec<Weight>> {
        let sig = self.signature();
        let start = self.lowest_k_type(lambda)?;
        let roots: Vec<Weight> = self.delta_u_p().iter().map(|r| r.weight(sig)).collect();
        let mut out = Vec::new();
        fn go(cur: &Weight, from: usize, left: usize, roots: &[Weight], out: &mut Vec<Weight>) {
            out.push(cur.clone());
            if left == 0 {
                return;
            }
            for (k, root) in roots.iter().enumerate().skip(from) {
                go(&cur.plus(root), k, left - 1, roots, out);
            }
        }
        go(&start, 0, bound, &roots, &mut out);
        Ok(out)
    }

    /// Representatives of the Adams-Johnson packet of `A_q(λ)`: every way of
    /// splitting each `n_i` as `a'_i + b'_i` with `Σ a'_i = a`, carrying the
    /// same λ. Ordered lexicographically on `(a'_1, ..., a'_r)`.
    pub fn enumerate_packet(
        &self,
        lambda: &LambdaCharacter,
    ) -> Result<Vec<(ThetaStableAlgebra, LambdaCharacter)>> {
        self.check_aligned(lambda)?;
        let sizes = self.sizes();
        let a = self.signature().a;
        let mut out = Vec::new();
        fn go(sizes: &[usize], left: usize, cur: &mut Vec<Block>, out: &mut Vec<Vec<Block>>) {
            let Some((&n, rest)) = sizes.split_first() else {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            };
            let room: usize = rest.iter().sum();
            for x in left.saturating_sub(room)..=n.min(left) {
                cur.push(Block::new(x, n - x));
                go(rest, left - x, cur, out);
                cur.pop();
            }
        }
        let mut lists = Vec::new();
        go(&sizes, a, &mut Vec::new(), &mut lists);
        for blocks in lists {
            out.push((ThetaStableAlgebra { blocks }, lambda.clone()));
        }
        Ok(out)
    }
}

/// Degree of a K'-type `w` of the smaller group of a dual pair: with
/// `w = α(χ₁)/2 + (x ⊗ y)` and `(a,b)` the signature of the partner group,
/// `Σ |x_i - (a-b)/2| + Σ |y_j - (b-a)/2|`.
pub fn degree(w: &Weight, chi1_alpha: i64, partner: Signature) -> HalfInt {
    let base = HalfInt::from_twice(chi1_alpha);
    let center = HalfInt::from_twice(partner.a as i64 - partner.b as i64);
    let x: HalfInt = w.x().iter().map(|&v| (v - base - center).abs()).sum();
    let y: HalfInt = w.y().iter().map(|&v| (v - base + center).abs()).sum();
    x + y
}
