//! Standard theta-stable parabolic subalgebras of `u(a,b)`.
//!
//! A standard algebra is determined by a dominant `H`; only the order and
//! multiplicities of the distinct values `z_1 > ... > z_r` of its coordinates
//! matter, so the algebra is stored as the block list `((a_i, b_i))`.

mod ktypes;
mod roots;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use ktypes::degree;
pub use roots::{CohomologicalDegree, NoncompactRoot};

use crate::error::{Error, Result};
use crate::partitions::{FramedPair, Partition};
use crate::{Signature, Weight};

/// One Levi factor `U(a_i, b_i)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Block {
    pub a: usize,
    pub b: usize,
}

impl Block {
    pub const fn new(a: usize, b: usize) -> Self {
        Self { a, b }
    }

    pub const fn n(self) -> usize {
        self.a + self.b
    }

    pub const fn is_pure_x(self) -> bool {
        self.b == 0 && self.a > 0
    }

    pub const fn is_pure_y(self) -> bool {
        self.a == 0 && self.b > 0
    }

    /// Compact factor `U(n)` sitting in one of the two parts.
    pub const fn is_pure(self) -> bool {
        self.a == 0 || self.b == 0
    }

    pub const fn swapped(self) -> Self {
        Self {
            a: self.b,
            b: self.a,
        }
    }
}

impl From<(usize, usize)> for Block {
    fn from((a, b): (usize, usize)) -> Self {
        Self { a, b }
    }
}

impl From<Block> for (usize, usize) {
    fn from(b: Block) -> Self {
        (b.a, b.b)
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Ordered block decomposition of a standard theta-stable parabolic.
///
/// Block lists produced from partition pairs, dominant elements and
/// predecessors are canonical: adjacent pure-x blocks and adjacent pure-y
/// blocks are merged. Lists that still carry a split (for instance the source
/// side of a lift, where each block has its own character value) are allowed;
/// [`ThetaStableAlgebra::canonical`] merges them.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "AlgebraRepr", into = "AlgebraRepr")]
pub struct ThetaStableAlgebra {
    blocks: Vec<Block>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraRepr {
    blocks: Vec<Block>,
}

impl TryFrom<AlgebraRepr> for ThetaStableAlgebra {
    type Error = Error;
    fn try_from(r: AlgebraRepr) -> Result<Self> {
        Self::new(r.blocks)
    }
}

impl From<ThetaStableAlgebra> for AlgebraRepr {
    fn from(q: ThetaStableAlgebra) -> Self {
        AlgebraRepr { blocks: q.blocks }
    }
}

impl ThetaStableAlgebra {
    /// Rejects `(0,0)` blocks; no merging is performed.
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        if let Some(i) = blocks.iter().position(|b| b.n() == 0) {
            return Err(Error::EmptyBlock(i + 1));
        }
        Ok(Self { blocks })
    }

    pub fn from_sizes(sizes: &[(usize, usize)]) -> Result<Self> {
        Self::new(sizes.iter().copied().map(Block::from).collect())
    }

    /// The single block `((a,b))`, i.e. `q = g`.
    pub fn whole(sig: Signature) -> Self {
        Self::canonicalize(vec![Block::new(sig.a, sig.b)])
    }

    /// Drops empty blocks and merges adjacent pure blocks of the same kind.
    pub fn canonicalize(blocks: impl IntoIterator<Item = Block>) -> Self {
        let mut out: Vec<Block> = Vec::new();
        for blk in blocks.into_iter().filter(|b| b.n() > 0) {
            match out.last_mut() {
                Some(last)
                    if (last.is_pure_x() && blk.is_pure_x())
                        || (last.is_pure_y() && blk.is_pure_y()) =>
                {
                    last.a += blk.a;
                    last.b += blk.b;
                }
                _ => out.push(blk),
            }
        }
        Self { blocks: out }
    }

    pub fn canonical(&self) -> Self {
        Self::canonicalize(self.blocks.iter().copied())
    }

    pub fn is_canonical(&self) -> bool {
        self.blocks.windows(2).all(|w| {
            !(w[0].is_pure_x() && w[1].is_pure_x()) && !(w[0].is_pure_y() && w[1].is_pure_y())
        })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of blocks `r`.
    pub fn rank(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn signature(&self) -> Signature {
        Signature::new(
            self.blocks.iter().map(|b| b.a).sum(),
            self.blocks.iter().map(|b| b.b).sum(),
        )
    }

    /// Block dimensions `n_i = a_i + b_i`.
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.n()).collect()
    }

    /// The Levi factor is compact (every block pure, or no blocks at all).
    pub fn is_compact(&self) -> bool {
        self.blocks.iter().all(|b| b.is_pure())
    }

    /// `m_i = -n_1 - ... - n_{i-1} + n_{i+1} + ... + n_r`.
    pub fn m_coeffs(&self) -> Vec<i64> {
        let n: i64 = self.blocks.iter().map(|b| b.n() as i64).sum();
        let mut before = 0i64;
        self.blocks
            .iter()
            .map(|blk| {
                let ni = blk.n() as i64;
                let m = n - before - ni - before;
                before += ni;
                m
            })
            .collect()
    }

    /// Reads the blocks off the distinct coordinate values of a dominant `H`.
    pub fn from_dominant(h: &Weight) -> Result<Self> {
        if !h.is_dominant() {
            return Err(Error::NotDominant);
        }
        let mut values: Vec<_> = h.coords().collect();
        values.sort_unstable_by(|p, q| q.cmp(p));
        values.dedup();
        let blocks = values.iter().map(|&z| {
            Block::new(
                h.x().iter().filter(|&&v| v == z).count(),
                h.y().iter().filter(|&&v| v == z).count(),
            )
        });
        Ok(Self::canonicalize(blocks))
    }

    /// The pair `(alpha, beta)`: a row in block `t` has `alpha`-length
    /// `sum_{s>t} b_s` and `beta`-length `sum_{s>=t} b_s`.
    pub fn pair(&self) -> FramedPair {
        let sig = self.signature();
        let mut alpha = Vec::with_capacity(sig.a);
        let mut beta = Vec::with_capacity(sig.a);
        let mut below: usize = sig.b;
        for blk in &self.blocks {
            below -= blk.b;
            alpha.extend(std::iter::repeat_n(below, blk.a));
            beta.extend(std::iter::repeat_n(below + blk.b, blk.a));
        }
        let alpha = Partition::new(alpha).expect("rows decrease along blocks");
        let beta = Partition::new(beta).expect("rows decrease along blocks");
        FramedPair::new(sig.a, sig.b, alpha, beta).expect("alpha ⊆ beta ⊆ b^a by construction")
    }

    /// Canonical block list realizing a compatible pair.
    pub fn from_pair(pair: &FramedPair) -> Result<Self> {
        let (a, b) = pair.frame();
        let fail = || Error::NoBlockDecomposition {
            alpha: pair.alpha().rows().to_vec(),
            beta: pair.beta().rows().to_vec(),
            a,
            b,
        };
        let alpha = pair.alpha().padded(a);
        let beta = pair.beta().padded(a);
        // Runs of rows sharing the same (alpha, beta): (rows, alpha, beta).
        let mut runs: Vec<(usize, usize, usize)> = Vec::new();
        for (&al, &be) in alpha.iter().zip(&beta) {
            match runs.last_mut() {
                Some((rows, pa, pb)) if *pa == al && *pb == be => *rows += 1,
                _ => runs.push((1, al, be)),
            }
        }
        let mut blocks = Vec::new();
        match runs.first() {
            None => blocks.push(Block::new(0, b)),
            Some(&(_, _, be)) => blocks.push(Block::new(0, b - be)),
        }
        for (k, &(rows, al, be)) in runs.iter().enumerate() {
            blocks.push(Block::new(rows, be - al));
            let gap = match runs.get(k + 1) {
                Some(&(_, _, next_be)) => al.checked_sub(next_be).ok_or_else(fail)?,
                None => al,
            };
            blocks.push(Block::new(0, gap));
        }
        let q = Self::canonicalize(blocks);
        if q.pair() != *pair {
            return Err(fail());
        }
        Ok(q)
    }

    /// Checks that `lambda` has one entry per block.
    pub fn check_aligned(&self, lambda: &LambdaCharacter) -> Result<()> {
        if lambda.len() != self.rank() {
            return Err(Error::Misaligned {
                expected: self.rank(),
                got: lambda.len(),
            });
        }
        Ok(())
    }

    /// Block index (0-based) owning each x-coordinate, then each y-coordinate.
    pub(crate) fn slot_blocks(&self) -> (Vec<usize>, Vec<usize>) {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (t, blk) in self.blocks.iter().enumerate() {
            xs.extend(std::iter::repeat_n(t, blk.a));
            ys.extend(std::iter::repeat_n(t, blk.b));
        }
        (xs, ys)
    }
}

impl fmt::Display for ThetaStableAlgebra {
    /// The command-line form `a1,b1;a2,b2;...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{},{}", b.a, b.b))
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

impl fmt::Debug for ThetaStableAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.blocks)
    }
}

impl FromStr for ThetaStableAlgebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::default());
        }
        let mut blocks = Vec::new();
        for (i, part) in s.split(';').enumerate() {
            let err = |message: &str| Error::Parse {
                field: "blocks".into(),
                position: format!("block {} {:?}", i + 1, part),
                message: message.into(),
            };
            let (a, b) = part
                .split_once(',')
                .ok_or_else(|| err("expected \"a,b\""))?;
            let a = a
                .trim()
                .parse::<usize>()
                .map_err(|_| err("a is not a non-negative integer"))?;
            let b = b
                .trim()
                .parse::<usize>()
                .map_err(|_| err("b is not a non-negative integer"))?;
            if a + b == 0 {
                return Err(err("block (0,0) is not allowed"));
            }
            blocks.push(Block::new(a, b));
        }
        Self::new(blocks)
    }
}

/// Integral character `lambda = (lambda_1, ..., lambda_r)`, one value per
/// block, weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct LambdaCharacter {
    values: Vec<i64>,
}

impl LambdaCharacter {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::LambdaNotDecreasing(values));
        }
        Ok(Self { values })
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            values: vec![0; rank],
        }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Every weakly decreasing vector of length `rank` with entries in `lo..=hi`.
    pub fn all_in_range(rank: usize, lo: i64, hi: i64) -> Vec<Self> {
        fn go(
            prefix: &mut Vec<i64>,
            left: usize,
            lo: i64,
            max: i64,
            out: &mut Vec<LambdaCharacter>,
        ) {
            if left == 0 {
                out.push(LambdaCharacter {
                    values: prefix.clone(),
                });
                return;
            }
            for v in (lo..=max).rev() {
                prefix.push(v);
                go(prefix, left - 1, lo, v, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if lo <= hi || rank == 0 {
            go(&mut Vec::new(), rank, lo, hi, &mut out);
        }
        out
    }
}

impl TryFrom<Vec<i64>> for LambdaCharacter {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<LambdaCharacter> for Vec<i64> {
    fn from(l: LambdaCharacter) -> Self {
        l.values
    }
}

impl fmt::Debug for LambdaCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

impl fmt::Display for LambdaCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for LambdaCharacter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::default());
        }
        let values = s
            .split(',')
            .enumerate()
            .map(|(i, v)| {
                v.trim().parse::<i64>().map_err(|_| Error::Parse {
                    field: "lambda".into(),
                    position: format!("entry {} {:?}", i + 1, v),
                    message: "not an integer".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}
