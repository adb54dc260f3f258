//! Backward chains `q_0 -> q_1 -> ... -> q_n = q` of theta predecessors,
//! ending in an algebra with compact Levi factor, and the atlas of a
//! signature.
//!
//! Each step must grow: `N_{i+1} > 2 N_i` with `N_i = a_i + b_i`. The stable
//! range `N_{i-1} <= min(a_i, b_i)` is enforced at every step by default; in
//! lax mode only at steps whose source is not the base and whose target is
//! not the input.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::parabolic::{CohomologicalDegree, LambdaCharacter, ThetaStableAlgebra};
use crate::partitions::{enumerate_compatible, Partition};
use crate::thetalift::{build_source, default_chi};
use crate::Signature;

/// How many stable-range inequalities a chain must satisfy.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strictness {
    #[default]
    Strict,
    Lax,
}

/// `θ⁻¹` at block `r0` (1-based), canonicalized. An out of range `r0` gives
/// `q` itself back.
pub fn predecessor(q: &ThetaStableAlgebra, r0: usize) -> ThetaStableAlgebra {
    if r0 == 0 || r0 > q.rank() {
        return q.canonical();
    }
    let blocks = q.blocks();
    ThetaStableAlgebra::canonicalize(
        blocks[..r0 - 1]
            .iter()
            .copied()
            .chain(blocks[r0..].iter().map(|b| b.swapped())),
    )
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ChainLink {
    pub signature: Signature,
    pub q: ThetaStableAlgebra,
    /// Block of `q` removed to reach the previous link; `None` at the base.
    pub r0: Option<usize>,
}

/// Inequalities at the step `q_{i-1} -> q_i`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StepCheck {
    pub growth: bool,
    pub stable_range: bool,
    /// Whether `stable_range` was required at this step.
    pub stable_range_enforced: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConvergenceCertificate {
    pub strictness: Strictness,
    /// From the base `q_0` to the input `q_n`.
    pub chain: Vec<ChainLink>,
    /// `checks[i-1]` covers the step into `chain[i]`.
    pub checks: Vec<StepCheck>,
}

impl ConvergenceCertificate {
    pub fn len(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn signatures(&self) -> Vec<Signature> {
        self.chain.iter().map(|l| l.signature).collect()
    }

    /// `(a_0,b_0)->(a_1,b_1)->...`.
    pub fn chain_string(&self) -> String {
        let mut s = String::new();
        for (i, sig) in self.signatures().iter().enumerate() {
            if i > 0 {
                s.push_str("->");
            }
            let _ = write!(s, "{sig}");
        }
        s
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConvergenceResult {
    pub convergent: bool,
    pub certificate: Option<ConvergenceCertificate>,
}

fn growth(prev: usize, next: usize) -> bool {
    next > 2 * prev
}

fn stable_range(prev: Signature, next: Signature) -> bool {
    prev.dim() <= next.min()
}

fn enforced(strictness: Strictness, prev_is_base: bool, next_is_top: bool) -> bool {
    match strictness {
        Strictness::Strict => true,
        Strictness::Lax => !prev_is_base && !next_is_top,
    }
}

/// Chain from a base up to `q`, as links `(q, r0)` ordered base first.
type Chain = Vec<(ThetaStableAlgebra, Option<usize>)>;

struct Search {
    strictness: Strictness,
    memo: HashMap<(ThetaStableAlgebra, bool), Option<Chain>>,
}

impl Search {
    fn run(&mut self, q: &ThetaStableAlgebra, is_top: bool) -> Option<Chain> {
        if q.is_compact() {
            return Some(vec![(q.clone(), None)]);
        }
        let key = (q.clone(), is_top);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let sig = q.signature();
        let mut found = None;
        for r0 in 1..=q.rank() {
            let p = predecessor(q, r0);
            let psig = p.signature();
            if !growth(psig.dim(), sig.dim()) {
                continue;
            }
            if enforced(self.strictness, p.is_compact(), is_top) && !stable_range(psig, sig) {
                continue;
            }
            if let Some(mut chain) = self.run(&p, false) {
                chain.push((q.clone(), Some(r0)));
                found = Some(chain);
                break;
            }
        }
        self.memo.insert(key, found.clone());
        found
    }
}

fn certificate(chain: Chain, strictness: Strictness) -> ConvergenceCertificate {
    let n = chain.len() - 1;
    let links: Vec<ChainLink> = chain
        .into_iter()
        .map(|(q, r0)| ChainLink {
            signature: q.signature(),
            q,
            r0,
        })
        .collect();
    let checks = (1..=n)
        .map(|i| {
            let (prev, next) = (links[i - 1].signature, links[i].signature);
            StepCheck {
                growth: growth(prev.dim(), next.dim()),
                stable_range: stable_range(prev, next),
                stable_range_enforced: enforced(strictness, i == 1, i == n),
            }
        })
        .collect();
    ConvergenceCertificate {
        strictness,
        chain: links,
        checks,
    }
}

/// Depth-first search over `r0 = 1, 2, ...` at every backward step; the first
/// chain found is returned.
pub fn is_convergent(q: &ThetaStableAlgebra, strictness: Strictness) -> ConvergenceResult {
    let mut search = Search {
        strictness,
        memo: HashMap::new(),
    };
    let chain = search.run(&q.canonical(), true);
    ConvergenceResult {
        convergent: chain.is_some(),
        certificate: chain.map(|c| certificate(c, strictness)),
    }
}

/// Why a certificate fails replay.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReplayError {
    Empty,
    WrongTop,
    BaseNotCompact,
    BadLink(usize),
    Growth(usize),
    StableRange(usize),
    ChecksMismatch,
}

/// Re-derives every link of `cert` through [`build_source`] at `λ = 0` and
/// re-checks all inequalities from scratch.
pub fn replay(q: &ThetaStableAlgebra, cert: &ConvergenceCertificate) -> Result<(), ReplayError> {
    let chain = &cert.chain;
    let top = chain.last().ok_or(ReplayError::Empty)?;
    if top.q != q.canonical() {
        return Err(ReplayError::WrongTop);
    }
    if !chain[0].q.is_compact() || chain[0].r0.is_some() {
        return Err(ReplayError::BaseNotCompact);
    }
    let n = chain.len() - 1;
    if cert.checks.len() != n {
        return Err(ReplayError::ChecksMismatch);
    }
    for i in 1..=n {
        let (prev, next) = (&chain[i - 1], &chain[i]);
        let r0 = next.r0.ok_or(ReplayError::BadLink(i))?;
        let chi = default_chi(&next.q, r0).map_err(|_| ReplayError::BadLink(i))?;
        let d = build_source(&next.q, &LambdaCharacter::zero(next.q.rank()), r0, chi)
            .map_err(|_| ReplayError::BadLink(i))?;
        if d.source_q.canonical() != prev.q
            || prev.signature != prev.q.signature()
            || next.signature != next.q.signature()
        {
            return Err(ReplayError::BadLink(i));
        }
        let (ps, ns) = (prev.q.signature(), next.q.signature());
        if !growth(ps.dim(), ns.dim()) {
            return Err(ReplayError::Growth(i));
        }
        let must = enforced(cert.strictness, i == 1, i == n);
        if must && !stable_range(ps, ns) {
            return Err(ReplayError::StableRange(i));
        }
        let want = StepCheck {
            growth: true,
            stable_range: stable_range(ps, ns),
            stable_range_enforced: must,
        };
        if cert.checks[i - 1] != want {
            return Err(ReplayError::ChecksMismatch);
        }
    }
    Ok(())
}

/// One compatible pair of the atlas.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AtlasRow {
    pub alpha: Partition,
    pub beta: Partition,
    pub blocks: ThetaStableAlgebra,
    #[serde(flatten)]
    pub degree: CohomologicalDegree,
    pub packet_size: usize,
    pub convergent: bool,
    /// Signatures of the certificate chain, base first; empty if not convergent.
    pub chain: Vec<Signature>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Atlas {
    pub a: usize,
    pub b: usize,
    pub rows: Vec<AtlasRow>,
}

pub const ATLAS_TSV_HEADER: &str = "alpha\tbeta\tblocks\tR\tR+\tR-\tpacket_size\tconvergent\tchain";

/// Every compatible pair in the `a x b` frame, in enumeration order, using
/// the strict stable range. The frame `0 x 0` gives an empty table.
pub fn atlas(a: usize, b: usize) -> Atlas {
    let rows = if a + b == 0 {
        Vec::new()
    } else {
        enumerate_compatible(a, b)
            .into_iter()
            .map(|pair| {
                let q =
                    ThetaStableAlgebra::from_pair(&pair).expect("enumerated pairs are compatible");
                let packet_size = q
                    .enumerate_packet(&LambdaCharacter::zero(q.rank()))
                    .expect("aligned")
                    .len();
                let conv = is_convergent(&q, Strictness::Strict);
                AtlasRow {
                    alpha: pair.alpha().clone(),
                    beta: pair.beta().clone(),
                    degree: q.cohomological_degree(),
                    packet_size,
                    convergent: conv.convergent,
                    chain: conv.certificate.map(|c| c.signatures()).unwrap_or_default(),
                    blocks: q,
                }
            })
            .collect()
    };
    Atlas { a, b, rows }
}

fn rows_field(p: &Partition) -> String {
    if p.is_empty() {
        return "-".into();
    }
    p.rows()
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl Atlas {
    /// Header plus one line per row. Empty partitions and missing chains are
    /// written as `-`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from(ATLAS_TSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let chain = if r.chain.is_empty() {
                "-".to_string()
            } else {
                r.chain
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join("->")
            };
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                rows_field(&r.alpha),
                rows_field(&r.beta),
                r.blocks,
                r.degree.r,
                r.degree.r_plus,
                r.degree.r_minus,
                r.packet_size,
                r.convergent,
                chain
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::tests::canonical_lists;
    use crate::parabolic::Block;

    fn q(s: &str) -> ThetaStableAlgebra {
        s.parse().unwrap()
    }

    #[test]
    fn predecessor_examples() {
        assert_eq!(predecessor(&q("1,0;2,2;0,1"), 2), q("2,0"));
        let p = predecessor(&q("2,3"), 1);
        assert!(p.is_empty());
        assert_eq!(p.signature(), Signature::new(0, 0));
        assert_eq!(predecessor(&q("1,0;1,1"), 2), q("1,0"));
        assert_eq!(predecessor(&q("1,1;2,0;0,1"), 2), q("1,1;1,0"));
    }

    #[test]
    fn compact_has_length_zero_chain() {
        for s in ["1,0;0,1", "0,1;1,0", "2,0", "1,0;0,2;1,0"] {
            let res = is_convergent(&q(s), Strictness::Strict);
            assert!(res.convergent);
            let cert = res.certificate.unwrap();
            assert!(cert.is_empty());
            assert!(cert.checks.is_empty());
            replay(&q(s), &cert).unwrap();
        }
    }

    #[test]
    fn worked_u33() {
        let alg = q("1,0;2,2;0,1");
        let res = is_convergent(&alg, Strictness::Strict);
        let cert = res.certificate.unwrap();
        assert_eq!(cert.chain_string(), "(2,0)->(3,3)");
        assert_eq!(cert.chain[1].r0, Some(2));
        assert_eq!(
            cert.checks,
            vec![StepCheck {
                growth: true,
                stable_range: true,
                stable_range_enforced: true
            }]
        );
        replay(&alg, &cert).unwrap();
    }

    #[test]
    fn two_equal_blocks_do_not_converge() {
        for mode in [Strictness::Strict, Strictness::Lax] {
            let res = is_convergent(&q("1,1;1,1"), mode);
            assert!(!res.convergent);
            assert!(res.certificate.is_none());
        }
    }

    #[test]
    fn whole_algebra_converges_from_empty_base() {
        let res = is_convergent(&q("1,1"), Strictness::Strict);
        let cert = res.certificate.unwrap();
        assert_eq!(cert.chain_string(), "(0,0)->(1,1)");
        replay(&q("1,1"), &cert).unwrap();
    }

    #[test]
    fn lax_accepts_more_than_strict() {
        let alg = q("1,0;2,2;0,1");
        assert!(is_convergent(&alg, Strictness::Lax).convergent);
        let mut strict = 0;
        let mut lax = 0;
        for n in 1..=6 {
            for a in 0..=n {
                for alg in canonical_lists(a, n - a) {
                    let s = is_convergent(&alg, Strictness::Strict);
                    let l = is_convergent(&alg, Strictness::Lax);
                    assert!(!s.convergent || l.convergent, "{alg}");
                    strict += s.convergent as usize;
                    lax += l.convergent as usize;
                    for res in [s, l] {
                        if let Some(cert) = res.certificate {
                            replay(&alg, &cert).unwrap();
                            assert!(cert.len() <= (n as f64).log2() as usize + 1);
                        }
                    }
                }
            }
        }
        assert!(lax >= strict);
    }

    #[test]
    fn replay_rejects_tampering() {
        let alg = q("1,0;2,2;0,1");
        let cert = is_convergent(&alg, Strictness::Strict).certificate.unwrap();
        let mut bad = cert.clone();
        bad.chain[0].q = q("1,1");
        bad.chain[0].signature = Signature::new(1, 1);
        assert!(replay(&alg, &bad).is_err());
        let mut bad = cert.clone();
        bad.chain[1].r0 = Some(1);
        assert!(replay(&alg, &bad).is_err());
        let mut bad = cert.clone();
        bad.checks[0].stable_range_enforced = false;
        assert_eq!(replay(&alg, &bad), Err(ReplayError::ChecksMismatch));
        assert_eq!(replay(&q("2,0"), &cert), Err(ReplayError::WrongTop));
    }

    /// Pure blocks, then one mixed block `(x,y)`, then pure blocks, with
    /// `2(x+y) > a+b` and the rest inside the stable range.
    #[test]
    fn single_mixed_block_converges_in_one_step() {
        let pure = |n: usize| -> Vec<Vec<Block>> {
            // All sequences of pure blocks with total size n, sizes 1 or 2.
            fn go(left: usize, cur: &mut Vec<Block>, out: &mut Vec<Vec<Block>>) {
                if left == 0 {
                    out.push(cur.clone());
                    return;
                }
                for s in 1..=left.min(2) {
                    for blk in [Block::new(s, 0), Block::new(0, s)] {
                        cur.push(blk);
                        go(left - s, cur, out);
                        cur.pop();
                    }
                }
            }
            let mut out = Vec::new();
            go(n, &mut Vec::new(), &mut out);
            out
        };
        let mut seen = 0;
        for x in 1..=4 {
            for y in 1..=4 {
                for before in 0..=2 {
                    for after in 0..=2 {
                        for pre in pure(before) {
                            for post in pure(after) {
                                let blocks: Vec<Block> = pre
                                    .iter()
                                    .copied()
                                    .chain([Block::new(x, y)])
                                    .chain(post.iter().copied())
                                    .collect();
                                let alg = ThetaStableAlgebra::new(blocks).unwrap();
                                let sig = alg.signature();
                                if 2 * (x + y) <= sig.dim() || before + after > sig.min() {
                                    continue;
                                }
                                seen += 1;
                                let res = is_convergent(&alg, Strictness::Strict);
                                let cert = res.certificate.unwrap_or_else(|| panic!("{alg}"));
                                assert_eq!(cert.len(), 1, "{alg}");
                                replay(&alg, &cert).unwrap();
                            }
                        }
                    }
                }
            }
        }
        assert!(seen > 100);
    }

    #[test]
    fn atlas_examples() {
        let t = atlas(1, 1);
        assert_eq!(t.rows.len(), 3);
        assert!(t.rows.iter().all(|r| r.convergent));
        let whole = t.rows.iter().find(|r| r.blocks == q("1,1")).unwrap();
        assert_eq!(
            whole.chain,
            vec![Signature::new(0, 0), Signature::new(1, 1)]
        );
        assert!(atlas(0, 0).rows.is_empty());
        assert_eq!(atlas(0, 0).to_tsv(), format!("{ATLAS_TSV_HEADER}\n"));
        assert_eq!(atlas(2, 2).rows.len(), 18);
        let tsv = atlas(1, 1).to_tsv();
        assert_eq!(tsv.lines().count(), 4);
        assert!(tsv.lines().all(|l| l.split('\t').count() == 9));
        assert!(
            tsv.contains("-\t1\t1,1\t0\t0\t0\t1\ttrue\t(0,0)->(1,1)"),
            "{tsv}"
        );
    }
}
