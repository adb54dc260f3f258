//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use aql::arthur::{psi_lambda_q, ChiPair};
use aql::convergence::{is_convergent, replay, Strictness};
use aql::parabolic::{LambdaCharacter, ThetaStableAlgebra};
use aql::partitions::{enumerate_compatible, FramedPair, Partition};
use aql::thetalift::{
    build_source, default_chi, howe_shape, select_r0, verify_inf_char, verify_k_type,
    verify_min_degree, verify_parameter_identity, HoweShape, LiftDatum,
};
use aql::{CharMultiset, HalfInt, Signature, Weight};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let took = start.elapsed();
    check(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(format!("{:.2}s", took.as_secs_f64()))
}

/// Every standard algebra with `1 <= a+b <= max_n`.
fn algebras(max_n: usize) -> Vec<ThetaStableAlgebra> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for a in 0..=n {
            for pair in enumerate_compatible(a, n - a) {
                out.push(ThetaStableAlgebra::from_pair(&pair).expect("compatible"));
            }
        }
    }
    out
}

/// `(q, r0 ∈ select_r0(q), λ ∈ [-3,3] decreasing, χ ∈ {parity, parity+2 on α1})`.
fn lift_family() -> Vec<LiftDatum> {
    let mut out = Vec::new();
    for q in algebras(6) {
        for r0 in select_r0(&q) {
            let base = default_chi(&q, r0).unwrap();
            let chis = [
                base,
                ChiPair::new(base.alpha1 + 2, base.alpha2, base.n, base.n_prime).unwrap(),
            ];
            for lambda in LambdaCharacter::all_in_range(q.rank(), -3, 3) {
                for chi in chis {
                    out.push(
                        build_source(&q, &lambda, r0, chi)
                            .unwrap_or_else(|e| panic!("{q} {lambda} r0={r0}: {e}")),
                    );
                }
            }
        }
    }
    out
}

fn over_family(
    family: &[LiftDatum],
    what: &str,
    f: impl Fn(&LiftDatum) -> bool,
) -> Result<(), String> {
    let bad: Vec<&LiftDatum> = family.iter().filter(|d| !f(d)).collect();
    check(bad.is_empty(), || {
        let d = bad[0];
        format!(
            "{what} false on {} instances, first: q={} λ={} r0={} χ=({},{})",
            bad.len(),
            d.target_q,
            d.target_lambda,
            d.r0,
            d.chi.alpha1,
            d.chi.alpha2
        )
    })
}

/// `(α, β)` read off a dominant `H = x ⊗ y`: `α_i = #{y_j < x_i}`, `β_i = #{y_j <= x_i}`.
fn pair_of_dominant(x: &[usize], y: &[usize], a: usize, b: usize) -> FramedPair {
    let alpha: Vec<usize> = x
        .iter()
        .map(|&xi| y.iter().filter(|&&yj| yj < xi).count())
        .collect();
    let beta: Vec<usize> = x
        .iter()
        .map(|&xi| y.iter().filter(|&&yj| yj <= xi).count())
        .collect();
    FramedPair::new(
        a,
        b,
        Partition::new(alpha).unwrap(),
        Partition::new(beta).unwrap(),
    )
    .unwrap()
}

fn decreasing(len: usize, top: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max {
            cur.push(v);
            go(len, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
    } else if top > 0 {
        go(len, top - 1, &mut Vec::new(), &mut out);
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for a in 0..=4 {
        for b in 0..=4 {
            let n = a + b;
            let mut oracle = BTreeSet::new();
            for x in decreasing(a, n) {
                for y in decreasing(b, n) {
                    oracle.insert(pair_of_dominant(&x, &y, a, b));
                }
            }
            let mut compatible = BTreeSet::new();
            let mut round_trip = BTreeSet::new();
            for beta in Partition::all_in_frame(a, b) {
                for alpha in Partition::all_in_frame(a, b) {
                    let Ok(pair) = FramedPair::new(a, b, alpha, beta.clone()) else {
                        continue;
                    };
                    if pair.is_compatible() {
                        compatible.insert(pair.clone());
                    }
                    if ThetaStableAlgebra::from_pair(&pair).is_ok_and(|q| q.pair() == pair) {
                        round_trip.insert(pair);
                    }
                }
            }
            check(oracle == compatible, || {
                format!(
                    "({a},{b}): oracle {} vs compatible {}",
                    oracle.len(),
                    compatible.len()
                )
            })?;
            check(oracle == round_trip, || {
                format!(
                    "({a},{b}): oracle {} vs round trip {}",
                    oracle.len(),
                    round_trip.len()
                )
            })?;
            let listed: BTreeSet<FramedPair> = enumerate_compatible(a, b).into_iter().collect();
            check(listed == oracle, || {
                format!("({a},{b}): enumerate_compatible differs from oracle")
            })?;
            total += oracle.len();
        }
    }
    check(enumerate_compatible(1, 1).len() == 3, || {
        "count (1,1) != 3".into()
    })?;
    check(enumerate_compatible(2, 2).len() == 18, || {
        "count (2,2) != 18".into()
    })?;
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("{total} pairs over a,b <= 4, counts 3 and 18, {t}"))
}

fn criterion_2(family: &[LiftDatum]) -> Outcome {
    let start = Instant::now();
    over_family(family, "parameter identity", verify_parameter_identity)?;
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{} instances, {t}", family.len()))
}

fn criterion_3(family: &[LiftDatum]) -> Outcome {
    let pairs: BTreeSet<(ThetaStableAlgebra, LambdaCharacter)> = family
        .iter()
        .map(|d| (d.target_q.clone(), d.target_lambda.clone()))
        .collect();
    for (q, l) in &pairs {
        let lhs = psi_lambda_q(q, l).map_err(|e| e.to_string())?.inf_char();
        let rhs = q.inf_char(l).map_err(|e| e.to_string())?;
        check(lhs == rhs, || format!("q={q} λ={l}: {lhs} vs {rhs}"))?;
    }
    Ok(format!("{} (q, λ) pairs", pairs.len()))
}

fn criterion_4(family: &[LiftDatum]) -> Outcome {
    over_family(family, "inf char composition", verify_inf_char)?;
    Ok(format!("{} instances", family.len()))
}

fn criterion_5(family: &[LiftDatum]) -> Outcome {
    over_family(family, "(t,u,v,w) = (k,s,m,l)", |d| {
        let Ok(mu) = d.source_q.lowest_k_type(&d.source_lambda) else {
            return false;
        };
        let m = d.mslk;
        howe_shape(&mu, d.target_signature(), d.chi.alpha1).is_ok_and(|s| {
            s == HoweShape {
                t: m.k,
                u: m.s,
                v: m.m,
                w: m.l,
            }
        })
    })?;
    over_family(family, "Howe image of lowest K-type", verify_k_type)?;
    Ok(format!("{} instances", family.len()))
}

fn criterion_6(family: &[LiftDatum]) -> Outcome {
    let start = Instant::now();
    let small: Vec<LiftDatum> = family
        .iter()
        .filter(|d| d.source_signature().dim() <= 4)
        .cloned()
        .collect();
    over_family(&small, "minimal degree (N=3)", |d| verify_min_degree(d, 3))?;
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!("{} instances with a'+b' <= 4, {t}", small.len()))
}

fn criterion_7() -> Outcome {
    let all = algebras(6);
    for q in &all {
        let sig = q.signature();
        let roots = q.delta_u_p();
        let pair = q.pair();
        let deg = q.cohomological_degree();
        let formula = pair.alpha().size() + sig.a * sig.b - pair.beta().size();
        check(deg.r == roots.len() && deg.r == formula, || {
            format!("{q}: R={} |Δ|={} formula={formula}", deg.r, roots.len())
        })?;
        check(deg.r_plus + deg.r_minus == deg.r, || {
            format!("{q}: R+ + R- != R")
        })?;
        let sum = roots
            .iter()
            .fold(Weight::zero(sig), |acc, r| acc.plus(&r.weight(sig)));
        check(sum == q.two_rho_up(), || {
            format!("{q}: Σ Δ(u∩p) = {sum} but 2ρ(u∩p) = {}", q.two_rho_up())
        })?;
    }
    Ok(format!("{} algebras with a+b <= 6", all.len()))
}

fn criterion_8() -> Outcome {
    let mut packets = 0;
    for q in algebras(6) {
        let n = q.signature().dim() as i64;
        let rho: CharMultiset = (1..=n)
            .map(|t| HalfInt::from_twice(n + 1 - 2 * t))
            .collect();
        for l in LambdaCharacter::all_in_range(q.rank(), -3, 3) {
            let packet = q.enumerate_packet(&l).map_err(|e| e.to_string())?;
            check(packet.iter().any(|(m, ml)| *m == q && *ml == l), || {
                format!("{q} λ={l}: base point missing")
            })?;
            let want = q.inf_char(&l).map_err(|e| e.to_string())?;
            for (m, ml) in &packet {
                check(m.inf_char(ml).as_ref() == Ok(&want), || {
                    format!("{q} λ={l}: member {m} has another inf char")
                })?;
            }
            if l.values().iter().all(|&v| v == 0) {
                check(want == rho, || format!("{q}: λ=0 inf char {want} is not ρ"))?;
            }
            packets += 1;
        }
    }
    let ds: ThetaStableAlgebra = "1,0;0,1".parse().unwrap();
    let size = ds
        .enumerate_packet(&LambdaCharacter::zero(2))
        .map_err(|e| e.to_string())?
        .len();
    check(size == 2, || {
        format!("packet of ((1,0),(0,1)) has {size} members")
    })?;
    Ok(format!("{packets} packets, ((1,0),(0,1)) has 2 members"))
}

fn criterion_9() -> Outcome {
    let u33: ThetaStableAlgebra = "1,0;2,2;0,1".parse().unwrap();
    let res = is_convergent(&u33, Strictness::Strict);
    let cert = res
        .certificate
        .ok_or("((1,0),(2,2),(0,1)) not convergent")?;
    check(
        cert.signatures() == vec![Signature::new(2, 0), Signature::new(3, 3)],
        || format!("chain {}", cert.chain_string()),
    )?;
    check(cert.chain[0].q.is_compact(), || "base not compact".into())?;
    replay(&u33, &cert).map_err(|e| format!("replay: {e:?}"))?;
    let pair: ThetaStableAlgebra = "1,1;1,1".parse().unwrap();
    check(!is_convergent(&pair, Strictness::Strict).convergent, || {
        "((1,1),(1,1)) reported convergent".into()
    })?;
    let mut compact = 0;
    let mut certs = 0;
    for q in algebras(6) {
        for mode in [Strictness::Strict, Strictness::Lax] {
            let res = is_convergent(&q, mode);
            if q.is_compact() {
                let ok = res.certificate.as_ref().is_some_and(|c| c.is_empty());
                check(ok, || format!("compact {q} lacks a length-0 chain"))?;
                compact += 1;
            }
            if let Some(c) = res.certificate {
                replay(&q, &c).map_err(|e| format!("{q}: replay {e:?}"))?;
                certs += 1;
            }
        }
    }
    Ok(format!(
        "chain (2,0)->(3,3); {compact} compact checks; {certs} certificates replayed"
    ))
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

fn aql(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_aql"))
        .args(args)
        .env_remove("AQL_BOUND")
        .output()
        .expect("spawn aql");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_10() -> Outcome {
    let cases: [(&str, &[&str]); 3] = [
        (
            "aq.json",
            &["aq", "--blocks", "1,0;1,1;0,1", "--lambda", "2,1,0"],
        ),
        (
            "lift_verify.txt",
            &[
                "lift", "verify", "--blocks", "1,0;1,1", "--lambda", "1,0", "--r0", "2", "--chi",
                "1,1",
            ],
        ),
        (
            "partitions_count.txt",
            &["partitions", "enumerate", "--a", "2", "--b", "2", "--count"],
        ),
    ];
    for (file, args) in cases {
        let want = std::fs::read(golden_dir().join(file)).map_err(|e| format!("{file}: {e}"))?;
        let (code, got) = aql(args);
        check(code == 0, || format!("{file}: exit {code}"))?;
        check(got == want, || {
            format!("{file}: output differs:\n{}", String::from_utf8_lossy(&got))
        })?;
    }
    let (code, _) = aql(&[
        "lift", "verify", "--blocks", "1,0;1,1", "--lambda", "1,0", "--bound", "0",
    ]);
    check(code == 0, || format!("bound 0 exit {code}"))?;
    let (code, _) = aql(&["convergence", "check", "--blocks", "1,1;1,1"]);
    check(code == 1, || format!("non-convergent exit {code}, want 1"))?;
    let (code, _) = aql(&["aq", "--blocks", "1,0;1,1", "--lambda", "0,1"]);
    check(code == 2, || format!("invalid λ exit {code}, want 2"))?;
    let (code, _) = aql(&[
        "lift", "verify", "--blocks", "1,0;1,1", "--lambda", "1,0", "--chi", "0,0",
    ]);
    check(code == 2, || format!("bad χ parity exit {code}, want 2"))?;
    Ok("3 golden files byte-identical; exit codes 0/1/2".into())
}

fn main() {
    let family = lift_family();
    let criteria: Vec<Criterion> = vec![
        (
            "classification by brute-force dominant H",
            Box::new(criterion_1),
        ),
        ("parameter identity", Box::new(|| criterion_2(&family))),
        (
            "parameter inf char equals module inf char",
            Box::new(|| criterion_3(&family)),
        ),
        ("inf char composition", Box::new(|| criterion_4(&family))),
        (
            "lowest K-type decomposition and Howe image",
            Box::new(|| criterion_5(&family)),
        ),
        ("minimal degree, N=3", Box::new(|| criterion_6(&family))),
        (
            "structural identities for R and 2ρ(u∩p)",
            Box::new(criterion_7),
        ),
        ("packets", Box::new(criterion_8)),
        ("convergence", Box::new(criterion_9)),
        ("CLI golden files and exit codes", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
