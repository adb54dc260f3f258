//! The `aql` command line.
//!
//! Exit codes: 0 on success, 1 when a verification or convergence check
//! comes out false, 2 on invalid input.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arthur::{psi_lambda_q, ChiPair, ParameterRestriction};
use crate::convergence::{atlas, is_convergent, ConvergenceResult, Strictness};
use crate::error::Error;
use crate::parabolic::{CohomologicalDegree, LambdaCharacter, ThetaStableAlgebra};
use crate::partitions::{enumerate_compatible, FramedPair, Partition};
use crate::thetalift::{
    build_source, default_chi, report_for, select_r0, LiftDatum, Mslk, DEFAULT_BOUND,
};
use crate::{CharMultiset, HalfInt, Signature, Weight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

/// Environment variable overriding the minimal-degree bound.
pub const BOUND_ENV: &str = "AQL_BOUND";

#[derive(Parser, Debug)]
#[command(
    name = "aql",
    version,
    about = "Exact computations for A_q(lambda) modules of U(a,b)"
)]
struct Cli {
    /// Write run metadata as JSON to standard error.
    #[arg(long, global = true)]
    meta: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compatible partition pairs.
    Partitions {
        #[command(subcommand)]
        action: PartitionsCmd,
    },
    /// Invariants of one module A_q(lambda).
    Aq(AlgebraArgs),
    /// The packet of A_q(lambda).
    Packet(AlgebraArgs),
    /// Theta lift data and checks.
    Lift {
        #[command(subcommand)]
        action: LiftCmd,
    },
    /// Convergent chains.
    Convergence {
        #[command(subcommand)]
        action: ConvergenceCmd,
    },
    /// One row per compatible pair of a signature.
    Atlas {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file; standard output if absent.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum PartitionsCmd {
    Enumerate {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Print only the number of pairs.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// Block list, e.g. "1,0;1,1;0,1".
    #[arg(long, value_parser = parse_blocks)]
    blocks: ThetaStableAlgebra,
    /// Weakly decreasing integers, one per block, e.g. "2,1,0".
    #[arg(long, allow_hyphen_values = true, value_parser = parse_lambda)]
    lambda: LambdaCharacter,
}

#[derive(Args, Debug)]
struct LiftArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Block removed by the lift, 1-based; the first largest block if absent.
    #[arg(long)]
    r0: Option<usize>,
    /// Winding numbers "α1,α2"; the smallest of the right parity if absent.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_chi)]
    chi: Option<(i64, i64)>,
}

#[derive(Subcommand, Debug)]
enum LiftCmd {
    Construct(LiftArgs),
    Verify {
        #[command(flatten)]
        lift: LiftArgs,
        /// Bound for the minimal-degree search.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum ConvergenceCmd {
    Check {
        #[arg(long, value_parser = parse_blocks)]
        blocks: ThetaStableAlgebra,
        /// Enforce the stable range only away from both ends of the chain.
        #[arg(long)]
        lax: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

fn parse_blocks(s: &str) -> Result<ThetaStableAlgebra, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_lambda(s: &str) -> Result<LambdaCharacter, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_chi(s: &str) -> Result<(i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!(
            "chi: expected \"α1,α2\", got {} entries",
            parts.len()
        ));
    }
    let one = |i: usize| {
        parts[i]
            .trim()
            .parse::<i64>()
            .map_err(|e| format!("chi: entry {}: {e}", i + 1))
    };
    Ok((one(0)?, one(1)?))
}

#[derive(Serialize)]
struct AqReport {
    signature: Signature,
    algebra: ThetaStableAlgebra,
    lambda: LambdaCharacter,
    alpha: Partition,
    beta: Partition,
    #[serde(flatten)]
    degree: CohomologicalDegree,
    m: Vec<i64>,
    inf_char: CharMultiset,
    lowest_k_type: Weight,
    two_rho_up: Weight,
    parameter: ParameterRestriction,
}

#[derive(Serialize)]
struct PacketMember {
    algebra: ThetaStableAlgebra,
    lambda: LambdaCharacter,
    lowest_k_type: Weight,
}

#[derive(Serialize)]
struct PacketReport {
    signature: Signature,
    base: ThetaStableAlgebra,
    lambda: LambdaCharacter,
    inf_char: CharMultiset,
    size: usize,
    members: Vec<PacketMember>,
}

#[derive(Serialize)]
struct ConstructReport {
    target_signature: Signature,
    source_signature: Signature,
    target_q: ThetaStableAlgebra,
    target_lambda: LambdaCharacter,
    r0: usize,
    chi: ChiPair,
    source_q: ThetaStableAlgebra,
    source_canonical: ThetaStableAlgebra,
    source_lambda: LambdaCharacter,
    det_shift: HalfInt,
    mslk: Mslk,
}

#[derive(Serialize)]
struct ConvergenceReport {
    algebra: ThetaStableAlgebra,
    #[serde(flatten)]
    result: ConvergenceResult,
}

#[derive(Serialize)]
struct Meta<'a> {
    tool: &'static str,
    version: &'static str,
    argv: &'a [String],
    exit_code: i32,
    elapsed_ms: u128,
}

/// Runs `aql` with the process environment and standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let bound = std::env::var(BOUND_ENV).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(
        argv,
        bound.as_deref(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// As [`run`] with explicit bound override and streams.
pub fn run_with<I, T>(
    argv: I,
    env_bound: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let start = Instant::now();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let code = match dispatch(&cli.command, env_bound, out) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
    };
    let _ = out.flush();
    if cli.meta {
        let meta = Meta {
            tool: "aql",
            version: env!("CARGO_PKG_VERSION"),
            argv: &argv,
            exit_code: code,
            elapsed_ms: start.elapsed().as_millis(),
        };
        let _ = writeln!(
            err,
            "{}",
            serde_json::to_string(&meta).expect("serializable")
        );
    }
    code
}

enum Failure {
    Input(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    writeln!(out, "{text}")?;
    Ok(())
}

fn resolve_bound(flag: Option<usize>, env_bound: Option<&str>) -> Result<usize, Failure> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match env_bound {
        None => Ok(DEFAULT_BOUND),
        Some(s) => s.trim().parse().map_err(|_| {
            Failure::Input(format!(
                "{BOUND_ENV}: expected a non-negative integer, got {s:?}"
            ))
        }),
    }
}

fn lift_datum(args: &LiftArgs) -> Result<LiftDatum, Failure> {
    let q = &args.algebra.blocks;
    let r0 = match args.r0 {
        Some(r0) => r0,
        None => *select_r0(q)
            .first()
            .ok_or_else(|| Failure::Input("the empty algebra has no block to lift".into()))?,
    };
    let base = default_chi(q, r0)?;
    let chi = match args.chi {
        Some((a1, a2)) => ChiPair::new(a1, a2, base.n, base.n_prime)?,
        None => base,
    };
    Ok(build_source(q, &args.algebra.lambda, r0, chi)?)
}

fn dispatch(cmd: &Command, env_bound: Option<&str>, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Partitions {
            action: PartitionsCmd::Enumerate { a, b, count },
        } => {
            let pairs: Vec<FramedPair> = enumerate_compatible(*a, *b);
            if *count {
                writeln!(out, "{}", pairs.len())?;
            } else {
                json(out, &pairs)?;
            }
        }
        Command::Aq(args) => {
            let q = &args.blocks;
            let pair = q.pair();
            let report = AqReport {
                signature: q.signature(),
                algebra: q.clone(),
                lambda: args.lambda.clone(),
                alpha: pair.alpha().clone(),
                beta: pair.beta().clone(),
                degree: q.cohomological_degree(),
                m: q.m_coeffs(),
                inf_char: q.inf_char(&args.lambda)?,
                lowest_k_type: q.lowest_k_type(&args.lambda)?,
                two_rho_up: q.two_rho_up(),
                parameter: psi_lambda_q(q, &args.lambda)?,
            };
            json(out, &report)?;
        }
        Command::Packet(args) => {
            let q = &args.blocks;
            let members = q
                .enumerate_packet(&args.lambda)?
                .into_iter()
                .map(|(algebra, lambda)| {
                    let lowest_k_type = algebra.lowest_k_type(&lambda)?;
                    Ok(PacketMember {
                        algebra,
                        lambda,
                        lowest_k_type,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let report = PacketReport {
                signature: q.signature(),
                base: q.clone(),
                lambda: args.lambda.clone(),
                inf_char: q.inf_char(&args.lambda)?,
                size: members.len(),
                members,
            };
            json(out, &report)?;
        }
        Command::Lift {
            action: LiftCmd::Construct(args),
        } => {
            let d = lift_datum(args)?;
            let report = ConstructReport {
                target_signature: d.target_signature(),
                source_signature: d.source_signature(),
                source_canonical: d.source_q.canonical(),
                target_q: d.target_q,
                target_lambda: d.target_lambda,
                r0: d.r0,
                chi: d.chi,
                source_q: d.source_q,
                source_lambda: d.source_lambda,
                det_shift: d.det_shift,
                mslk: d.mslk,
            };
            json(out, &report)?;
        }
        Command::Lift {
            action:
                LiftCmd::Verify {
                    lift,
                    bound,
                    json: as_json,
                },
        } => {
            let bound = resolve_bound(*bound, env_bound)?;
            let d = lift_datum(lift)?;
            let report = report_for(&d, bound)?;
            if *as_json {
                json(out, &report)?;
            } else {
                let verdict = |ok: bool| if ok { "ok" } else { "FAIL" };
                writeln!(
                    out,
                    "target: U{} blocks {} lambda {}",
                    d.target_signature(),
                    d.target_q,
                    d.target_lambda
                )?;
                writeln!(
                    out,
                    "source: U{} blocks {} lambda {}",
                    d.source_signature(),
                    d.source_q,
                    d.source_lambda
                )?;
                writeln!(
                    out,
                    "r0: {} chi: {},{} det_shift: {}",
                    d.r0, d.chi.alpha1, d.chi.alpha2, d.det_shift
                )?;
                writeln!(out, "parameter: {}", verdict(report.parameter_ok))?;
                writeln!(out, "infchar: {}", verdict(report.infchar_ok))?;
                writeln!(out, "ktype: {}", verdict(report.ktype_ok))?;
                writeln!(
                    out,
                    "mindegree: {} (bound {})",
                    verdict(report.mindegree_ok),
                    report.bound
                )?;
            }
            return Ok(if report.all_ok() { EXIT_OK } else { EXIT_FALSE });
        }
        Command::Convergence {
            action: ConvergenceCmd::Check { blocks, lax },
        } => {
            let strictness = if *lax {
                Strictness::Lax
            } else {
                Strictness::Strict
            };
            let result = is_convergent(blocks, strictness);
            let ok = result.convergent;
            json(
                out,
                &ConvergenceReport {
                    algebra: blocks.canonical(),
                    result,
                },
            )?;
            return Ok(if ok { EXIT_OK } else { EXIT_FALSE });
        }
        Command::Atlas {
            a,
            b,
            format,
            out: path,
        } => {
            let table = atlas(*a, *b);
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&table).expect("serializable") + "\n",
                Format::Tsv => table.to_tsv(),
            };
            match path {
                Some(p) => std::fs::write(p, text)
                    .map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
    }
    Ok(EXIT_OK)
}
