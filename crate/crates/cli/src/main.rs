//! `treepack`: pack, generate, solve exactly and verify from the command line.
//!
//! Exit status is 0 on success, 1 when a certificate or packing check fails,
//! and 2 on bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use treepack::extremal::{gen_subdivision, gen_tsk, gen_y};
use treepack::format::{expected_optimum, expected_optimum_comment, parse_graph, write_graph};
use treepack::graph::{Graph, Mode};
use treepack::ktree::pack_ktrees;
use treepack::lambda::{pack_lambda_with, LambdaConfig, LambdaResult};
use treepack::oracle::{oracle_lambda_k, oracle_tau, OracleLimits};
use treepack::packing::{certify, parse_packing, write_packing, BoundKind, Packing, Ratio};

/// The reduction driver recurses once per reduction.
const WORKER_STACK: usize = 256 << 20;

#[derive(Parser)]
#[command(name = "treepack", version, about = "Disjoint path and tree packings with certified lower bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pack 2-edge paths or k-edge trees and print a certificate.
    #[command(subcommand)]
    Pack(PackCommand),
    /// Generate graphs on which the bounds are tight.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Solve small instances exactly.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Check a packing file against a graph and a bound.
    Verify(VerifyArgs),
    /// Print the reductions the path packer applies.
    Trace(LambdaArgs),
}

#[derive(Subcommand)]
enum PackCommand {
    Lambda(LambdaArgs),
    Ktree(KtreeArgs),
}

#[derive(Subcommand)]
enum GenCommand {
    Tsk(TskArgs),
    Subdivision(SubdivisionArgs),
    Y(OutputArgs),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Maximum number of disjoint k-edge paths.
    Lambda(OracleArgs),
    /// Maximum number of disjoint k-edge trees.
    Tau(OracleArgs),
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct LambdaArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 3)]
    s: usize,
    #[arg(long, default_value_t = LambdaConfig::default().exact_threshold)]
    exact_threshold: usize,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct KtreeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 3)]
    s: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TskArgs {
    #[arg(long)]
    s: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    expansions: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SubdivisionArgs {
    /// Graph file of the multigraph to subdivide.
    #[arg(long)]
    base: PathBuf,
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Read the base as a multigraph (loops and parallel edges allowed).
    #[arg(long)]
    multi: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundArg {
    /// 2-edge paths: v/4 for s = 3, v/(s+1) for s >= 4.
    Lambda,
    /// k-edge trees: (v - k)/(sk - k + 1) per component.
    Ktree,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    packing: PathBuf,
    #[arg(long, value_enum, default_value_t = BoundArg::Lambda)]
    bound: BoundArg,
    #[arg(long, default_value_t = 3)]
    s: usize,
    #[arg(long, default_value_t = 2)]
    k: usize,
}

/// Failures of a check, as opposed to bad input.
#[derive(Debug)]
struct CheckFailed;

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("check failed")
    }
}

impl std::error::Error for CheckFailed {}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_graph(path: &Path, mode: Mode) -> Result<Graph> {
    parse_graph(&read(path)?, mode).with_context(|| format!("cannot parse {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Packing to `output` (or stdout), then the certificate on stdout.
fn report(output: Option<&Path>, packing: &Packing, certificate: &impl std::fmt::Display, satisfied: bool) -> Result<()> {
    emit(output, &write_packing(packing, None))?;
    println!("{certificate}");
    if satisfied {
        Ok(())
    } else {
        Err(CheckFailed.into())
    }
}

fn run_lambda(args: &LambdaArgs) -> Result<LambdaResult> {
    let g = read_graph(&args.input, Mode::Simple)?;
    let cfg = LambdaConfig {
        exact_threshold: args.exact_threshold,
        ..LambdaConfig::default()
    };
    let s = args.s;
    std::thread::Builder::new()
        .stack_size(WORKER_STACK)
        .spawn(move || pack_lambda_with(&g, s, &cfg))
        .context("cannot start worker")?
        .join()
        .map_err(|_| anyhow::anyhow!("packer panicked"))?
        .map_err(Into::into)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Pack(PackCommand::Lambda(args)) => {
            let r = run_lambda(&args)?;
            if let Some(path) = &args.trace {
                emit(Some(path), &r.trace.to_string())?;
            }
            report(args.output.as_deref(), &r.packing, &r.certificate, r.certificate.satisfied)
        }
        Command::Pack(PackCommand::Ktree(args)) => {
            let g = read_graph(&args.input, Mode::Simple)?;
            let (p, c) = pack_ktrees(&g, args.k, args.s)?;
            report(args.output.as_deref(), &p, &c, c.satisfied)
        }
        Command::Trace(args) => {
            let r = run_lambda(&args)?;
            emit(args.output.as_deref(), &r.trace.to_string())
        }
        Command::Gen(GenCommand::Tsk(args)) => {
            let (g, opt) = gen_tsk(args.s, args.k, args.expansions)?;
            emit(args.output.as_deref(), &write_graph(&g, &[expected_optimum_comment(opt)]))
        }
        Command::Gen(GenCommand::Subdivision(args)) => {
            let mode = if args.multi { Mode::Multi } else { Mode::Simple };
            let h = read_graph(&args.base, mode)?;
            let (g, opt) = gen_subdivision(&h, args.k)?;
            let comment = expected_optimum_comment(Ratio::new(opt as u64, 1));
            emit(args.output.as_deref(), &write_graph(&g, &[comment]))
        }
        Command::Gen(GenCommand::Y(args)) => {
            let comment = expected_optimum_comment(Ratio::new(4, 1));
            emit(args.output.as_deref(), &write_graph(&gen_y(), &[comment]))
        }
        Command::Oracle(cmd) => {
            let (name, args) = match &cmd {
                OracleCommand::Lambda(a) => ("lambda", a),
                OracleCommand::Tau(a) => ("tau", a),
            };
            let g = read_graph(&args.input, Mode::Simple)?;
            let limits = OracleLimits::default();
            let (best, witness) = match cmd {
                OracleCommand::Lambda(_) => oracle_lambda_k(&g, args.k, &limits)?,
                OracleCommand::Tau(_) => oracle_tau(&g, args.k, &limits)?,
            };
            let text = format!("{name}={best}\n{}", write_packing(&witness, None));
            emit(args.output.as_deref(), &text)
        }
        Command::Verify(args) => {
            let text = read(&args.input)?;
            let g = parse_graph(&text, Mode::Simple).with_context(|| format!("cannot parse {}", args.input.display()))?;
            let (bound, k) = match args.bound {
                BoundArg::Lambda => {
                    if args.s < 3 {
                        bail!("s must be at least 3");
                    }
                    (BoundKind::for_paths(args.s), 2)
                }
                BoundArg::Ktree => (BoundKind::Trees { s: args.s, k: args.k }, args.k),
            };
            let packing = parse_packing(&read(&args.packing)?, k)
                .with_context(|| format!("cannot parse {}", args.packing.display()))?;
            match certify(&g, &packing, bound) {
                Ok(c) => {
                    println!("valid=true");
                    println!("{c}");
                    if let Some(opt) = expected_optimum(&text) {
                        let tight = opt.same_value(&Ratio::new(c.achieved as u64, 1));
                        println!("expected-optimum={opt}");
                        println!("tight={tight}");
                    }
                    if c.satisfied {
                        Ok(())
                    } else {
                        Err(CheckFailed.into())
                    }
                }
                Err(e) => {
                    println!("valid=false");
                    println!("error={e}");
                    Err(CheckFailed.into())
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<CheckFailed>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
