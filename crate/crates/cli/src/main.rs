//! `cyclab`: generate, inspect and verify digraphs from the shell.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cyclab::conditions::{conjecture1_condition_holds, satisfies_pair_condition};
use cyclab::cycles::{
    cycle_spectrum, find_3_cycle, find_n_minus_1_cycle, has_cycle_of_length, is_pancyclic,
    CycleCertificate, FinderError, ProofMode,
};
use cyclab::family::{
    compose, gen_bicomplete, gen_cycle, gen_round_local_tournament_random, gen_tournament_random,
    is_exceptional_db, is_exceptional_dl, is_lsd, round_decomposition,
};
use cyclab::harness::{
    enumerate_digraphs, verify, Coverage, Dedup, EnumerationSpec, Filter, Shard, Target, VerifyOptions,
};
use cyclab::io::{read_digraphs, write_adjacency_text, write_digraph6, write_dot};
use cyclab::{Digraph, MAX_ORDER};

#[derive(Parser)]
#[command(name = "cyclab", version, about = "Cycles in digraphs under pair degree conditions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated digraph.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[arg(long, value_enum, default_value_t = Format::Adjacency, global = true)]
        format: Format,
    },
    /// Test a property of each input digraph and print JSON.
    Check {
        property: Property,
        file: PathBuf,
    },
    /// Print the round decomposition of an LSD.
    Decompose { file: PathBuf },
    /// Find a cycle and print its certificate.
    FindCycle(FindCycle),
    /// Print the lengths of all cycles.
    Spectrum { file: PathBuf },
    /// List digraphs of order n in digraph6.
    Enumerate(Enumerate),
    /// Check a statement over many digraphs and write JSONL reports.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum GenFamily {
    /// Directed cycle C_n.
    Cycle { n: usize },
    /// K_{m,m} with all arcs both ways.
    Bicomplete { m: usize },
    /// Substitute the part digraphs into the vertices of the quotient.
    Compose { quotient: PathBuf, parts: Vec<PathBuf> },
    /// Random tournament.
    Tournament {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random round local tournament, labelled in round order.
    RoundLt {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Adjacency,
    Digraph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Strong,
    Bgl,
    Lsd,
    Db,
    Dl,
}

#[derive(Args)]
#[command(group(ArgGroup::new("which").required(true).args(["k3", "n_minus_1", "length"])))]
struct FindCycle {
    #[arg(long)]
    k3: bool,
    #[arg(long)]
    n_minus_1: bool,
    /// Any cycle of this length, by direct search.
    #[arg(long, value_name = "K")]
    length: Option<usize>,
    file: PathBuf,
    /// Re-check every inequality of the construction.
    #[arg(long)]
    verify_proof: bool,
    /// Also print DOT with the cycle highlighted.
    #[arg(long)]
    dot: bool,
}

#[derive(Args)]
struct Enumerate {
    #[arg(long)]
    n: usize,
    /// Comma-separated, applied in order: strong, bgl-condition, lsd, no-3-cycle.
    #[arg(long, value_delimiter = ',')]
    filters: Vec<String>,
    #[arg(long, default_value = "0/1")]
    shard: String,
    #[arg(long, value_enum)]
    dedup: Option<DedupArg>,
    /// Allow n = 6 (2^30 labelled digraphs).
    #[arg(long)]
    big: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum DedupArg {
    None,
    Canonical,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Every labelled digraph.
    Exhaustive,
    /// One or more labellings of every isomorphism class.
    Iso,
    /// Seeded random digraphs.
    Sampled,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    target: String,
    /// An order `N` or a range `A..B` (inclusive).
    #[arg(long)]
    n: String,
    #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Samples per order in sampled mode.
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    /// Arc probabilities used in turn by successive samples.
    #[arg(long, value_delimiter = ',', default_value = "0.5,0.7,0.85")]
    arc_probability: Vec<f64>,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    #[arg(long)]
    big: bool,
    #[arg(long)]
    verify_proof: bool,
    /// Record elapsed_ms (reports are then no longer reproducible).
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exit statuses: 0 verified, 1 counterexample or failed check, 2 usage.
struct Failed;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let status = run(cli, &mut out).and_then(|s| {
        out.flush()?;
        Ok(s)
    });
    match status {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failed)) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
}

fn read_input(path: &Path) -> Result<Vec<Digraph>> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let all = read_digraphs(&text).with_context(|| format!("parsing {}", path.display()))?;
    if all.is_empty() {
        bail!("{} holds no digraph", path.display());
    }
    Ok(all)
}

fn read_one(path: &Path) -> Result<Digraph> {
    let mut all = read_input(path)?;
    if all.len() > 1 {
        bail!("{} holds {} digraphs, expected one", path.display(), all.len());
    }
    Ok(all.remove(0))
}

fn print_digraph(out: &mut dyn Write, d: &Digraph, format: Format) -> io::Result<()> {
    match format {
        Format::Adjacency => write!(out, "{}", write_adjacency_text(d)),
        Format::Digraph6 => writeln!(out, "{}", write_digraph6(d)),
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<Result<(), Failed>> {
    match cli.command {
        Command::Gen { family, format } => {
            let d = match family {
                GenFamily::Cycle { n } => {
                    require((1..=MAX_ORDER).contains(&n), "n must be in 1..=64")?;
                    gen_cycle(n)
                }
                GenFamily::Bicomplete { m } => {
                    require((1..=MAX_ORDER / 2).contains(&m), "m must be in 1..=32")?;
                    gen_bicomplete(m)
                }
                GenFamily::Compose { quotient, parts } => {
                    let q = read_one(&quotient)?;
                    let parts = parts.iter().map(|p| read_one(p)).collect::<Result<Vec<_>>>()?;
                    compose(&q, &parts)?
                }
                GenFamily::Tournament { n, seed } => {
                    require((1..=MAX_ORDER).contains(&n), "n must be in 1..=64")?;
                    gen_tournament_random(n, seed)
                }
                GenFamily::RoundLt { n, seed } => {
                    require((1..=MAX_ORDER).contains(&n), "n must be in 1..=64")?;
                    gen_round_local_tournament_random(n, seed)
                }
            };
            print_digraph(out, &d, format)?;
            Ok(Ok(()))
        }
        Command::Check { property, file } => {
            for d in read_input(&file)? {
                let line = match property {
                    Property::Strong => json!({ "strong": d.is_strong() }).to_string(),
                    Property::Bgl => serde_json::to_string(&conjecture1_condition_holds(&d))?,
                    Property::Lsd => json!({ "lsd": is_lsd(&d) }).to_string(),
                    Property::Db => serde_json::to_string(&is_exceptional_db(&d))?,
                    Property::Dl => serde_json::to_string(&is_exceptional_dl(&d))?,
                };
                writeln!(out, "{line}")?;
            }
            Ok(Ok(()))
        }
        Command::Decompose { file } => {
            let mut status = Ok(());
            for d in read_input(&file)? {
                match round_decomposition(&d) {
                    Some(rd) => writeln!(out, "{}", serde_json::to_string(&rd)?)?,
                    None => {
                        writeln!(out, "null")?;
                        status = Err(Failed);
                    }
                }
            }
            Ok(status)
        }
        Command::FindCycle(args) => find_cycle(args, out),
        Command::Spectrum { file } => {
            for d in read_input(&file)? {
                let value = json!({
                    "n": d.order(),
                    "spectrum": cycle_spectrum(&d),
                    "pancyclic": is_pancyclic(&d),
                    "condition": satisfies_pair_condition(&d),
                });
                writeln!(out, "{value}")?;
            }
            Ok(Ok(()))
        }
        Command::Enumerate(args) => {
            let mut spec = EnumerationSpec::new(args.n);
            spec.filters = args.filters.iter().map(|f| f.parse::<Filter>()).collect::<Result<_, _>>()?;
            spec.shard = args.shard.parse::<Shard>()?;
            spec.dedup = match args.dedup {
                Some(DedupArg::Canonical) => Dedup::Canonical,
                _ => Dedup::None,
            };
            spec.big = args.big;
            for d in enumerate_digraphs(&spec)? {
                writeln!(out, "{}", write_digraph6(&d))?;
            }
            Ok(Ok(()))
        }
        Command::Verify(args) => run_verify(args, out),
    }
}

fn require(ok: bool, message: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        bail!("{message}")
    }
}

fn find_cycle(args: FindCycle, out: &mut dyn Write) -> Result<Result<(), Failed>> {
    let mode = if args.verify_proof { ProofMode::Verify } else { ProofMode::Fast };
    let mut status = Ok(());
    for d in read_input(&args.file)? {
        let result = if args.k3 {
            find_3_cycle(&d, mode)
        } else if args.n_minus_1 {
            find_n_minus_1_cycle(&d, mode)
        } else {
            let k = args.length.expect("clap requires one of the modes");
            match has_cycle_of_length(&d, k) {
                Some(c) => Ok(CycleCertificate::found(c)),
                None => {
                    writeln!(out, r#"{{"target_length":{k},"outcome":"none"}}"#)?;
                    status = Err(Failed);
                    continue;
                }
            }
        };
        match result {
            Ok(cert) => {
                writeln!(out, "{}", serde_json::to_string(&cert)?)?;
                if args.dot {
                    write!(out, "{}", write_dot(&d, cert.cycle()))?;
                }
            }
            Err(FinderError::Precondition(e)) => bail!("precondition: {e}"),
            Err(e) => {
                eprintln!("{e}");
                status = Err(Failed);
            }
        }
    }
    Ok(status)
}

fn parse_orders(s: &str) -> Result<Vec<usize>> {
    let parse = |t: &str| t.trim().parse::<usize>().with_context(|| format!("bad order {t:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (parse(a)?, parse(b)?);
            require(a <= b, "empty order range")?;
            Ok((a..=b).collect())
        }
        None => Ok(vec![parse(s)?]),
    }
}

fn run_verify(args: VerifyArgs, out: &mut dyn Write) -> Result<Result<(), Failed>> {
    let target: Target = args.target.parse()?;
    let orders = parse_orders(&args.n)?;
    let coverage = match args.mode {
        Mode::Exhaustive => Coverage::Exhaustive,
        Mode::Iso => Coverage::IsoClasses,
        Mode::Sampled => Coverage::Sampled {
            count: args.samples,
            arc_probabilities: args.arc_probability.clone(),
        },
    };
    let options = VerifyOptions {
        coverage,
        seed: args.seed,
        shards: args.shards,
        big: args.big,
        proof: if args.verify_proof { ProofMode::Verify } else { ProofMode::Fast },
        timing: args.timing,
    };
    let mut lines = String::new();
    let mut verified = true;
    for n in orders {
        let report = verify(target, n, &options)?;
        verified &= report.is_verified();
        lines.push_str(&report.to_jsonl());
        lines.push('\n');
    }
    match &args.out {
        Some(path) => fs::write(path, &lines).with_context(|| format!("writing {}", path.display()))?,
        None => write!(out, "{lines}")?,
    }
    Ok(if verified { Ok(()) } else { Err(Failed) })
}
