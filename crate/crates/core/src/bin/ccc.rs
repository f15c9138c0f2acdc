//! `ccc` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 dimension or resource gate.

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use ccc_core::balance::{self, Mode};
use ccc_core::report::{render_verification, AnalyzeDoc, OutputFormat, RouteDoc, WSetsDoc};
use ccc_core::{iwe, labeling, oracle, CccError, Dimension, Vertex};

#[derive(Parser, Debug)]
#[command(
    name = "ccc",
    version,
    about = "Cube-connected cycles distance-balance toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Representative,
    Exhaustive,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Representative => Mode::Representative,
            ModeArg::Exhaustive => Mode::Exhaustive,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Cube,
    Cycle,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distance-balance verdict and W-partitions for CCC_n
    Analyze {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "representative")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Distance between two vertices
    Distance {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// A shortest path between two vertices
    Route {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// W-sets of one edge
    #[command(group(ArgGroup::new("target").required(true).args(["edge", "kind"])))]
    Wsets {
        #[arg(long)]
        n: u32,
        /// Edge as "u,v", e.g. 000:1,100:1
        #[arg(long)]
        edge: Option<String>,
        /// Use the representative edge of this kind
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long)]
        with_members: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Cross-check every implementation against the brute-force oracles
    Verify {
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Order of the automorphism group
    Autcount {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        brute_force: bool,
    },
}

fn exit_code(e: &CccError) -> u8 {
    if e.is_gate() {
        3
    } else {
        2
    }
}

fn vertex(s: &str, n: Dimension) -> Result<Vertex, CccError> {
    Vertex::parse(s.trim(), n)
}

fn run(cmd: Command) -> Result<u8, CccError> {
    match cmd {
        Command::Analyze { n, mode, format } => {
            let n = Dimension::new(n)?;
            let verdict = balance::analyze(n, mode.into(), false)?;
            print!("{}", AnalyzeDoc::new(&verdict).render(format));
            Ok(0)
        }
        Command::Distance { n, from, to } => {
            let n = Dimension::new(n)?;
            let (a, b) = (vertex(&from, n)?, vertex(&to, n)?);
            println!("{}", iwe::distance(a, b, n)?);
            Ok(0)
        }
        Command::Route {
            n,
            from,
            to,
            format,
        } => {
            let n = Dimension::new(n)?;
            let (a, b) = (vertex(&from, n)?, vertex(&to, n)?);
            let trace = iwe::shortest_path(a, b, n)?;
            print!("{}", RouteDoc::new(&trace, n).render(format));
            Ok(0)
        }
        Command::Wsets {
            n,
            edge,
            kind,
            with_members,
            format,
        } => {
            let n = Dimension::new(n)?;
            let (u, v) = match (edge, kind) {
                (Some(spec), _) => {
                    let (u, v) = spec.split_once(',').ok_or_else(|| CccError::Parse {
                        input: spec.clone(),
                        reason: "expected <u>,<v>".into(),
                    })?;
                    (vertex(u, n)?, vertex(v, n)?)
                }
                (None, Some(kind)) => {
                    let (cube, cycle) = balance::representative_edges(n);
                    let e = match kind {
                        KindArg::Cube => cube,
                        KindArg::Cycle => cycle,
                    };
                    (e.u, e.v)
                }
                (None, None) => unreachable!("clap enforces the target group"),
            };
            let p = balance::w_partition(u, v, n, with_members)?;
            print!("{}", WSetsDoc::new(&p, n).render(format));
            Ok(0)
        }
        Command::Verify { n_max, format } => {
            let report = oracle::verify(n_max)?;
            print!("{}", render_verification(&report, format));
            Ok(if report.all_passed { 0 } else { 1 })
        }
        Command::Autcount { n, brute_force } => {
            let n = Dimension::new(n)?;
            let formula = labeling::automorphism_group_size(n);
            if brute_force {
                let brute = oracle::count_automorphisms_bruteforce(n)?;
                println!("formula {formula}");
                println!("brute_force {brute}");
                if brute != formula {
                    eprintln!(
                        "mismatch: brute-force count {brute} differs from n*2^(n+1) = {formula}"
                    );
                    return Ok(1);
                }
            } else {
                println!("{formula}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
