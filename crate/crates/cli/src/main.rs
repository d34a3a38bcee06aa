//! `htgraph`: property certificates, family constructions and searches.
//!
//! Exit status is 0 on success (negative search results included), 1 on
//! internal failure and 2 on bad input.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use htgraph::certificate::PropertyCertificate;
use htgraph::families::{cubic_family, quartic_family, verify_seed, Seed, SeedSet};
use htgraph::search::{
    anneal_seed_search, enumerate_connected, enumerate_regular, min_circumference_ht, min_size_ht_nonham, AnnealConfig,
    Predicate, RegularBudget,
};
use htgraph::{graph6, Error, Graph};

#[derive(Parser)]
#[command(name = "htgraph", version, about = "Homogeneously traceable graph tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit one JSON property certificate per graph6 line.
    Props {
        /// Input file, or `-` for standard input.
        file: PathBuf,
    },
    /// Build a member of the cubic or quartic family.
    Construct {
        family: FamilyArg,
        order: usize,
        /// Write the full construction trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Seed file for the quartic family (defaults to the bundled seeds).
        #[arg(long)]
        seeds: Option<PathBuf>,
    },
    /// Run an exhaustive or stochastic search and print its JSON report.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Check seed lines `<graph6> # marked=<int>`; prints one JSON report per seed.
    VerifySeed { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cubic,
    Quartic,
}

#[derive(Subcommand)]
enum SearchKind {
    /// All connected graphs of a given order.
    Connected {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value = "any", value_parser = parse_predicate)]
        pred: Predicate,
        #[arg(long)]
        sequential: bool,
    },
    /// All connected k-regular graphs of a given order.
    Regular {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value = "any", value_parser = parse_predicate)]
        pred: Predicate,
        #[arg(long)]
        sequential: bool,
        /// Lift the desk-scale order limits.
        #[arg(long)]
        unsafe_bounds: bool,
    },
    /// Simulated annealing over k-regular graphs of order p.
    Anneal {
        #[arg(short, default_value_t = 4)]
        k: usize,
        #[arg(short)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        steps: Option<u64>,
        #[arg(long)]
        restarts: Option<u32>,
        #[arg(long, default_value = "seed", value_parser = parse_predicate)]
        pred: Predicate,
    },
    /// Least circumference of a homogeneously traceable graph of order n.
    MinCircumference {
        #[arg(short)]
        n: usize,
    },
    /// Least size of a homogeneously traceable nonhamiltonian graph of order n.
    MinSize {
        #[arg(short)]
        n: usize,
    },
}

fn parse_predicate(s: &str) -> Result<Predicate, String> {
    Predicate::parse(s).ok_or_else(|| format!("unknown predicate {s:?} (any, ht, doubly-ht, nonham, ht-nonham, seed)"))
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } | Error::Invalid(_) | Error::Order(_) | Error::Graph6(_) | Error::Degree { .. } => {
                Failure::Input(e.to_string())
            }
            other => Failure::Internal(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

/// Graphs of a graph6 file; text after `#` is a comment.
fn parse_graphs(text: &str) -> Result<Vec<Graph>, Failure> {
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let code = line.split('#').next().unwrap_or("").trim();
        if code.is_empty() {
            continue;
        }
        let g = graph6::decode_str(code).map_err(|e| Failure::Input(format!("line {}: {e}", i + 1)))?;
        graphs.push(g);
    }
    Ok(graphs)
}

fn json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string(value).map_err(|e| Failure::Internal(e.to_string()))
}

fn emit(lines: &[String]) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    for line in lines {
        writeln!(out, "{line}").map_err(|e| Failure::Internal(e.to_string()))?;
    }
    Ok(())
}

fn props(file: &Path) -> Result<(), Failure> {
    let graphs = parse_graphs(&read_input(file)?)?;
    let certs: Vec<PropertyCertificate> = graphs.par_iter().map(PropertyCertificate::compute).collect();
    let lines = certs.iter().map(json).collect::<Result<Vec<_>, _>>()?;
    emit(&lines)
}

fn construct(family: FamilyArg, order: usize, trace: Option<&Path>, seeds: Option<&Path>) -> Result<(), Failure> {
    let t = match family {
        FamilyArg::Cubic => cubic_family(order)?,
        FamilyArg::Quartic => {
            let set = match seeds {
                Some(path) => SeedSet::parse(&read_input(path)?)?,
                None => SeedSet::bundled(),
            };
            quartic_family(order, &set)?
        }
    };
    if let Some(path) = trace {
        let body = serde_json::to_string_pretty(&t).map_err(|e| Failure::Internal(e.to_string()))?;
        fs::write(path, body + "\n").map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))?;
    }
    emit(&[graph6::encode(&t.final_graph)])
}

fn search(kind: SearchKind) -> Result<(), Failure> {
    let report = match kind {
        SearchKind::Connected { n, pred, sequential } => enumerate_connected(n, pred, !sequential)?,
        SearchKind::Regular {
            k,
            n,
            pred,
            sequential,
            unsafe_bounds,
        } => {
            let budget = if unsafe_bounds {
                RegularBudget::Unbounded
            } else {
                RegularBudget::Desk
            };
            enumerate_regular(k, n, pred, !sequential, budget)?
        }
        SearchKind::Anneal {
            k,
            p,
            seed,
            steps,
            restarts,
            pred,
        } => {
            let base = AnnealConfig::seed_search(p, seed);
            let cfg = AnnealConfig {
                degree: k,
                max_steps: steps.unwrap_or(base.max_steps),
                restarts: restarts.unwrap_or(base.restarts),
                target: pred,
                ..base
            };
            let outcome = anneal_seed_search(&cfg)?;
            if let (Some(g), Some(m)) = (&outcome.graph, outcome.marked) {
                eprintln!(
                    "{}",
                    Seed {
                        graph: g.clone(),
                        marked: m
                    }
                    .to_line()
                );
            }
            outcome.report
        }
        SearchKind::MinCircumference { n } => min_circumference_ht(n, true)?.report("min-circumference", Predicate::Ht),
        SearchKind::MinSize { n } => min_size_ht_nonham(n, true)?.report("min-size", Predicate::HtNonham),
    };
    emit(&[json(&report)?])
}

fn verify_seeds(file: &Path) -> Result<(), Failure> {
    let set = SeedSet::parse(&read_input(file)?)?;
    let reports: Vec<_> = set.seeds.iter().map(|s| verify_seed(&s.graph, s.marked)).collect();
    emit(&reports.iter().map(json).collect::<Result<Vec<_>, _>>()?)?;
    match reports.iter().all(|r| r.passes()) {
        true => Ok(()),
        false => Err(Failure::Input("seed verification failed".into())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Props { file } => props(&file),
        Command::Construct {
            family,
            order,
            trace,
            seeds,
        } => construct(family, order, trace.as_deref(), seeds.as_deref()),
        Command::Search { kind } => search(kind),
        Command::VerifySeed { file } => verify_seeds(&file),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("htgraph: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("htgraph: internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
