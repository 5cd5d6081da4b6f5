//! Command-line front end. Every subcommand is a thin adapter over a library
//! operation.

pub mod dot;
pub mod format;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::f2linalg::kernel;
use crate::geneassembly::{
    apply_string_rule, complete_contractions, overlap_graph, parse_legal_string, StringRule,
};
use crate::graph::Graph;
use crate::orbit::{contraction_dag, dual_orbit, pivot_orbit, OrbitGraph};
use crate::pivot::{contraction, dual_pivot, pivot};
use crate::setsystem::{
    delta_matroid, maximal_family, minimal_family, reconstruct_graph, SetSystem,
};
use crate::suite::{exhaustive_suite, non_converse_witness, simulation_suite, PropertyReport};

use format::{
    family_text, parse_family, parse_graph, parse_set, serialize_graph, set_text, FamilyJson,
    GraphJson,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "f2pivot",
    version,
    about = "Pivots, dual pivots and contractions of graphs over F2"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// Graph file (`vertices ..`, `edge a b`, `loop a`).
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct GraphSetArgs {
    #[command(flatten)]
    pub graph: GraphArg,
    /// Comma-separated vertex names, e.g. `p,q`.
    #[arg(long, allow_hyphen_values = true)]
    pub set: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Principal pivot G * X.
    Pivot(GraphSetArgs),
    /// Dual pivot ((G + I) * X) + I.
    DualPivot(GraphSetArgs),
    /// Orbit under elementary pivots.
    Orbit(GraphArg),
    /// Orbit under elementary dual pivots.
    DualOrbit(GraphArg),
    /// All X with det G[X] = 1.
    DeltaMatroid(GraphArg),
    /// Inclusion-maximal members of the delta matroid.
    MaximalPivots(GraphArg),
    /// Inclusion-minimal nonempty members of the delta matroid.
    MinimalPivots(GraphArg),
    /// Kernel of the adjacency matrix.
    Kernel(GraphArg),
    /// Contraction: pivot on X, then delete X.
    Contract(GraphSetArgs),
    /// DAG of elementary contractions.
    ContractionDag(GraphArg),
    /// Complete contractions ending in gnr removals.
    CompleteContractions {
        #[command(flatten)]
        graph: GraphArg,
        /// Stop after this many strategies.
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
    /// Overlap graph of a legal string.
    Overlap {
        #[arg(long, allow_hyphen_values = true)]
        string: String,
    },
    /// Apply string rules (`snr:x`, `spr:x'`, `sdr:x,y`) in order.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        string: String,
        #[arg(long = "rule", required = true)]
        rules: Vec<String>,
    },
    /// Graph whose delta matroid is the given family.
    Reconstruct {
        /// Family file (`vertices ..`, then `set a b ..` lines).
        #[arg(long)]
        family: PathBuf,
    },
    /// Run the exhaustive and randomised property suites.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random legal strings.
        #[arg(long, default_value_t = 1000)]
        strings: usize,
    },
}

/// Why a command failed, and with which exit status.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Input(String),
    /// A property failed; carries the report.
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn status(&self) -> i32 {
        match self {
            Failure::Lib(e) if e.is_mathematical() => 1,
            Failure::Verify(_) => 1,
            _ => 2,
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Largest `--max-n` accepted by `verify`.
pub const VERIFY_MAX_N: usize = 6;

/// Parses `args` (including the program name), runs the command, and
/// returns the exit status. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            0
        }
        Err(Failure::Verify(text)) => {
            let _ = write!(out, "{text}");
            1
        }
        Err(f) => {
            let msg = match &f {
                Failure::Lib(e) => e.to_string(),
                Failure::Input(m) => m.clone(),
                Failure::Verify(_) => unreachable!(),
            };
            let _ = writeln!(err, "error: {msg}");
            f.status()
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(arg: &GraphArg) -> CliResult<Graph> {
    Ok(parse_graph(&read(&arg.graph)?)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn no_dot(what: &str) -> Failure {
    Failure::Input(format!("dot output is not available for {what}"))
}

fn render_graph(g: &Graph, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Text => serialize_graph(g),
        OutputFormat::Json => to_json(&GraphJson::from(g)),
        OutputFormat::Dot => dot::graph_dot(g),
    }
}

fn render_family(m: &SetSystem, fmt: OutputFormat) -> CliResult<String> {
    match fmt {
        OutputFormat::Text => Ok(format!("{}\n", family_text(m))),
        OutputFormat::Json => Ok(to_json(&FamilyJson::from(m))),
        OutputFormat::Dot => Err(no_dot("set families")),
    }
}

fn render_orbit(o: &OrbitGraph, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Dot => dot::emit_dot(o),
        OutputFormat::Text => {
            let mut s = String::new();
            for (i, g) in o.nodes().iter().enumerate() {
                s.push_str(&format!("node {i} {g}\n"));
            }
            for e in o.edges() {
                s.push_str(&format!(
                    "edge {} {} {}{{{}}}\n",
                    e.from,
                    e.to,
                    e.kind.symbol(),
                    o.edge_names(e).join(",")
                ));
            }
            s
        }
        OutputFormat::Json => {
            let nodes: Vec<GraphJson> = o.nodes().iter().map(GraphJson::from).collect();
            let edges: Vec<_> = o
                .edges()
                .iter()
                .map(|e| {
                    json!({
                        "from": e.from,
                        "to": e.to,
                        "move": e.kind.symbol(),
                        "set": o.edge_names(e),
                    })
                })
                .collect();
            to_json(&json!({ "nodes": nodes, "edges": edges }))
        }
    }
}

fn render_reports(reports: &[PropertyReport], fmt: OutputFormat) -> CliResult<String> {
    match fmt {
        OutputFormat::Text => Ok(reports.iter().map(|p| format!("{p}\n")).collect()),
        OutputFormat::Json => {
            let items: Vec<_> = reports
                .iter()
                .map(|p| {
                    json!({
                        "property": p.name,
                        "checks": p.checks,
                        "failures": p.failures,
                        "passed": p.passed(),
                        "first_failure": p.first_failure,
                    })
                })
                .collect();
            Ok(to_json(&json!({ "properties": items })))
        }
        OutputFormat::Dot => Err(no_dot("verification reports")),
    }
}

fn execute(cli: &Cli) -> CliResult<String> {
    let fmt = cli.format;
    match &cli.command {
        Command::Pivot(a) => {
            let g = load_graph(&a.graph)?;
            Ok(render_graph(&pivot(&g, parse_set(&g, &a.set)?)?, fmt))
        }
        Command::DualPivot(a) => {
            let g = load_graph(&a.graph)?;
            Ok(render_graph(&dual_pivot(&g, parse_set(&g, &a.set)?)?, fmt))
        }
        Command::Contract(a) => {
            let g = load_graph(&a.graph)?;
            Ok(render_graph(&contraction(&g, parse_set(&g, &a.set)?)?, fmt))
        }
        Command::Orbit(a) => Ok(render_orbit(&pivot_orbit(&load_graph(a)?)?, fmt)),
        Command::DualOrbit(a) => Ok(render_orbit(&dual_orbit(&load_graph(a)?)?, fmt)),
        Command::ContractionDag(a) => Ok(render_orbit(&contraction_dag(&load_graph(a)?)?, fmt)),
        Command::DeltaMatroid(a) => render_family(&delta_matroid(&load_graph(a)?)?, fmt),
        Command::MaximalPivots(a) => render_family(&maximal_family(&load_graph(a)?)?, fmt),
        Command::MinimalPivots(a) => render_family(&minimal_family(&load_graph(a)?)?, fmt),
        Command::Kernel(a) => {
            let g = load_graph(a)?;
            let k = kernel(&g);
            let basis: Vec<Vec<String>> = k.basis().iter().map(|&x| g.names_of(x)).collect();
            match fmt {
                OutputFormat::Text => {
                    let sets: Vec<String> = basis.iter().map(|b| set_text(b)).collect();
                    Ok(format!(
                        "dimension {}\nbasis {}\n",
                        k.dimension(),
                        sets.join(" | ")
                    ))
                }
                OutputFormat::Json => Ok(to_json(&json!({
                    "dimension": k.dimension(),
                    "basis": basis,
                }))),
                OutputFormat::Dot => Err(no_dot("kernels")),
            }
        }
        Command::CompleteContractions { graph, limit } => {
            let g = load_graph(graph)?;
            let all = complete_contractions(&g, *limit)?;
            match fmt {
                OutputFormat::Text => Ok(all.iter().map(|s| format!("{s}\n")).collect()),
                OutputFormat::Json => {
                    let items: Vec<_> = all
                        .iter()
                        .map(|s| {
                            json!({
                                "steps": s.steps.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                                "gnrdom": g.names_of(s.gnrdom),
                            })
                        })
                        .collect();
                    Ok(to_json(&json!({ "strategies": items })))
                }
                OutputFormat::Dot => Err(no_dot("contraction lists")),
            }
        }
        Command::Overlap { string } => Ok(render_graph(
            &overlap_graph(&parse_legal_string(string)?),
            fmt,
        )),
        Command::Reduce { string, rules } => {
            let mut u = parse_legal_string(string)?;
            for r in rules {
                u = apply_string_rule(&u, &StringRule::parse(r)?)?;
            }
            match fmt {
                OutputFormat::Text => Ok(format!("{u}\n")),
                OutputFormat::Json => Ok(to_json(&json!({ "string": u.to_string() }))),
                OutputFormat::Dot => Err(no_dot("strings")),
            }
        }
        Command::Reconstruct { family } => {
            let m = parse_family(&read(family)?)?;
            Ok(render_graph(&reconstruct_graph(&m)?, fmt))
        }
        Command::Verify {
            max_n,
            seed,
            strings,
        } => {
            if *max_n > VERIFY_MAX_N {
                return Err(Failure::Input(format!(
                    "--max-n {max_n} is too large, at most {VERIFY_MAX_N} is supported"
                )));
            }
            let mut reports = exhaustive_suite(*max_n)?.properties;
            reports.extend(simulation_suite(*strings, *seed).properties);
            let mut witness = PropertyReport::new("non-converse witness at n = 2");
            let found = non_converse_witness(2)?;
            witness.check(found.is_some(), || "no witness found".into());
            reports.push(witness);
            let text = render_reports(&reports, fmt)?;
            if reports.iter().all(PropertyReport::passed) {
                Ok(text)
            } else {
                Err(Failure::Verify(text))
            }
        }
    }
}
