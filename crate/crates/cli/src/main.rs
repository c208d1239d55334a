//! `mixspec` command line. JSON goes to stdout, diagnostics and timings to stderr.
//!
//! Exit codes: 0 success, 1 verification found discrepancies, 2 usage or input errors.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use mixspec::catalog::{forbidden_catalog, parse_named};
use mixspec::classify::{
    classify, forbidden_scan, in_class_g, interlacing_admissible, minimal_forbidden, subclass, ClassLabel,
    ForbiddenWitness, Subclass,
};
use mixspec::dioph::{solve_bipartite_p4, solve_p4_cliques, solve_p4_one_coclique, verify_no_solution_patterns};
use mixspec::graph6::parse_graph6_lines;
use mixspec::reduction::reduce_mixed;
use mixspec::verify::{run_verify, VerifyConfig};
use mixspec::{expand, is_isomorphic, parse_graph6, spectral_summary, write_graph6, ExtensionType, Graph};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "mixspec", version, about = "Exact spectra and mixed extensions of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact eigenvalue census of a graph.
    Spectrum(GraphInput),
    /// Membership, subclass flags, family labels and forbidden subgraphs.
    Classify(GraphInput),
    /// Builds a mixed extension and prints its graph6.
    Expand {
        /// Base graph: a name such as `P4`, `K3`, `Kpq(2,3)`, `K1+K2`, or a graph6 string.
        #[arg(long)]
        base: String,
        /// Type such as `3,.,-2`; `.` or a blank entry is a single vertex.
        #[arg(long = "type", allow_hyphen_values = true)]
        ext_type: String,
    },
    /// Reduces a graph to a base graph and type by merging twins.
    Reduce(GraphInput),
    /// Scans for catalog graphs, or mines minimal interlacing obstructions.
    Forbidden {
        /// Graph6 string to scan.
        #[arg(long, conflicts_with = "mine")]
        scan: Option<String>,
        #[arg(long, requires = "max_n")]
        mine: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Solves the determinant equations of the path extensions.
    Solve {
        #[arg(long, value_parser = ["bipP4", "iii", "iv", "nosol"])]
        family: String,
        #[arg(long, default_value_t = 30)]
        bound: i64,
    },
    /// Cross-checks spectral membership against the constructive classification.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// File of graph6 lines to check instead of generated graphs.
        #[arg(long, env = "GRAPH_CATALOG")]
        catalog: Option<PathBuf>,
        /// Also write the JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Graph6 string; read from stdin when omitted.
    graph6: Option<String>,
    /// Edge list such as `0-1,1-2,2-3` instead of graph6.
    #[arg(long, conflicts_with = "graph6")]
    edges: Option<String>,
    /// Order for `--edges`; defaults to one more than the largest vertex.
    #[arg(long, requires = "edges")]
    order: Option<usize>,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

#[derive(Serialize)]
struct ClassifyOutput {
    graph6: String,
    in_class_g: bool,
    subclass: Subclass,
    labels: Vec<ClassLabel>,
    witnesses: Vec<ForbiddenWitness>,
}

#[derive(Serialize)]
struct ReduceOutput {
    base: String,
    base_order: usize,
    #[serde(rename = "type")]
    ext_type: String,
}

#[derive(Serialize)]
struct MinedGraph {
    graph6: String,
    order: usize,
    catalog: Option<&'static str>,
}

fn parse_edges(text: &str, order: Option<usize>) -> CliResult<Graph> {
    let mut edges = Vec::new();
    for (i, item) in text.split(',').map(str::trim).filter(|s| !s.is_empty()).enumerate() {
        let (a, b) =
            item.split_once('-').ok_or_else(|| Failure(format!("edge {}: expected `u-v`, got `{item}`", i + 1)))?;
        let parse =
            |s: &str| s.trim().parse::<usize>().map_err(|_| Failure(format!("edge {}: `{s}` is not a vertex", i + 1)));
        edges.push((parse(a)?, parse(b)?));
    }
    let n = order.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(1));
    Ok(Graph::from_edges(n, edges)?)
}

fn read_graph(input: &GraphInput) -> CliResult<Graph> {
    if let Some(edges) = &input.edges {
        return parse_edges(edges, input.order);
    }
    match &input.graph6 {
        Some(text) => Ok(parse_graph6(text)?),
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            let line = buf.lines().find(|l| !l.trim().is_empty()).ok_or_else(|| Failure("no graph on stdin".into()))?;
            Ok(parse_graph6(line.trim())?)
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> CliResult<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn base_graph(text: &str) -> CliResult<Graph> {
    match parse_named(text) {
        Ok(g) => Ok(g),
        Err(named) => parse_graph6(text).map_err(|g6| Failure(format!("base `{text}`: {named}; as graph6: {g6}"))),
    }
}

fn catalog_name(g: &Graph) -> Option<&'static str> {
    forbidden_catalog().into_iter().find(|f| is_isomorphic(&f.graph, g)).map(|f| f.name)
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Spectrum(input) => print_json(&spectral_summary(&read_graph(&input)?)?)?,
        Command::Classify(input) => {
            let g = read_graph(&input)?;
            print_json(&ClassifyOutput {
                graph6: write_graph6(&g),
                in_class_g: in_class_g(&g),
                subclass: subclass(&g)?,
                labels: classify(&g),
                witnesses: forbidden_scan(&g),
            })?;
        }
        Command::Expand { base, ext_type } => {
            let t: ExtensionType = ext_type.parse()?;
            println!("{}", write_graph6(&expand(&base_graph(&base)?, &t)?));
        }
        Command::Reduce(input) => {
            let (base, t) = reduce_mixed(&read_graph(&input)?);
            print_json(&ReduceOutput { base: write_graph6(&base), base_order: base.order(), ext_type: t.to_string() })?;
        }
        Command::Forbidden { scan, mine, max_n } => match (scan, mine, max_n) {
            (Some(text), _, _) => print_json(&forbidden_scan(&parse_graph6(&text)?))?,
            (None, true, Some(k)) => {
                let mined = minimal_forbidden(k, interlacing_admissible)?;
                let rows: Vec<MinedGraph> = mined
                    .iter()
                    .map(|g| MinedGraph { graph6: write_graph6(g), order: g.order(), catalog: catalog_name(g) })
                    .collect();
                print_json(&rows)?;
            }
            _ => return Err(Failure("forbidden needs --scan <g6> or --mine --max-n <k>".into())),
        },
        Command::Solve { family, bound } => {
            let start = Instant::now();
            match family.as_str() {
                "bipP4" => print_json(&solve_bipartite_p4(bound)?)?,
                "iii" => print_json(&solve_p4_one_coclique(bound)?)?,
                "iv" => print_json(&solve_p4_cliques(bound)?)?,
                _ => print_json(&verify_no_solution_patterns(bound)?)?,
            }
            eprintln!("solved in {:.2?}", start.elapsed());
        }
        Command::Verify { max_n, jobs, catalog, report } => {
            let catalog = match catalog {
                Some(path) => {
                    let text = fs::read_to_string(&path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
                    Some(parse_graph6_lines(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))?)
                }
                None => None,
            };
            let start = Instant::now();
            let result = run_verify(&VerifyConfig { max_n, jobs, catalog })?;
            for (order, connected, time) in &result.timings {
                let kind = if *connected { "connected" } else { "disconnected" };
                eprintln!("n={order} {kind}: {time:.2?}");
            }
            eprintln!("total {:.2?}", start.elapsed());
            let text = serde_json::to_string_pretty(&result)?;
            if let Some(path) = report {
                fs::write(&path, format!("{text}\n")).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            }
            println!("{text}");
            if !result.is_clean() {
                eprintln!("{} discrepancies", result.discrepancies.len());
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
