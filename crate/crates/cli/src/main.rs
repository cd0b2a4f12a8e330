use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hadwiger_core::harness::{scan, Mode, ScanOptions, Source};
use hadwiger_core::treedec::td_format;
use hadwiger_core::{
    chromatic_number, color_by_decomposition, decompose, find_clique_minor, find_subdivision, verify_decomposition,
    width, Error, Generator, Graph, SearchBudget, Strategy,
};
use serde_json::json;

const USAGE: u8 = 1;
const IO_OR_PARSE: u8 = 2;
const COUNTEREXAMPLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hadwiger",
    version,
    about = "Clique minors, tree decompositions and colorings of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a graph greedily along a tree decomposition.
    Color {
        /// graph6 string or gen:NAME[:K]
        graph: String,
        #[arg(long, default_value = "min-fill")]
        strategy: Strategy,
        /// Also write the decomposition used, in PACE .td format.
        #[arg(long, value_name = "PATH")]
        emit_td: Option<PathBuf>,
    },
    /// Build a tree decomposition, contract nested bags, and print it in PACE .td format.
    Decompose {
        graph: String,
        #[arg(long)]
        strategy: Strategy,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Check a PACE .td file against a graph.
    VerifyTd {
        #[arg(long)]
        graph: String,
        #[arg(long, value_name = "PATH")]
        td: PathBuf,
    },
    /// Search for a K_k minor, or a K_k subdivision with --subdivision.
    Minor {
        graph: String,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        subdivision: bool,
    },
    /// Chromatic number with an optimal coloring.
    Chi { graph: String },
    /// Scan graphs for counterexamples to the Hadwiger conjectures.
    Hunt(HuntArgs),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["n", "input"]))]
struct HuntArgs {
    /// Every graph on 1..=N vertices.
    #[arg(long)]
    n: Option<usize>,
    /// graph6 file, one graph per line.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long, default_value = "both", value_parser = parse_mode)]
    mode: Mode,
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
    #[arg(long)]
    resume: bool,
    #[arg(long, value_name = "W")]
    workers: Option<usize>,
    /// Node cap for each exact minor search.
    #[arg(long, value_name = "NODES")]
    budget: Option<u64>,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure together with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::Json(_) | Error::MalformedGraph6(_) | Error::MalformedTd { .. } => IO_OR_PARSE,
            _ => USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure {
        code: IO_OR_PARSE,
        message: format!("{}: {e}", path.display()),
    }
}

/// Reads `gen:NAME[:K]` or a graph6 string.
fn parse_graph(text: &str) -> Result<Graph, Failure> {
    let Some(family) = text.strip_prefix("gen:") else {
        return Ok(Graph::from_graph6(text.trim())?);
    };
    let (name, k) = match family.split_once(':') {
        Some((name, k)) => {
            let k = k.parse::<usize>().map_err(|_| Failure {
                code: USAGE,
                message: format!("bad size `{k}` in `{text}`"),
            })?;
            (name, k)
        }
        None => (family, 0),
    };
    let generator: Generator = name.parse()?;
    Ok(generator.build(k)?)
}

fn write_or_print(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_failure(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Color {
            graph,
            strategy,
            emit_td,
        } => {
            let g = parse_graph(&graph)?;
            let td = decompose(&g, strategy)?;
            let coloring = color_by_decomposition(&g, &td)?;
            log::info!("{} colors, bag width {}", coloring.num_colors(), td.bag_width());
            if let Some(path) = &emit_td {
                fs::write(path, td_format::encode(&td)).map_err(|e| io_failure(path, e))?;
            }
            println!("{}", json!({ "colors": coloring.colors }));
        }
        Command::Decompose { graph, strategy, out } => {
            let g = parse_graph(&graph)?;
            let td = decompose(&g, strategy)?.simplify();
            write_or_print(out.as_ref(), &td_format::encode(&td))?;
        }
        Command::VerifyTd { graph, td } => {
            let g = parse_graph(&graph)?;
            let text = fs::read_to_string(&td).map_err(|e| io_failure(&td, e))?;
            let decomposition = td_format::decode(&text)?;
            let report = verify_decomposition(&g, &decomposition);
            let w = width(&decomposition);
            println!("W1: {}", report.w1);
            println!("W2: {}", report.w2);
            println!("W3: {}", report.w3);
            println!("bag_width: {}", w.bag_width);
            let bound = if w.chain_width_exact { "" } else { " (lower bound)" };
            println!("chain_width: {}{bound}", w.chain_width);
            println!("valid: {}", report.all_pass());
        }
        Command::Minor { graph, k, subdivision } => {
            let g = parse_graph(&graph)?;
            let cert = if subdivision {
                find_subdivision(&g, k)?
                    .map(|c| serde_json::to_value(c).map_err(Error::from))
                    .transpose()?
            } else {
                find_clique_minor(&g, k)?
                    .map(|c| serde_json::to_value(c).map_err(Error::from))
                    .transpose()?
            };
            match cert {
                Some(value) => println!("{value}"),
                None => {
                    log::info!("no K{k} {}", if subdivision { "subdivision" } else { "minor" });
                    println!("null");
                }
            }
        }
        Command::Chi { graph } => {
            let g = parse_graph(&graph)?;
            let (chi, coloring) = chromatic_number(&g)?;
            println!("{}", json!({ "chi": chi, "colors": coloring.colors }));
        }
        Command::Hunt(args) => {
            let source = match (args.n, args.input) {
                (Some(n), _) => Source::Builtin { max_n: n },
                (None, Some(path)) => Source::Graph6File(path),
                (None, None) => unreachable!("clap requires one source"),
            };
            let mut opts = ScanOptions::new(args.out);
            opts.mode = args.mode;
            opts.resume = args.resume;
            opts.workers = args
                .workers
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()));
            opts.budget = args.budget.map(SearchBudget::nodes);
            let report = scan(&source, &opts)?;
            println!("{report}");
            if report.has_counterexample() {
                return Ok(COUNTEREXAMPLE);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
