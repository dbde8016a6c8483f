//! `ocd` — compute, check, and benchmark outer-connected domination
//! polynomials of small simple graphs.

#![forbid(unsafe_code)]

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use ocd_core::{
    EngineError, EnumerationStats, Graph, GraphFamily, OcdPolynomial, VertexSet, check_set,
    ocd_polynomial_bruteforce, ocd_polynomial_fast, parse_edge_list, parse_graph6,
};

const EXIT_NOT_OCD: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

struct CmdError {
    code: u8,
    message: String,
}

impl CmdError {
    fn usage(message: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<EngineError> for CmdError {
    fn from(err: EngineError) -> Self {
        CmdError {
            code: EXIT_GUARD,
            message: err.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "ocd",
    version,
    about = "Exact outer-connected domination polynomials for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the ocd polynomial of a graph.
    Compute(ComputeArgs),
    /// Check whether a vertex set is an outer-connected dominating set.
    Check(CheckArgs),
    /// Print the closed-form polynomial of a named family.
    Family(FamilyArgs),
    /// Time the engines over a deterministic corpus.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineChoice {
    Brute,
    Fast,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Complete,
    Empty,
    Path,
    Cycle,
    Star,
    Kab,
}

#[derive(Args)]
struct ComputeArgs {
    /// Input file, or "-" for stdin.
    #[arg(short, long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = InputFormat::Edgelist)]
    format: InputFormat,
    #[arg(long, value_enum, default_value_t = EngineChoice::Fast)]
    engine: EngineChoice,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
}

#[derive(Args)]
struct CheckArgs {
    /// Input file, or "-" for stdin.
    #[arg(short, long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = InputFormat::Edgelist)]
    format: InputFormat,
    /// Comma-separated 0-based vertex indices, e.g. "0,3".
    #[arg(long)]
    set: String,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    name: FamilyName,
    /// Vertex count for complete/empty/path/cycle.
    #[arg(long)]
    n: Option<usize>,
    /// First part size for kab.
    #[arg(long)]
    a: Option<usize>,
    /// Second part size for kab.
    #[arg(long)]
    b: Option<usize>,
    /// Leaf count for star.
    #[arg(long)]
    leaves: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
    /// Also run the fast engine on the built instance and compare.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Family to sweep; omit to run the seeded random corpus.
    #[arg(long, value_enum)]
    name: Option<FamilyName>,
    /// Sweep upper bound for complete/empty/path/cycle.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Sweep upper bound for star.
    #[arg(long)]
    leaves: Option<usize>,
    /// Seed for the random corpus (default 42).
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Measurement repetitions per graph.
    #[arg(long, default_value_t = 1)]
    reps: usize,
    #[arg(long, value_enum, default_value_t = EngineChoice::Fast)]
    engine: EngineChoice,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    output: TableFormat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => run_compute(&args),
        Command::Check(args) => run_check(&args),
        Command::Family(args) => run_family(&args),
        Command::Bench(args) => run_bench(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn read_input(path: &str) -> Result<String, CmdError> {
    if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| CmdError::usage(format!("reading stdin: {e}")))?;
        Ok(buffer)
    } else {
        fs::read_to_string(path).map_err(|e| CmdError::usage(format!("reading {path}: {e}")))
    }
}

fn load_graph(path: &str, format: InputFormat) -> Result<Graph, CmdError> {
    let text = read_input(path)?;
    match format {
        InputFormat::Edgelist => parse_edge_list(&text).map_err(|e| CmdError::usage(e.to_string())),
        InputFormat::Graph6 => parse_graph6(&text).map_err(|e| CmdError::usage(e.to_string())),
    }
}

struct EngineReport {
    engine: &'static str,
    polynomial: OcdPolynomial,
    stats: EnumerationStats,
}

fn run_engine(g: &Graph, engine: &'static str) -> Result<EngineReport, CmdError> {
    let (polynomial, stats) = match engine {
        "brute" => ocd_polynomial_bruteforce(g)?,
        _ => ocd_polynomial_fast(g),
    };
    Ok(EngineReport {
        engine,
        polynomial,
        stats,
    })
}

fn report_text(report: &EngineReport) -> String {
    format!(
        "engine: {}\npolynomial: {}\nmin_degree: {}\ntotal_ocd_sets: {}\n\
         candidates_visited: {}\nocd_sets_found: {}\nseconds: {:.6}",
        report.engine,
        report.polynomial,
        report.polynomial.min_degree(),
        report.polynomial.total_count(),
        report.stats.candidates_visited,
        report.stats.ocd_sets_found,
        report.stats.elapsed.as_secs_f64(),
    )
}

fn polynomial_json(p: &OcdPolynomial) -> serde_json::Value {
    serde_json::from_str(&p.to_json()).expect("polynomial JSON is valid")
}

fn report_json(report: &EngineReport) -> serde_json::Value {
    json!({
        "engine": report.engine,
        "polynomial": polynomial_json(&report.polynomial),
        "min_degree": report.polynomial.min_degree(),
        "total": report.polynomial.total_count().to_string(),
        "stats": {
            "candidates_visited": report.stats.candidates_visited,
            "ocd_sets_found": report.stats.ocd_sets_found,
            "seconds": report.stats.elapsed.as_secs_f64(),
        },
    })
}

fn run_compute(args: &ComputeArgs) -> Result<u8, CmdError> {
    let graph = load_graph(&args.input, args.format)?;
    let reports = match args.engine {
        EngineChoice::Brute => vec![run_engine(&graph, "brute")?],
        EngineChoice::Fast => vec![run_engine(&graph, "fast")?],
        EngineChoice::Both => vec![run_engine(&graph, "brute")?, run_engine(&graph, "fast")?],
    };
    let agree = reports
        .windows(2)
        .all(|w| w[0].polynomial == w[1].polynomial);

    match args.output {
        OutputFormat::Text => {
            for (i, report) in reports.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                println!("{}", report_text(report));
            }
            if reports.len() > 1 {
                println!("\nengines agree: {agree}");
            }
        }
        OutputFormat::Json => {
            let doc = if reports.len() == 1 {
                report_json(&reports[0])
            } else {
                json!({
                    "results": reports.iter().map(report_json).collect::<Vec<_>>(),
                    "match": agree,
                })
            };
            println!("{doc}");
        }
    }

    if !agree {
        return Err(CmdError {
            code: EXIT_MISMATCH,
            message: "engines disagree; the brute-force oracle wins".into(),
        });
    }
    Ok(0)
}

fn parse_vertex_set(text: &str, n: usize) -> Result<VertexSet, CmdError> {
    let mut set = VertexSet::empty();
    if text.trim().is_empty() {
        return Ok(set);
    }
    for token in text.split(',') {
        let token = token.trim();
        let v: usize = token
            .parse()
            .map_err(|_| CmdError::usage(format!("invalid vertex index {token:?}")))?;
        if v >= n {
            return Err(CmdError::usage(format!(
                "vertex {v} out of range for {n} vertices"
            )));
        }
        if set.contains(v) {
            return Err(CmdError::usage(format!("duplicate vertex {v} in set")));
        }
        set.insert(v);
    }
    Ok(set)
}

fn run_check(args: &CheckArgs) -> Result<u8, CmdError> {
    let graph = load_graph(&args.input, args.format)?;
    let set = parse_vertex_set(&args.set, graph.n())?;
    let verdict = check_set(&graph, set);
    println!("set: {set}");
    println!("dominating: {}", verdict.dominating);
    println!("outer_connected: {}", verdict.outer_connected);
    println!("ocd: {}", verdict.ocd);
    if let Some(v) = verdict.undominated {
        println!("witness: vertex {v} is outside the set and has no neighbor in it");
    }
    if let Some((u, w)) = verdict.split_pair {
        println!("witness: complement vertices {u} and {w} lie in different components");
    }
    Ok(if verdict.ocd { 0 } else { EXIT_NOT_OCD })
}

fn require(value: Option<usize>, flag: &str, family: &str) -> Result<usize, CmdError> {
    value.ok_or_else(|| CmdError::usage(format!("family {family} requires {flag}")))
}

fn resolve_family(
    name: FamilyName,
    n: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    leaves: Option<usize>,
) -> Result<GraphFamily, CmdError> {
    Ok(match name {
        FamilyName::Complete => GraphFamily::Complete(require(n, "--n", "complete")?),
        FamilyName::Empty => GraphFamily::Empty(require(n, "--n", "empty")?),
        FamilyName::Path => GraphFamily::Path(require(n, "--n", "path")?),
        FamilyName::Cycle => GraphFamily::Cycle(require(n, "--n", "cycle")?),
        FamilyName::Star => GraphFamily::Star(require(leaves, "--leaves", "star")?),
        FamilyName::Kab => {
            GraphFamily::CompleteBipartite(require(a, "--a", "kab")?, require(b, "--b", "kab")?)
        }
    })
}

fn run_family(args: &FamilyArgs) -> Result<u8, CmdError> {
    let family = resolve_family(args.name, args.n, args.a, args.b, args.leaves)?;
    let polynomial = family
        .polynomial()
        .map_err(|e| CmdError::usage(e.to_string()))?;

    let verified = if args.verify {
        let graph = family.build().map_err(|e| CmdError::usage(e.to_string()))?;
        let (engine, _) = ocd_polynomial_fast(&graph);
        if engine != polynomial {
            return Err(CmdError {
                code: EXIT_MISMATCH,
                message: format!(
                    "closed form {polynomial} disagrees with the fast engine {engine}"
                ),
            });
        }
        true
    } else {
        false
    };

    match args.output {
        OutputFormat::Text => {
            println!("{polynomial}");
            if verified {
                println!("verify: fast engine agrees");
            }
        }
        OutputFormat::Json => {
            let mut doc = json!({
                "family": family.name(),
                "vertices": family.vertex_count(),
                "polynomial": polynomial_json(&polynomial),
            });
            if args.verify {
                doc["verified"] = json!(true);
            }
            println!("{doc}");
        }
    }
    Ok(0)
}

const BENCH_RANDOM_SIZES: [usize; 4] = [8, 10, 12, 14];
const BENCH_RANDOM_PROBABILITIES: [f64; 4] = [0.1, 0.3, 0.5, 0.8];

fn bench_corpus(args: &BenchArgs) -> Result<Vec<(String, Graph)>, CmdError> {
    let mut corpus = Vec::new();
    match args.name {
        Some(FamilyName::Kab) => {
            let family = resolve_family(FamilyName::Kab, None, args.a, args.b, None)?;
            let graph = family.build().map_err(|e| CmdError::usage(e.to_string()))?;
            corpus.push((format!("kab-{}x{}", args.a.unwrap(), args.b.unwrap()), graph));
        }
        Some(name) => {
            let (min, max) = match name {
                FamilyName::Star => (1, require(args.leaves, "--leaves", "star")?),
                FamilyName::Cycle => (3, require(args.n, "--n", "cycle")?),
                _ => (1, require(args.n, "--n", "family sweep")?),
            };
            for k in min..=max {
                let family = resolve_family(name, Some(k), None, None, Some(k))?;
                let graph = family.build().map_err(|e| CmdError::usage(e.to_string()))?;
                corpus.push((format!("{}-{k}", family.name()), graph));
            }
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            for &n in &BENCH_RANDOM_SIZES {
                for &p in &BENCH_RANDOM_PROBABILITIES {
                    let graph = Graph::random_gnp(&mut rng, n, p)
                        .map_err(|e| CmdError::usage(e.to_string()))?;
                    corpus.push((format!("gnp-n{n}-p{p:.2}"), graph));
                }
            }
        }
    }
    Ok(corpus)
}

fn run_bench(args: &BenchArgs) -> Result<u8, CmdError> {
    let corpus = bench_corpus(args)?;
    let engines: &[&'static str] = match args.engine {
        EngineChoice::Brute => &["brute"],
        EngineChoice::Fast => &["fast"],
        EngineChoice::Both => &["brute", "fast"],
    };

    let header = ["graph_id", "n", "edges", "engine", "candidates", "ocd_sets", "seconds"];
    match args.output {
        TableFormat::Csv => println!("{}", header.join(",")),
        TableFormat::Text => println!(
            "{:<16} {:>3} {:>6} {:>6} {:>12} {:>12} {:>10}",
            header[0], header[1], header[2], header[3], header[4], header[5], header[6]
        ),
    }

    for (graph_id, graph) in &corpus {
        for _ in 0..args.reps {
            for &engine in engines {
                let report = run_engine(graph, engine)?;
                let seconds = report.stats.elapsed.as_secs_f64();
                match args.output {
                    TableFormat::Csv => println!(
                        "{graph_id},{},{},{engine},{},{},{seconds:.6}",
                        graph.n(),
                        graph.edge_count(),
                        report.stats.candidates_visited,
                        report.stats.ocd_sets_found,
                    ),
                    TableFormat::Text => println!(
                        "{graph_id:<16} {:>3} {:>6} {engine:>6} {:>12} {:>12} {seconds:>10.6}",
                        graph.n(),
                        graph.edge_count(),
                        report.stats.candidates_visited,
                        report.stats.ocd_sets_found,
                    ),
                }
            }
        }
    }
    Ok(0)
}
