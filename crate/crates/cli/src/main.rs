//! `whitney`: invariants and identity checks for the clique complexes of
//! finite simple graphs.
//!
//! Exit codes: 0 success, 1 identity violation, 2 usage error,
//! 3 simplex budget exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use whitney::ring::RingElement;
use whitney::verify::{Suite, VerifyConfig};
use whitney::{Error, Limits};

mod render;

use render::Format;

#[derive(Parser)]
#[command(
    name = "whitney",
    version,
    about = "Exact clique-complex invariants of finite simple graphs: curvature, indices, homology, Wu characteristic, and the strong-product identity suites",
    max_term_width = 100
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Size of the worker pool for verification batches (default: all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Simplex budget per enumeration (default 10^7; counting suites
    /// default to 10^8)
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a graph-algebra expression and print selected invariants.
    ///
    /// Expressions: K(n), C(n), P(n), Star(k), load("file"),
    /// random(n,m,seed) combined with +, -, * and parentheses; * is the
    /// strong product, + the disjoint union.
    Eval {
        /// Expression, e.g. "K(4)*Star(4)"
        expr: String,
        /// Print the f-vector (extended linearly over ring terms)
        #[arg(long)]
        fvector: bool,
        /// Print the Euler characteristic
        #[arg(long)]
        chi: bool,
        /// Print the curvature at every vertex of every term
        #[arg(long)]
        curvature: bool,
        /// Print Betti numbers (extended linearly over ring terms)
        #[arg(long)]
        betti: bool,
        /// Print the Wu characteristic
        #[arg(long)]
        wu: bool,
        /// Print Poincaré-Hopf indices for a seeded random coloring
        #[arg(long)]
        indices: bool,
        /// Lefschetz data for an endomorphism given as a JSON map of
        /// vertex names (single-graph expressions only)
        #[arg(long, value_name = "FILE")]
        lefschetz_endo: Option<PathBuf>,
        /// Seed for --indices
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },

    /// Run a verification suite over a seeded corpus.
    ///
    /// Suites: theorem1, index-product, gauss-bonnet, poincare-hopf,
    /// kunneth, lefschetz, cylinder, wu-product, or "all".
    Verify {
        suite: String,
        /// Number of random cases (suite default when omitted)
        #[arg(long = "random", value_name = "N")]
        random: Option<usize>,
        /// Vertex bound override for the random corpora
        #[arg(long)]
        max_vertices: Option<u32>,
        /// Edge bound override for the random corpora
        #[arg(long)]
        max_edges: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },

    /// Monte-Carlo index expectation at every vertex of a graph, with the
    /// exact curvature it converges to.
    Expectation {
        /// Expression evaluating to a single graph
        expr: String,
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.workers == Some(0) {
        eprintln!("error: --workers must be at least 1");
        return ExitCode::from(2);
    }
    // worker count comes from the flag alone, never from the environment
    let workers = cli.workers.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Budget { .. } => 3,
                _ => 2,
            })
        }
    }
}

fn run(cli: &Cli) -> whitney::Result<ExitCode> {
    let limits = Limits::new(cli.budget.unwrap_or(Limits::DEFAULT_MAX_SIMPLICES));
    match &cli.command {
        Command::Eval {
            expr,
            fvector,
            chi,
            curvature,
            betti,
            wu,
            indices,
            lefschetz_endo,
            seed,
        } => {
            let ast = whitney::expr::parse(expr)?;
            let element = whitney::expr::evaluate(&ast)?;
            let request = render::EvalRequest {
                expression: ast.to_string(),
                fvector: *fvector,
                chi: *chi,
                curvature: *curvature,
                betti: *betti,
                wu: *wu,
                indices: *indices,
                lefschetz_endo: lefschetz_endo.clone(),
                seed: *seed,
            };
            let doc = render::eval_document(&element, &request, &limits)?;
            print!("{}", render::render_eval(&doc, cli.format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            random,
            max_vertices,
            max_edges,
            seed,
        } => {
            let config = VerifyConfig {
                cases: *random,
                seed: *seed,
                max_vertices: *max_vertices,
                max_edges: *max_edges,
                budget: cli.budget,
            };
            let suites: Vec<Suite> = if suite == "all" {
                Suite::all()
            } else {
                match Suite::from_name(suite) {
                    Some(s) => vec![s],
                    None => {
                        eprintln!(
                            "error: unknown suite {suite:?}; valid suites: {}, all",
                            Suite::all()
                                .iter()
                                .map(|s| s.name())
                                .collect::<Vec<_>>()
                                .join(", ")
                        );
                        return Ok(ExitCode::from(2));
                    }
                }
            };
            let mut all_passed = true;
            let mut out = String::new();
            for s in suites {
                let report = whitney::verify::run_suite(s, &config)?;
                all_passed &= report.passed;
                out.push_str(&render::render_suite(&report, cli.format));
            }
            print!("{out}");
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Expectation { expr, samples, seed } => {
            if *samples == 0 {
                eprintln!("error: --samples must be at least 1");
                return Ok(ExitCode::from(2));
            }
            let ast = whitney::expr::parse(expr)?;
            let element = whitney::expr::evaluate(&ast)?;
            let graph = match single_graph(&element) {
                Some(g) => g,
                None => {
                    eprintln!(
                        "error: expectation needs a single graph with coefficient 1, got {element}"
                    );
                    return Ok(ExitCode::from(2));
                }
            };
            let doc = render::expectation_document(graph, ast.to_string(), *samples, *seed, &limits)?;
            print!("{}", render::render_expectation(&doc, cli.format));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn single_graph(e: &RingElement) -> Option<&whitney::Graph> {
    e.as_single_graph()
}
