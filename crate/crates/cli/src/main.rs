//! Command-line surface over the edgebetti library: graph ingestion and
//! generators, Betti tables, strand reports, census, bounds, the
//! linear-resolution test, and the exhaustive small-graph verifier.
//!
//! Exit codes: 0 success, 2 input error, 3 resource cap exceeded,
//! 4 internal invariant violation.

mod input;
mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};

use edgebetti::betti::{
    has_linear_resolution, has_linear_resolution_certified, strand_report, triangle_lower_bound,
    HochsterOracle, DEFAULT_ORACLE_CAP,
};
use edgebetti::census::{census_report, count_cliques};
use edgebetti::homology::Field;
use edgebetti::verify::{cross_check, verify_exhaustive, VerifyOptions};
use edgebetti::EngineError;

use input::GraphInput;

#[derive(Parser)]
#[command(
    name = "edgebetti",
    version,
    about = "Graded Betti numbers of edge ideals: homology oracle, strand formulas, and bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct EngineArgs {
    /// Field characteristic: 0 for the rationals, or a prime
    #[arg(long, default_value_t = 0, value_name = "CHAR")]
    field: u64,
    /// Vertex cap for the homology oracle
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP, value_name = "N")]
    cap: usize,
    /// Cap engine parallelism (default: machine parallelism)
    #[arg(long, value_name = "T")]
    threads: Option<usize>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Full graded Betti table of the edge ideal, via the homology oracle
    Betti {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Linear strand report: oracle, formulas, and bounds per index
    Strand {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Largest homological index to report
        #[arg(long, value_name = "K")]
        max_i: Option<u32>,
    },
    /// Induced-subgraph census consumed by the strand formulas
    Census {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run every cross-check identity on one graph
    Check {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Lower and upper bounds for the linear strand
    Bounds {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        output: OutputArgs,
        /// Largest homological index to report
        #[arg(long, value_name = "K")]
        max_i: Option<u32>,
    },
    /// Lower bound on the number of triangles
    Triangles {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Linear-resolution test: is the complement chordal?
    Resolution {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        engine: EngineArgs,
        /// Additionally certify against the oracle's off-strand entries
        #[arg(long)]
        certify: bool,
    },
    /// Exhaustively verify every identity on all labeled graphs up to a size
    Verify {
        /// Largest vertex count to enumerate (at most 7)
        #[arg(long, default_value_t = 5, value_name = "N")]
        max_n: usize,
        #[command(flatten)]
        engine: EngineArgs,
    },
}

pub enum CliError {
    Input(String),
    Resource(String),
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Resource(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> CliError {
        match e {
            EngineError::OracleCapExceeded { .. } => CliError::Resource(e.to_string()),
            EngineError::LexSegmentTooLong { .. } => CliError::Input(e.to_string()),
            EngineError::InvariantViolation { .. } => CliError::Internal(e.to_string()),
        }
    }
}

fn parse_field(characteristic: u64) -> Result<Field, CliError> {
    Field::from_characteristic(characteristic).map_err(|e| CliError::Input(e.to_string()))
}

fn configure_threads(threads: Option<usize>) {
    if let Some(t) = threads {
        if edgebetti::configure_thread_pool(t).is_err() {
            eprintln!("warning: thread pool already initialized; --threads ignored");
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Betti { input, engine, output } => {
            configure_threads(engine.threads);
            let field = parse_field(engine.field)?;
            let g = input.resolve()?;
            let table = HochsterOracle::new(field).with_cap(engine.cap).compute(&g)?;
            print!("{}", render::betti(&table, output.format)?);
            Ok(())
        }
        Command::Strand { input, engine, output, max_i } => {
            configure_threads(engine.threads);
            let field = parse_field(engine.field)?;
            let g = input.resolve()?;
            let report = strand_report(&g, field, engine.cap, max_i)?;
            print!("{}", render::strand(&report, output.format)?);
            Ok(())
        }
        Command::Census { input, output } => {
            let g = input.resolve()?;
            let report = census_report(&g);
            print!("{}", render::census(&report, output.format)?);
            Ok(())
        }
        Command::Check { input, engine } => {
            configure_threads(engine.threads);
            let field = parse_field(engine.field)?;
            let g = input.resolve()?;
            if g.n() > engine.cap {
                return Err(CliError::Resource(
                    EngineError::OracleCapExceeded { n: g.n(), cap: engine.cap }.to_string(),
                ));
            }
            match cross_check(&g, field, engine.cap) {
                Ok(()) => {
                    println!("all cross-checks passed on {} vertices, {} edges", g.n(), g.edge_count());
                    Ok(())
                }
                Err(v) => Err(CliError::Internal(v.to_string())),
            }
        }
        Command::Bounds { input, output, max_i } => {
            let g = input.resolve()?;
            print!("{}", render::bounds(&g, max_i, output.format)?);
            Ok(())
        }
        Command::Triangles { input, output } => {
            let g = input.resolve()?;
            let bound = triangle_lower_bound(&g);
            let triangles = count_cliques(&g, 3);
            if bound > triangles {
                return Err(CliError::Internal(format!(
                    "triangle bound {bound} exceeds actual triangle count {triangles}"
                )));
            }
            print!("{}", render::triangles(bound, triangles, output.format)?);
            Ok(())
        }
        Command::Resolution { input, engine, certify } => {
            configure_threads(engine.threads);
            let field = parse_field(engine.field)?;
            let g = input.resolve()?;
            if certify {
                let cert = has_linear_resolution_certified(&g, field, engine.cap)?;
                println!(
                    "linear resolution: {} (complement chordal: {}, off-strand entries vanish: {})",
                    cert.chordal_complement, cert.chordal_complement, cert.off_strand_vanishes
                );
            } else {
                println!("linear resolution: {}", has_linear_resolution(&g));
            }
            Ok(())
        }
        Command::Verify { max_n, engine } => {
            configure_threads(engine.threads);
            let field = parse_field(engine.field)?;
            if max_n > 7 {
                return Err(CliError::Input(format!(
                    "--max-n {max_n} exceeds the exhaustive limit of 7 (2^21 graphs)"
                )));
            }
            let opts = VerifyOptions { max_n, field, cap: engine.cap };
            match verify_exhaustive(opts) {
                Ok(summary) => {
                    for &(n, count) in &summary.per_n {
                        println!("n = {n}: {count} labeled graphs checked");
                    }
                    println!(
                        "verified {} graphs on 1..={max_n} vertices: all checks passed",
                        summary.total()
                    );
                    Ok(())
                }
                Err(v) => Err(CliError::Internal(v.to_string())),
            }
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.message());
        std::process::exit(e.exit_code());
    }
}
