//! Graph input resolution: exactly one source, either a file or a generator.

use std::path::PathBuf;

use clap::Args;

use edgebetti::generate;
use edgebetti::graph::Graph;
use edgebetti::parse::{parse_edge_list, parse_json_graph};

use crate::CliError;

#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Edge-list file: lines `u v` (1-based), optional `n <count>` header,
    /// `#` comments
    #[arg(long, value_name = "PATH")]
    edges: Option<PathBuf>,
    /// JSON graph file: {"n": int, "edges": [[u, v], ..]}
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Complete graph on N vertices
    #[arg(long, value_name = "N")]
    complete: Option<usize>,
    /// Complete bipartite graph with part sizes A and B
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    complete_bipartite: Option<Vec<usize>>,
    /// Cycle on N vertices (N >= 3)
    #[arg(long, value_name = "N")]
    cycle: Option<usize>,
    /// Path on N vertices
    #[arg(long, value_name = "N")]
    path: Option<usize>,
    /// Wheel over a rim cycle of length N (N + 1 vertices)
    #[arg(long, value_name = "N")]
    wheel: Option<usize>,
    /// Erdos-Renyi G(n, p) from a 64-bit seed (ChaCha8)
    #[arg(long, num_args = 3, value_names = ["N", "P", "SEED"])]
    random: Option<Vec<String>>,
    /// Uniform random labeled tree from a 64-bit seed (ChaCha8)
    #[arg(long, num_args = 2, value_names = ["N", "SEED"])]
    random_tree: Option<Vec<String>>,
}

fn input_err(e: impl ToString) -> CliError {
    CliError::Input(e.to_string())
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| input_err(format!("cannot read {}: {e}", path.display())))
}

fn parse_as<T: std::str::FromStr>(raw: &str, what: &str) -> Result<T, CliError> {
    raw.parse()
        .map_err(|_| input_err(format!("bad {what}: {raw:?}")))
}

impl GraphInput {
    pub fn resolve(&self) -> Result<Graph, CliError> {
        if let Some(path) = &self.edges {
            return parse_edge_list(&read_file(path)?).map_err(input_err);
        }
        if let Some(path) = &self.json {
            return parse_json_graph(&read_file(path)?).map_err(input_err);
        }
        if let Some(n) = self.complete {
            return generate::complete(n).map_err(input_err);
        }
        if let Some(ab) = &self.complete_bipartite {
            return generate::complete_bipartite(ab[0], ab[1]).map_err(input_err);
        }
        if let Some(n) = self.cycle {
            return generate::cycle(n).map_err(input_err);
        }
        if let Some(n) = self.path {
            return generate::path(n).map_err(input_err);
        }
        if let Some(n) = self.wheel {
            return generate::wheel(n).map_err(input_err);
        }
        if let Some(spec) = &self.random {
            let n = parse_as::<usize>(&spec[0], "vertex count")?;
            let p = parse_as::<f64>(&spec[1], "edge probability")?;
            let seed = parse_as::<u64>(&spec[2], "seed")?;
            return generate::gnp(n, p, seed).map_err(input_err);
        }
        if let Some(spec) = &self.random_tree {
            let n = parse_as::<usize>(&spec[0], "vertex count")?;
            let seed = parse_as::<u64>(&spec[1], "seed")?;
            return generate::random_tree(n, seed).map_err(input_err);
        }
        unreachable!("clap enforces exactly one input source")
    }
}
