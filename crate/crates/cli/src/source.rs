use std::path::PathBuf;
use std::time::Duration;

use clap::Args;
use tdtc_core::closed_forms::{Family, FamilyInstance};
use tdtc_core::{io, Graph, SearchBudget};

use crate::exit::{CliError, CliResult};

/// Where the input graph comes from: a family member or an edge-list file.
#[derive(Args, Debug, Clone)]
pub struct GraphSource {
    /// Graph family.
    #[arg(long, value_parser = parse_family, requires = "n", conflicts_with = "graph")]
    pub family: Option<Family>,
    /// Order of the family member.
    #[arg(long, requires = "family")]
    pub n: Option<usize>,
    /// Edge-list file: "n m" then m lines "i j", 1-based.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

pub struct Loaded {
    pub graph: Graph,
    pub name: String,
    pub instance: Option<FamilyInstance>,
}

impl GraphSource {
    pub fn load(&self) -> CliResult<Loaded> {
        match (&self.family, self.n, &self.graph) {
            (Some(f), Some(n), None) => {
                let instance = FamilyInstance::new(*f, n)?;
                Ok(Loaded {
                    graph: instance.graph(),
                    name: instance.to_string(),
                    instance: Some(instance),
                })
            }
            (None, None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
                let graph = io::parse_edge_list(&text)
                    .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
                Ok(Loaded {
                    graph,
                    name: path.display().to_string(),
                    instance: None,
                })
            }
            _ => Err(CliError::usage("give either --family and --n, or --graph")),
        }
    }
}

pub fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: tdtc_core::Error| e.to_string())
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BudgetArgs {
    /// Stop each search after this many nodes.
    #[arg(long)]
    pub max_nodes: Option<u64>,
    /// Stop each search after this many seconds.
    #[arg(long)]
    pub max_time: Option<f64>,
}

impl BudgetArgs {
    pub fn budget(&self) -> CliResult<SearchBudget> {
        let max_time = match self.max_time {
            Some(t) if !(t.is_finite() && t >= 0.0) => {
                return Err(CliError::usage("--max-time must be a nonnegative number of seconds"))
            }
            t => t.map(Duration::from_secs_f64),
        };
        Ok(SearchBudget {
            max_nodes: self.max_nodes,
            max_time,
        })
    }
}

/// Writes to `--out` when given, else to stdout.
pub fn emit(out: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
