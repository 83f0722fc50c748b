use std::path::PathBuf;

use clap::{Args, ValueEnum};
use tdtc_core::closed_forms::tdtc_certificate;
use tdtc_core::io::{self, CertificateDoc};
use tdtc_core::{solvers, total_graph};

use crate::exit::{CliError, CliResult, BUDGET, OK};
use crate::source::{emit, BudgetArgs, GraphSource};
use crate::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Artifact {
    /// The graph itself (edges or dot).
    Graph,
    /// Its total graph with object labels (dot or edges).
    TotalGraph,
    /// Total-graph vertex to object map (json).
    Labels,
    /// An optimal TDTC (json or dot): the closed-form one for families,
    /// the exact solver's otherwise.
    Certificate,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum)]
    artifact: Artifact,
    /// Defaults: edges for graph, dot for total-graph, json otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(args: ExportArgs) -> CliResult {
    let loaded = args.source.load()?;
    let g = &loaded.graph;
    let format = args.format.unwrap_or(match args.artifact {
        Artifact::Graph => Format::Edges,
        Artifact::TotalGraph => Format::Dot,
        _ => Format::Json,
    });
    let bad = || CliError::usage(format!("--artifact {:?} cannot be written as {format:?}", args.artifact));
    let mut code = OK;
    let text = match (args.artifact, format) {
        (Artifact::Graph, Format::Edges) => io::write_edge_list(g),
        (Artifact::Graph, Format::Dot) => io::to_dot(g, "G"),
        (Artifact::TotalGraph, Format::Dot) => io::total_to_dot(&total_graph(g), "T"),
        (Artifact::TotalGraph, Format::Edges) => io::write_edge_list(&total_graph(g).graph),
        (Artifact::Labels, Format::Json) => {
            serde_json::to_string_pretty(&io::label_map(&total_graph(g))).expect("json") + "\n"
        }
        (Artifact::Certificate, Format::Json | Format::Dot) => {
            let (coloring, provenance) = match loaded.instance {
                Some(inst) => {
                    let c = tdtc_certificate(inst.family, inst.n)?;
                    (c.coloring, c.provenance.as_str())
                }
                None => {
                    let r = solvers::tdtc_number(g, args.budget.budget()?)?;
                    if !r.proven_optimal {
                        eprintln!("budget exhausted: the coloring is not proven optimal");
                        code = BUDGET;
                    }
                    let c = r.certificate.as_coloring().expect("coloring certificate").clone();
                    (c, "exact-search")
                }
            };
            if format == Format::Json {
                CertificateDoc::coloring(&coloring, Some(provenance)).to_json()
            } else {
                io::coloring_to_dot(&total_graph(g), &coloring, "T")?
            }
        }
        _ => return Err(bad()),
    };
    emit(args.out.as_ref(), &text)?;
    Ok(code)
}
