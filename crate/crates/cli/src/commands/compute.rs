use std::path::PathBuf;

use clap::Args;
use serde_json::json;
use tdtc_core::io::{self, CertificateDoc};
use tdtc_core::verifiers::Universe;
use tdtc_core::{total_graph, Certificate, Graph, InvariantResult, ObjectId};

use crate::exit::{CliError, CliResult, BUDGET, OK};
use crate::invariant::Invariant;
use crate::source::{emit, BudgetArgs, GraphSource};
use crate::Format;

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum)]
    invariant: Invariant,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Output format: text, json or dot.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the certificate as JSON to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(args: ComputeArgs) -> CliResult {
    let loaded = args.source.load()?;
    let g = &loaded.graph;
    let r = args.invariant.solve(g, args.budget.budget()?)?;
    let doc = certificate_doc(args.invariant.universe(), &r.certificate);
    let text = match args.format {
        Format::Text => text(&loaded.name, args.invariant, &r),
        Format::Json => {
            let v = json!({
                "graph": loaded.name,
                "invariant": args.invariant.name(),
                "value": r.value,
                "proven_optimal": r.proven_optimal,
                "nodes_explored": r.nodes_explored,
                "elapsed_ms": r.elapsed.as_secs_f64() * 1e3,
                "certificate": doc,
            });
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
        Format::Dot => dot(g, args.invariant.universe(), &r.certificate)?,
        Format::Csv | Format::Edges => return Err(CliError::usage("compute supports --format text, json or dot")),
    };
    print!("{text}");
    if let Some(path) = &args.out {
        emit(Some(path), &doc.to_json())?;
    }
    if r.proven_optimal {
        Ok(OK)
    } else {
        eprintln!("budget exhausted: {} is only a bound", r.value);
        Ok(BUDGET)
    }
}

pub fn certificate_doc(universe: Universe, c: &Certificate) -> CertificateDoc {
    match c {
        Certificate::Set(s) => CertificateDoc::set(universe, s, None),
        Certificate::Coloring(c) => CertificateDoc::coloring(c, None),
    }
}

pub fn format_classes(classes: &[Vec<ObjectId>]) -> String {
    classes
        .iter()
        .map(|c| format!("{{{}}}", join(c)))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn join(objects: &[ObjectId]) -> String {
    objects.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn text(name: &str, inv: Invariant, r: &InvariantResult) -> String {
    let cert = match &r.certificate {
        Certificate::Set(s) => format!("{{{}}}", join(s)),
        Certificate::Coloring(c) => format_classes(&c.classes),
    };
    format!(
        "{name}: {} = {}\nproven optimal: {} ({} nodes, {:.1} ms)\ncertificate: {cert}\n",
        inv.name(),
        r.value,
        if r.proven_optimal { "yes" } else { "no, budget exhausted" },
        r.nodes_explored,
        r.elapsed.as_secs_f64() * 1e3,
    )
}

fn dot(g: &Graph, universe: Universe, c: &Certificate) -> CliResult<String> {
    Ok(match (universe, c) {
        (Universe::Mixed, Certificate::Coloring(c)) => io::coloring_to_dot(&total_graph(g), c, "T")?,
        (Universe::Vertices, Certificate::Coloring(c)) => io::vertex_coloring_to_dot(g, c, "G")?,
        (Universe::Mixed, Certificate::Set(s)) => {
            let t = total_graph(g);
            io::set_to_dot(&t.graph, &t.indices_of(s)?, "T", |v| t.label(v).to_string())
        }
        (Universe::Vertices, Certificate::Set(s)) => {
            let idx: Vec<usize> = s
                .iter()
                .filter_map(|o| match o {
                    ObjectId::Vertex(i) => Some(i - 1),
                    ObjectId::Edge(..) => None,
                })
                .collect();
            io::set_to_dot(g, &idx, "G", |v| ObjectId::Vertex(v + 1).to_string())
        }
    })
}
