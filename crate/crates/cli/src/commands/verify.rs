use std::path::PathBuf;

use clap::{Args, ValueEnum};
use tdtc_core::io::parse_certificate;
use tdtc_core::verifiers::{self, Coloring, Universe};
use tdtc_core::{Graph, ObjectId};

use crate::exit::{CliError, CliResult, FAILED, OK};
use crate::source::GraphSource;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Proper vertex coloring.
    Proper,
    /// Total coloring of vertices and edges.
    Total,
    /// Total dominator coloring of the vertices.
    Tdc,
    /// Total dominator total coloring of vertices and edges.
    Tdtc,
    /// Total dominating vertex set.
    Tds,
    /// Total mixed dominating set of vertices and edges.
    Tmds,
    /// Independent vertex set.
    Independent,
    /// Mixed independent set of vertices and edges.
    MixedIndependent,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Certificate JSON: {"universe", "classes"} or {"universe", "set"}.
    #[arg(long)]
    certificate: PathBuf,
    /// What to check; inferred from the certificate when omitted
    /// (tdc/tdtc for colorings, tds/tmds for sets).
    #[arg(long, value_enum)]
    kind: Option<Kind>,
}

pub fn run(args: VerifyArgs) -> CliResult {
    let loaded = args.source.load()?;
    let text = std::fs::read_to_string(&args.certificate)
        .map_err(|e| CliError::usage(format!("{}: {e}", args.certificate.display())))?;
    let doc = parse_certificate(&text)
        .map_err(|e| CliError::usage(format!("{}: {e}", args.certificate.display())))?;
    let kind = args.kind.unwrap_or(match (doc.universe, doc.classes.is_some()) {
        (Universe::Vertices, true) => Kind::Tdc,
        (Universe::Mixed, true) => Kind::Tdtc,
        (Universe::Vertices, false) => Kind::Tds,
        (Universe::Mixed, false) => Kind::Tmds,
    });
    let g = &loaded.graph;
    let violation = match kind {
        Kind::Proper | Kind::Total | Kind::Tdc | Kind::Tdtc => {
            let c = doc
                .as_coloring()
                .ok_or_else(|| CliError::usage(format!("--kind {kind:?} needs a coloring (\"classes\")")))?;
            check_coloring(g, &c, kind)?
        }
        _ => {
            let set = doc
                .set
                .as_deref()
                .ok_or_else(|| CliError::usage(format!("--kind {kind:?} needs a set (\"set\")")))?;
            check_set(g, set, doc.universe, kind)?
        }
    };
    let what = format!("{kind:?}").to_lowercase();
    match violation {
        None => {
            println!("valid {what} of {}", loaded.name);
            Ok(OK)
        }
        Some(v) => {
            println!("invalid {what} of {}: {v}", loaded.name);
            Ok(FAILED)
        }
    }
}

fn need(universe: Universe, want: Universe, kind: Kind) -> CliResult<()> {
    if universe != want {
        return Err(CliError::usage(format!("--kind {kind:?} needs universe {want:?}")));
    }
    Ok(())
}

fn check_coloring(g: &Graph, c: &Coloring, kind: Kind) -> CliResult<Option<String>> {
    let conflict = |p: Option<(ObjectId, ObjectId)>| p.map(|(a, b)| format!("{a} and {b} are adjacent but share a color"));
    Ok(match kind {
        Kind::Proper => {
            need(c.universe, Universe::Vertices, kind)?;
            conflict(verifiers::is_proper_coloring(g, c)?.conflict)
        }
        Kind::Total => {
            need(c.universe, Universe::Mixed, kind)?;
            conflict(verifiers::is_total_coloring(g, c)?.conflict)
        }
        Kind::Tdc => {
            need(c.universe, Universe::Vertices, kind)?;
            verifiers::is_tdc(g, c)?.first_violation()
        }
        _ => {
            need(c.universe, Universe::Mixed, kind)?;
            verifiers::is_tdtc(g, c)?.first_violation()
        }
    })
}

fn vertex_indices(g: &Graph, set: &[ObjectId]) -> CliResult<Vec<usize>> {
    set.iter()
        .map(|&o| match o {
            ObjectId::Vertex(i) if (1..=g.order()).contains(&i) => Ok(i - 1),
            _ => Err(CliError::from(tdtc_core::Error::Coverage(format!("{o} is not a vertex of the graph")))),
        })
        .collect()
}

fn check_set(g: &Graph, set: &[ObjectId], universe: Universe, kind: Kind) -> CliResult<Option<String>> {
    Ok(match kind {
        Kind::Tds => {
            need(universe, Universe::Vertices, kind)?;
            let r = verifiers::is_total_dominating_set(g, &vertex_indices(g, set)?);
            r.uncovered.first().map(|v| format!("v{} has no neighbor in the set", v + 1))
        }
        Kind::Independent => {
            need(universe, Universe::Vertices, kind)?;
            let idx = vertex_indices(g, set)?;
            (!verifiers::is_independent_set(g, &idx)).then(|| "two members are adjacent".to_string())
        }
        Kind::Tmds => {
            need(universe, Universe::Mixed, kind)?;
            let r = verifiers::is_total_mixed_dominating_set(g, set)?;
            r.offending
                .first()
                .map(|o| format!("{o} is neither adjacent nor incident to any member"))
        }
        _ => {
            need(universe, Universe::Mixed, kind)?;
            let r = verifiers::is_mixed_independent_set(g, set)?;
            r.offending
                .first()
                .map(|_| format!("{} and {} are adjacent or incident", r.offending[0], r.offending[1]))
        }
    })
}
