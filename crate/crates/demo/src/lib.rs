//! Browser demo over `tdtc-core`: draw the total graph of a cycle or path
//! with an optimal total dominator total coloring, solve the invariant
//! exactly under a node budget, and check a coloring edited by hand.
//!
//! The three operations are plain Rust functions returning JSON so they can
//! be tested natively; the `wasm_bindgen` exports only forward to them.

use serde::Serialize;
use tdtc_core::closed_forms::{self, Family, FamilyInstance};
use tdtc_core::verifiers::{is_tdtc, Coloring, Universe, Witness};
use tdtc_core::{solvers, total_graph, Graph, ObjectId, SearchBudget};
use wasm_bindgen::prelude::*;

/// Largest order the page accepts.
pub const MAX_N: usize = 60;

#[derive(Serialize)]
struct Node {
    id: String,
    x: f64,
    y: f64,
    class: usize,
}

#[derive(Serialize)]
struct Formula {
    value: usize,
    case: String,
}

#[derive(Serialize)]
struct View {
    title: String,
    nodes: Vec<Node>,
    links: Vec<(usize, usize)>,
    classes: usize,
    provenance: &'static str,
    chi_tt_d: Formula,
    gamma_tm: Formula,
    alpha_mix: Formula,
}

fn instance(family: &str, n: usize) -> Result<FamilyInstance, String> {
    let family: Family = family.parse().map_err(|e: tdtc_core::Error| e.to_string())?;
    if n > MAX_N {
        return Err(format!("n is limited to {MAX_N} here"));
    }
    FamilyInstance::new(family, n).map_err(|e| e.to_string())
}

/// Unit-square coordinates: cycles on a circle with edge objects on an
/// inner ring, paths on a line with edge objects raised between vertices.
fn position(family: Family, n: usize, o: ObjectId) -> (f64, f64) {
    let angle = |t: f64| std::f64::consts::TAU * t / n as f64 - std::f64::consts::FRAC_PI_2;
    match (family, o) {
        (Family::Cycle, ObjectId::Vertex(i)) => {
            let a = angle((i - 1) as f64);
            (0.5 + 0.42 * a.cos(), 0.5 + 0.42 * a.sin())
        }
        (Family::Cycle, ObjectId::Edge(i, j)) => {
            // The wrap edge e_{1n} sits between v_n and v_1.
            let mid = if j == n && i == 1 { n as f64 - 0.5 } else { i as f64 - 0.5 };
            let a = angle(mid);
            (0.5 + 0.3 * a.cos(), 0.5 + 0.3 * a.sin())
        }
        (Family::Path, ObjectId::Vertex(i)) => (x_on_line(n, i as f64), 0.62),
        (Family::Path, ObjectId::Edge(i, _)) => (x_on_line(n, i as f64 + 0.5), 0.38),
    }
}

fn x_on_line(n: usize, i: f64) -> f64 {
    0.05 + 0.9 * (i - 1.0) / (n - 1) as f64
}

fn class_of(g: &Graph, c: &Coloring) -> Vec<usize> {
    c.mixed_assignment(g).expect("certificate covers the objects")
}

fn view(inst: FamilyInstance, c: &Coloring, provenance: &'static str) -> Result<View, String> {
    let g = inst.graph();
    let t = total_graph(&g);
    let colors = class_of(&g, c);
    let nodes = t
        .labels()
        .iter()
        .zip(&colors)
        .map(|(&o, &class)| {
            let (x, y) = position(inst.family, inst.n, o);
            Node {
                id: o.to_string(),
                x,
                y,
                class,
            }
        })
        .collect();
    let formula = |r: tdtc_core::Result<closed_forms::FormulaValue>| {
        r.map(|f| Formula {
            value: f.value,
            case: f.case_tag,
        })
        .map_err(|e| e.to_string())
    };
    Ok(View {
        title: format!("T({inst})"),
        nodes,
        links: t.graph.edges().to_vec(),
        classes: c.len(),
        provenance,
        chi_tt_d: formula(closed_forms::chi_tt(inst.family, inst.n))?,
        gamma_tm: formula(closed_forms::gamma_tm(inst.family, inst.n))?,
        alpha_mix: formula(closed_forms::alpha_mix(inst.family, inst.n))?,
    })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("demo values serialize")
}

/// Closed-form values plus the optimal coloring of `T(family_n)`, laid out
/// for drawing.
pub fn family_view(family: &str, n: usize) -> Result<String, String> {
    let inst = instance(family, n)?;
    let cert = closed_forms::tdtc_certificate(inst.family, inst.n).map_err(|e| e.to_string())?;
    Ok(to_json(&view(inst, &cert.coloring, cert.provenance.as_str())?))
}

#[derive(Serialize)]
struct Solved {
    #[serde(flatten)]
    view: View,
    proven_optimal: bool,
    nodes_explored: u64,
}

/// Exact `χ^tt_d` by search, stopping after `max_nodes` nodes.
pub fn solve_exact(family: &str, n: usize, max_nodes: u64) -> Result<String, String> {
    let inst = instance(family, n)?;
    let r = solvers::tdtc_number(&inst.graph(), SearchBudget::nodes(max_nodes)).map_err(|e| e.to_string())?;
    let c = r.certificate.as_coloring().expect("coloring certificate");
    Ok(to_json(&Solved {
        view: view(inst, c, "exact-search")?,
        proven_optimal: r.proven_optimal,
        nodes_explored: r.nodes_explored,
    }))
}

#[derive(Serialize)]
struct Check {
    valid: bool,
    classes: usize,
    violation: Option<String>,
    conflict: Option<(String, String)>,
    undominated: Vec<String>,
}

/// Checks a coloring given as one class index per object, in total-graph
/// order (vertices, then edges). Indices need not be contiguous.
pub fn check_coloring(family: &str, n: usize, classes_json: &str) -> Result<String, String> {
    let inst = instance(family, n)?;
    let g = inst.graph();
    let per_object: Vec<usize> = serde_json::from_str(classes_json).map_err(|e| format!("bad class list: {e}"))?;
    let objects = g.objects();
    if per_object.len() != objects.len() {
        return Err(format!("expected {} class indices, got {}", objects.len(), per_object.len()));
    }
    let mut ids: Vec<usize> = per_object.clone();
    ids.sort_unstable();
    ids.dedup();
    let mut classes = vec![Vec::new(); ids.len()];
    for (o, c) in objects.iter().zip(&per_object) {
        classes[ids.binary_search(c).unwrap()].push(*o);
    }
    let c = Coloring::new(Universe::Mixed, classes);
    let report = is_tdtc(&g, &c).map_err(|e| e.to_string())?;
    Ok(to_json(&Check {
        valid: report.valid,
        classes: c.len(),
        violation: report.first_violation(),
        conflict: report.conflict.map(|(a, b)| (a.to_string(), b.to_string())),
        undominated: report
            .witnesses
            .iter()
            .filter(|(_, w)| *w == Witness::Undominated)
            .map(|(o, _)| o.to_string())
            .collect(),
    }))
}

#[wasm_bindgen(js_name = familyView)]
pub fn family_view_js(family: &str, n: usize) -> Result<String, JsError> {
    family_view(family, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = solveExact)]
pub fn solve_exact_js(family: &str, n: usize, max_nodes: u32) -> Result<String, JsError> {
    solve_exact(family, n, max_nodes.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = checkColoring)]
pub fn check_coloring_js(family: &str, n: usize, classes: &str) -> Result<String, JsError> {
    check_coloring(family, n, classes).map_err(|e| JsError::new(&e))
}
