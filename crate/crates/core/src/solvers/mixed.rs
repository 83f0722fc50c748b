//! Mixed invariants of a base graph, computed on its total graph with the
//! certificates mapped back to vertices and edges. The direct search for
//! `γ_tm` works on the base graph itself and serves as an independent check
//! of the total-graph route.

use crate::budget::{Meter, SearchBudget};
use crate::error::Result;
use crate::graph::{total_graph, Graph, ObjectId, TotalGraph};
use crate::solvers::{
    chromatic, domination, dominator_coloring, independence, Certificate, InvariantResult, SolveOptions,
};

fn to_objects(t: &TotalGraph, cert: Certificate) -> Certificate {
    match cert {
        Certificate::Set(s) => Certificate::Set(
            s.into_iter()
                .map(|o| match o {
                    ObjectId::Vertex(i) => t.label(i - 1),
                    e => e,
                })
                .collect(),
        ),
        Certificate::Coloring(c) => {
            Certificate::Coloring(c.from_total(t).expect("solver coloring covers the total graph"))
        }
    }
}

fn lift(t: &TotalGraph, mut r: InvariantResult) -> InvariantResult {
    r.certificate = to_objects(t, r.certificate);
    r
}

/// `α_mix(g) = α(T(g))`.
pub fn mixed_independence_number(g: &Graph, budget: SearchBudget) -> InvariantResult {
    let t = total_graph(g);
    lift(&t, independence::independence_number(&t.graph, budget))
}

/// `γ_tm(g) = γ_t(T(g))`.
pub fn total_mixed_domination_number(g: &Graph, budget: SearchBudget) -> Result<InvariantResult> {
    g.require_positive_min_degree("total mixed domination")?;
    let t = total_graph(g);
    Ok(lift(&t, domination::total_domination_number(&t.graph, budget)?))
}

/// `χ_T(g) = χ(T(g))`.
pub fn total_chromatic_number(g: &Graph, budget: SearchBudget) -> InvariantResult {
    let t = total_graph(g);
    lift(&t, chromatic::chromatic_number(&t.graph, budget))
}

/// `χ^tt_d(g) = χ^t_d(T(g))`.
pub fn tdtc_number(g: &Graph, budget: SearchBudget) -> Result<InvariantResult> {
    tdtc_number_with(g, budget, SolveOptions::default())
}

pub fn tdtc_number_with(g: &Graph, budget: SearchBudget, opts: SolveOptions) -> Result<InvariantResult> {
    g.require_positive_min_degree("total dominator total coloring")?;
    let t = total_graph(g);
    Ok(lift(
        &t,
        dominator_coloring::total_dominator_chromatic_number_with(&t.graph, budget, opts)?,
    ))
}

/// `γ_tm(g)` by enumerating object subsets of increasing size, checking each
/// with the adjacent-or-incident relation of `g`. The first size with a hit
/// is optimal; the hit is the lexicographically first set in object order.
pub fn total_mixed_domination_number_direct(g: &Graph, budget: SearchBudget) -> Result<InvariantResult> {
    g.require_positive_min_degree("total mixed domination")?;
    let mut meter = Meter::new(budget);
    let objects = g.objects();
    let total = objects.len();
    // `dominators[x]`: indices of the objects adjacent or incident to object x.
    let dominators: Vec<Vec<usize>> = objects
        .iter()
        .map(|&x| (0..total).filter(|&y| g.objects_related(x, objects[y])).collect())
        .collect();
    let mut found = None;
    'sizes: for size in 1..=total {
        let mut pick: Vec<usize> = (0..size).collect();
        let mut member = vec![false; total];
        loop {
            if !meter.tick() {
                break 'sizes;
            }
            for &p in &pick {
                member[p] = true;
            }
            let ok = dominators.iter().all(|d| d.iter().any(|&y| member[y]));
            for &p in &pick {
                member[p] = false;
            }
            if ok {
                found = Some(pick.clone());
                break 'sizes;
            }
            if !next_combination(&mut pick, total) {
                break;
            }
        }
    }
    let proven = found.is_some();
    let set: Vec<usize> = found.unwrap_or_else(|| (0..total).collect());
    Ok(InvariantResult {
        value: set.len(),
        certificate: Certificate::Set(set.iter().map(|&i| objects[i]).collect()),
        nodes_explored: meter.nodes(),
        elapsed: meter.elapsed(),
        proven_optimal: proven,
    })
}

/// Advances to the next `pick.len()`-subset of `0..total` in lexicographic order.
fn next_combination(pick: &mut [usize], total: usize) -> bool {
    let r = pick.len();
    let Some(i) = (0..r).rev().find(|&i| pick[i] < total - r + i) else {
        return false;
    };
    pick[i] += 1;
    for j in i + 1..r {
        pick[j] = pick[j - 1] + 1;
    }
    true
}
