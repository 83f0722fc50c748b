//! Solvers against brute force.

mod common;

use tdtc_core::solvers::{self, chromatic_number, independence_number, SolveOptions};
use tdtc_core::verifiers::{is_independent_set, is_proper_coloring, is_tdc, is_total_dominating_set};
use tdtc_core::{total_graph, Graph, ObjectId, SearchBudget};

const U: SearchBudget = SearchBudget::UNBOUNDED;

fn vertices(set: &[ObjectId]) -> Vec<usize> {
    set.iter()
        .map(|o| match o {
            ObjectId::Vertex(i) => i - 1,
            _ => panic!("edge in a vertex certificate"),
        })
        .collect()
}

fn check_all(g: &Graph) {
    let a = independence_number(g, U);
    assert_eq!(a.value, common::alpha(g), "α {g:?}");
    assert!(is_independent_set(g, &vertices(a.certificate.as_set().unwrap())));

    let c = chromatic_number(g, U);
    assert_eq!(c.value, common::chi(g), "χ {g:?}");
    assert!(is_proper_coloring(g, c.certificate.as_coloring().unwrap()).unwrap().proper);

    let t = solvers::total_domination_number(g, U).unwrap();
    assert_eq!(t.value, common::gamma_t(g), "γ_t {g:?}");
    assert!(is_total_dominating_set(g, &vertices(t.certificate.as_set().unwrap())).valid);

    let d = solvers::total_dominator_chromatic_number(g, U).unwrap();
    assert_eq!(d.value, common::chi_td(g), "χ^t_d {g:?}");
    assert!(is_tdc(g, d.certificate.as_coloring().unwrap()).unwrap().valid);
    assert!(d.proven_optimal);
}

#[test]
fn exhaustive_small_graphs() {
    for g in common::connected_graphs(5) {
        check_all(&g);
    }
}

#[test]
fn random_graphs_up_to_nine_vertices() {
    for g in common::random_graphs(60, 9, 11) {
        check_all(&g);
    }
}

#[test]
fn pruning_never_changes_values() {
    let off = SolveOptions::NO_PRUNING;
    for g in common::random_graphs(40, 8, 5) {
        let d = solvers::dominator_coloring::total_dominator_chromatic_number_with(&g, U, off).unwrap();
        assert_eq!(d.value, common::chi_td(&g));
        let t = solvers::domination::total_domination_number_with(&g, U, off).unwrap();
        assert_eq!(t.value, common::gamma_t(&g));
        let a = solvers::independence::independence_number_with(&g, U, off);
        assert_eq!(a.value, common::alpha(&g));
    }
    for n in 3..8 {
        let g = Graph::cycle(n).unwrap();
        let on = solvers::mixed::tdtc_number(&g, U).unwrap().value;
        let no = solvers::mixed::tdtc_number_with(&g, U, off).unwrap().value;
        assert_eq!(on, no, "C_{n}");
    }
}

#[test]
fn total_graph_oracles() {
    // T(P_2) = K_3, T(C_3) is the octahedron.
    let k3 = total_graph(&Graph::path(2).unwrap()).graph;
    assert_eq!(common::chi(&k3), 3);
    assert_eq!(common::chi_td(&k3), 3);
    assert_eq!(common::alpha(&k3), 1);
    let oct = total_graph(&Graph::cycle(3).unwrap()).graph;
    assert_eq!(common::chi(&oct), 3);
    assert_eq!(solvers::total_chromatic_number(&Graph::cycle(3).unwrap(), U).value, 3);
    let tp4 = total_graph(&Graph::path(4).unwrap()).graph;
    assert_eq!(common::chi(&tp4), 3);
    assert_eq!(common::alpha(&tp4), 3);
    assert_eq!(common::chi_td(&tp4), 4);
    assert_eq!(common::chi_td(&Graph::complete(3)), 3);
}

#[test]
fn results_are_deterministic_across_threads() {
    let g = total_graph(&Graph::cycle(8).unwrap()).graph;
    let here = solvers::total_dominator_chromatic_number(&g, U).unwrap().certificate;
    let there: Vec<_> = (0..4)
        .map(|_| {
            let g = g.clone();
            std::thread::spawn(move || solvers::total_dominator_chromatic_number(&g, U).unwrap().certificate)
        })
        .collect();
    for h in there {
        assert_eq!(h.join().unwrap(), here);
    }
}
