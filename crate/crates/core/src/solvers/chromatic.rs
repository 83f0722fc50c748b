//! Exact chromatic number: greedy clique lower bound, DSATUR upper bound and
//! a DSATUR backtracking decision procedure for every `k` in between.

use crate::budget::{Meter, SearchBudget};
use crate::graph::Graph;
use crate::solvers::{Certificate, InvariantResult};
use crate::verifiers::Coloring;

const NONE: usize = usize::MAX;

/// `χ(g)` with an optimal proper coloring as certificate.
pub fn chromatic_number(g: &Graph, budget: SearchBudget) -> InvariantResult {
    let mut meter = Meter::new(budget);
    let (colors, proven) = optimal_coloring_metered(g, &mut meter);
    let value = colors.iter().copied().max().map_or(0, |c| c + 1);
    InvariantResult {
        value,
        certificate: Certificate::Coloring(Coloring::from_assignment(&colors)),
        nodes_explored: meter.nodes(),
        elapsed: meter.elapsed(),
        proven_optimal: proven,
    }
}

/// Optimal coloring, whether optimality was proven, and nodes used.
pub(crate) fn optimal_coloring(g: &Graph, budget: SearchBudget) -> (Vec<usize>, bool, u64) {
    let mut meter = Meter::new(budget);
    let (colors, proven) = optimal_coloring_metered(g, &mut meter);
    (colors, proven, meter.nodes())
}

pub(crate) fn optimal_coloring_metered(g: &Graph, meter: &mut Meter) -> (Vec<usize>, bool) {
    if g.order() == 0 {
        return (Vec::new(), true);
    }
    let upper = dsatur_greedy(g);
    let ub = upper.iter().max().unwrap() + 1;
    let lb = greedy_clique(g).len();
    for k in lb..ub {
        match k_coloring(g, k, meter) {
            Some(Some(colors)) => return (colors, true),
            Some(None) => {}
            None => return (upper, false),
        }
    }
    (upper, true)
}

/// DSATUR greedy coloring (ties: higher uncolored degree, then lower index).
pub fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors = vec![NONE; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    let mut free_deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == NONE)
            .max_by(|&a, &b| (sat[a], free_deg[a]).cmp(&(sat[b], free_deg[b])).then(b.cmp(&a)))
            .unwrap();
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        colors[v] = c;
        for &w in g.neighbors(v) {
            free_deg[w] -= 1;
            if seen[w].len() <= c {
                seen[w].resize(c + 1, false);
            }
            if !seen[w][c] {
                seen[w][c] = true;
                sat[w] += 1;
            }
        }
    }
    colors
}

/// Greedy clique: the best clique grown from each start vertex by repeatedly
/// adding the candidate with most candidate neighbors.
pub(crate) fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    for start in 0..g.order() {
        let mut clique = vec![start];
        let mut cand = g.neighbor_set(start).clone();
        while cand.count_ones(..) > 0 {
            let v = cand
                .ones()
                .max_by_key(|&v| (g.neighbor_set(v).intersection_count(&cand), std::cmp::Reverse(v)))
                .unwrap();
            clique.push(v);
            cand.intersect_with(g.neighbor_set(v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// Decides `k`-colorability. `None` when the meter ran out.
pub(crate) fn k_coloring(g: &Graph, k: usize, meter: &mut Meter) -> Option<Option<Vec<usize>>> {
    let n = g.order();
    if k == 0 {
        return Some((n == 0).then(Vec::new));
    }
    let mut s = Dsatur {
        g,
        k,
        colors: vec![NONE; n],
        counts: vec![0; n * k],
        sat: vec![0; n],
        free_deg: (0..n).map(|v| g.degree(v)).collect(),
    };
    match s.search(0, 0, meter) {
        Outcome::Found => Some(Some(s.colors)),
        Outcome::Infeasible => Some(None),
        Outcome::Aborted => None,
    }
}

enum Outcome {
    Found,
    Infeasible,
    Aborted,
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    counts: Vec<u32>,
    sat: Vec<usize>,
    free_deg: Vec<usize>,
}

impl Dsatur<'_> {
    fn set(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for &w in self.g.neighbors(v) {
            self.free_deg[w] -= 1;
            let slot = &mut self.counts[w * self.k + c];
            if *slot == 0 {
                self.sat[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unset(&mut self, v: usize, c: usize) {
        self.colors[v] = NONE;
        for &w in self.g.neighbors(v) {
            self.free_deg[w] += 1;
            let slot = &mut self.counts[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn search(&mut self, colored: usize, used: usize, meter: &mut Meter) -> Outcome {
        let n = self.g.order();
        if colored == n {
            return Outcome::Found;
        }
        if !meter.tick() {
            return Outcome::Aborted;
        }
        let v = (0..n)
            .filter(|&v| self.colors[v] == NONE)
            .max_by(|&a, &b| {
                (self.sat[a], self.free_deg[a])
                    .cmp(&(self.sat[b], self.free_deg[b]))
                    .then(b.cmp(&a))
            })
            .unwrap();
        if self.sat[v] >= self.k {
            return Outcome::Infeasible;
        }
        for c in 0..self.k.min(used + 1) {
            if self.counts[v * self.k + c] != 0 {
                continue;
            }
            self.set(v, c);
            match self.search(colored + 1, used.max(c + 1), meter) {
                Outcome::Infeasible => self.unset(v, c),
                other => return other,
            }
        }
        Outcome::Infeasible
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::total_graph;
    use crate::verifiers::is_proper_coloring;

    fn chi(g: &Graph) -> usize {
        let r = chromatic_number(g, SearchBudget::UNBOUNDED);
        assert!(r.proven_optimal);
        assert!(is_proper_coloring(g, r.certificate.as_coloring().unwrap()).unwrap().proper);
        r.value
    }

    #[test]
    fn small_families() {
        assert_eq!(chi(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(chi(&Graph::path(6).unwrap()), 2);
        assert_eq!(chi(&Graph::complete(4)), 4);
        assert_eq!(chi(&Graph::empty(3)), 1);
        assert_eq!(chi(&Graph::empty(0)), 0);
    }

    #[test]
    fn total_graphs_of_cycles() {
        // χ(T(C_n)) = 3 iff 3 | n, otherwise 4 (small n).
        for n in 3..10 {
            let t = total_graph(&Graph::cycle(n).unwrap());
            assert_eq!(chi(&t.graph), if n % 3 == 0 { 3 } else { 4 }, "n = {n}");
        }
    }

    #[test]
    fn budget_exhaustion_keeps_greedy_coloring() {
        // Clique bound 2 < DSATUR bound 3 on C_7, so k = 2 needs a search.
        let g = Graph::cycle(7).unwrap();
        let r = chromatic_number(&g, SearchBudget::nodes(0));
        assert!(!r.proven_optimal);
        assert!(is_proper_coloring(&g, r.certificate.as_coloring().unwrap()).unwrap().proper);
        assert!(r.value >= 3);
    }
}
