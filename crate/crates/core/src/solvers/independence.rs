//! Maximum independent set by branch and bound.

use fixedbitset::FixedBitSet;

use crate::budget::{Meter, SearchBudget};
use crate::graph::Graph;
use crate::solvers::{vertex_labels, Certificate, InvariantResult, SolveOptions};

/// `α(g)` with a maximum independent set (1-based vertex labels).
pub fn independence_number(g: &Graph, budget: SearchBudget) -> InvariantResult {
    independence_number_with(g, budget, SolveOptions::default())
}

pub fn independence_number_with(g: &Graph, budget: SearchBudget, opts: SolveOptions) -> InvariantResult {
    let mut meter = Meter::new(budget);
    let set = maximum_independent_set(g, &mut meter, opts);
    InvariantResult {
        value: set.len(),
        certificate: Certificate::Set(vertex_labels(&set)),
        nodes_explored: meter.nodes(),
        elapsed: meter.elapsed(),
        proven_optimal: !meter.exhausted(),
    }
}

pub(crate) fn maximum_independent_set(g: &Graph, meter: &mut Meter, opts: SolveOptions) -> Vec<usize> {
    let mut all = FixedBitSet::with_capacity(g.order());
    all.insert_range(..);
    let mut s = Mis {
        g,
        pruning: opts.pruning,
        best: Vec::new(),
        current: Vec::new(),
    };
    s.search(all, meter);
    let mut best = s.best;
    best.sort_unstable();
    best
}

struct Mis<'a> {
    g: &'a Graph,
    pruning: bool,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Mis<'_> {
    fn search(&mut self, cand: FixedBitSet, meter: &mut Meter) {
        let left = cand.count_ones(..);
        if left == 0 {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        if self.current.len() + left <= self.best.len() || !meter.tick() {
            return;
        }
        if self.pruning && self.current.len() + clique_cover_bound(self.g, &cand) <= self.best.len() {
            return;
        }
        let degree = |v: usize| self.g.neighbor_set(v).intersection_count(&cand);
        let low = cand.ones().min_by_key(|&v| degree(v)).unwrap();
        if degree(low) <= 1 {
            // Some maximum independent set of the candidates contains `low`.
            self.take(low, &cand, meter);
            return;
        }
        let high = cand.ones().max_by_key(|&v| (degree(v), std::cmp::Reverse(v))).unwrap();
        self.take(high, &cand, meter);
        let mut rest = cand;
        rest.set(high, false);
        self.search(rest, meter);
    }

    fn take(&mut self, v: usize, cand: &FixedBitSet, meter: &mut Meter) {
        let mut next = cand.clone();
        next.difference_with(self.g.neighbor_set(v));
        next.set(v, false);
        self.current.push(v);
        self.search(next, meter);
        self.current.pop();
    }
}

/// Number of cliques in a greedy clique cover of `cand`; an independent set
/// meets each clique at most once.
fn clique_cover_bound(g: &Graph, cand: &FixedBitSet) -> usize {
    let mut remaining = cand.clone();
    let mut cliques = 0;
    while let Some(v) = remaining.ones().next() {
        remaining.set(v, false);
        let mut grow = remaining.clone();
        grow.intersect_with(g.neighbor_set(v));
        while let Some(u) = grow.ones().next() {
            remaining.set(u, false);
            grow.set(u, false);
            grow.intersect_with(g.neighbor_set(u));
        }
        cliques += 1;
    }
    cliques
}
