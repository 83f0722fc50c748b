//! Minimum total dominating sets.
//!
//! The greedy set seeds the incumbent. The search then repeatedly picks the
//! undominated vertex with the fewest remaining candidate neighbors and
//! branches over which of them enters the set; a candidate rejected in one
//! branch stays excluded in its later siblings.

use crate::budget::{Meter, SearchBudget};
use crate::error::Result;
use crate::graph::Graph;
use crate::solvers::{vertex_labels, Certificate, InvariantResult, SolveOptions};

/// `γ_t(g)` with a minimum total dominating set. Rejects isolated vertices.
pub fn total_domination_number(g: &Graph, budget: SearchBudget) -> Result<InvariantResult> {
    total_domination_number_with(g, budget, SolveOptions::default())
}

pub fn total_domination_number_with(
    g: &Graph,
    budget: SearchBudget,
    opts: SolveOptions,
) -> Result<InvariantResult> {
    g.require_positive_min_degree("total domination")?;
    let mut meter = Meter::new(budget);
    let set = minimum_tds(g, &mut meter, opts);
    Ok(InvariantResult {
        value: set.len(),
        certificate: Certificate::Set(vertex_labels(&set)),
        nodes_explored: meter.nodes(),
        elapsed: meter.elapsed(),
        proven_optimal: !meter.exhausted(),
    })
}

/// Greedy TDS: repeatedly add the vertex with most undominated neighbors.
pub(crate) fn greedy_tds(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut dominated = vec![false; n];
    let mut chosen = vec![false; n];
    let mut left = n;
    let mut set = Vec::new();
    while left > 0 {
        let v = (0..n)
            .filter(|&v| !chosen[v])
            .max_by_key(|&v| {
                let gain = g.neighbors(v).iter().filter(|&&w| !dominated[w]).count();
                (gain, std::cmp::Reverse(v))
            })
            .unwrap();
        chosen[v] = true;
        set.push(v);
        for &w in g.neighbors(v) {
            if !dominated[w] {
                dominated[w] = true;
                left -= 1;
            }
        }
    }
    set.sort_unstable();
    set
}

/// Requires positive minimum degree.
pub(crate) fn minimum_tds(g: &Graph, meter: &mut Meter, opts: SolveOptions) -> Vec<usize> {
    let n = g.order();
    let mut s = Tds {
        g,
        pruning: opts.pruning,
        best: greedy_tds(g),
        chosen: Vec::new(),
        in_set: vec![false; n],
        excluded: vec![false; n],
        hits: vec![0; n],
        undominated: n,
    };
    s.search(meter);
    let mut best = s.best;
    best.sort_unstable();
    best
}

struct Tds<'a> {
    g: &'a Graph,
    pruning: bool,
    best: Vec<usize>,
    chosen: Vec<usize>,
    in_set: Vec<bool>,
    excluded: Vec<bool>,
    /// Number of chosen neighbors per vertex.
    hits: Vec<u32>,
    undominated: usize,
}

impl Tds<'_> {
    fn available(&self, v: usize) -> bool {
        !self.in_set[v] && !self.excluded[v]
    }

    fn add(&mut self, v: usize) {
        self.in_set[v] = true;
        self.chosen.push(v);
        for &w in self.g.neighbors(v) {
            if self.hits[w] == 0 {
                self.undominated -= 1;
            }
            self.hits[w] += 1;
        }
    }

    fn remove(&mut self, v: usize) {
        self.in_set[v] = false;
        self.chosen.pop();
        for &w in self.g.neighbors(v) {
            self.hits[w] -= 1;
            if self.hits[w] == 0 {
                self.undominated += 1;
            }
        }
    }

    /// Fewest additional vertices that could cover the undominated ones.
    fn cover_bound(&self) -> usize {
        let mut gains: Vec<usize> = (0..self.g.order())
            .filter(|&v| self.available(v))
            .map(|v| self.g.neighbors(v).iter().filter(|&&w| self.hits[w] == 0).count())
            .filter(|&x| x > 0)
            .collect();
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let mut covered = 0;
        for (i, gain) in gains.iter().enumerate() {
            covered += gain;
            if covered >= self.undominated {
                return i + 1;
            }
        }
        usize::MAX
    }

    fn search(&mut self, meter: &mut Meter) {
        if self.undominated == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        if self.chosen.len() + 1 >= self.best.len() || !meter.tick() {
            return;
        }
        if self.pruning {
            let bound = self.cover_bound();
            if bound == usize::MAX || self.chosen.len() + bound >= self.best.len() {
                return;
            }
        }
        let target = (0..self.g.order())
            .filter(|&v| self.hits[v] == 0)
            .min_by_key(|&v| self.g.neighbors(v).iter().filter(|&&w| self.available(w)).count())
            .unwrap();
        let options: Vec<usize> = self
            .g
            .neighbors(target)
            .iter()
            .copied()
            .filter(|&w| self.available(w))
            .collect();
        for &u in &options {
            self.add(u);
            self.search(meter);
            self.remove(u);
            self.excluded[u] = true;
        }
        for &u in &options {
            self.excluded[u] = false;
        }
    }
}
