//! Exact total dominator chromatic number `χ^t_d`.
//!
//! Iterative deepening over the number of classes `k`, starting at
//! `max(χ, γ_t, 2)` and stopping below the class count of the coloring built
//! from a minimum TDS. For a fixed `k` the search assigns classes vertex by
//! vertex (fewest remaining classes first, degeneracy order on ties). Class
//! indices are opened in first-use order.
//!
//! Pruning. A vertex `v` can only ever be dominated by a class whose members
//! all lie in `N(v)`. For every vertex we keep, per class, how many members
//! fall outside `N(v)`; a class stays *viable* for `v` while that number is
//! zero and the class is nonempty or can still receive a neighbor of `v`.
//! A vertex with no viable class fails the branch. A vertex with exactly one
//! viable class `c` locks it: no vertex outside `N(v)` may join `c` anymore.
//! These rules imply the generic size bounds (a dominated class is an
//! independent subset of some neighborhood).

use crate::budget::{Meter, SearchBudget};
use crate::error::Result;
use crate::graph::Graph;
use crate::solvers::{chromatic, domination, Certificate, InvariantResult, SolveOptions};
use crate::verifiers::{tdc_from_tds, Coloring, RemainderColoring};

const NONE: usize = usize::MAX;
/// Class domains are bitmasks.
const MAX_CLASSES: usize = 64;

/// `χ^t_d(g)` with a minimum total dominator coloring.
pub fn total_dominator_chromatic_number(g: &Graph, budget: SearchBudget) -> Result<InvariantResult> {
    total_dominator_chromatic_number_with(g, budget, SolveOptions::default())
}

pub fn total_dominator_chromatic_number_with(
    g: &Graph,
    budget: SearchBudget,
    opts: SolveOptions,
) -> Result<InvariantResult> {
    g.require_positive_min_degree("total dominator coloring")?;
    let mut meter = Meter::new(budget);
    let (colors, proven) = solve(g, &mut meter, opts)?;
    let coloring = Coloring::from_assignment(&colors);
    Ok(InvariantResult {
        value: coloring.len(),
        certificate: Certificate::Coloring(coloring),
        nodes_explored: meter.nodes(),
        elapsed: meter.elapsed(),
        proven_optimal: proven,
    })
}

pub(crate) fn solve(g: &Graph, meter: &mut Meter, opts: SolveOptions) -> Result<(Vec<usize>, bool)> {
    // Both bounds are computed exactly and without a budget: they are cheap
    // next to the main search, and an unproven bound would be unusable.
    let tds = domination::minimum_tds(g, &mut Meter::new(SearchBudget::UNBOUNDED), opts);
    let upper = tdc_from_tds(g, &tds, RemainderColoring::Exact)?;
    let upper_colors = upper.assignment(g.order())?;
    let (chi_colors, _, _) = chromatic::optimal_coloring(g, SearchBudget::UNBOUNDED);
    let chi = chi_colors.iter().max().map_or(0, |c| c + 1);
    let mut lower = chi.max(2);
    if opts.pruning {
        // One member from each dominated class forms a TDS.
        lower = lower.max(tds.len());
    }
    for k in lower..upper.len() {
        if k > MAX_CLASSES {
            return Ok((upper_colors, false));
        }
        match decide(g, k, meter, opts.pruning) {
            Decision::Feasible(colors) => return Ok((colors, true)),
            Decision::Infeasible => {}
            Decision::Aborted => return Ok((upper_colors, false)),
        }
    }
    Ok((upper_colors, true))
}

pub(crate) enum Decision {
    Feasible(Vec<usize>),
    Infeasible,
    Aborted,
}

/// Is there a total dominator coloring with exactly `k` classes?
pub(crate) fn decide(g: &Graph, k: usize, meter: &mut Meter, pruning: bool) -> Decision {
    let n = g.order();
    assert!(k <= MAX_CLASSES);
    if k > n {
        return Decision::Infeasible;
    }
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let order = degeneracy_rank(g);
    let mut s = Search {
        g,
        k,
        pruning,
        rank: order,
        color: vec![NONE; n],
        domain: vec![full; n],
        size: vec![0; k],
        outside: vec![0; n * k],
        used: 0,
        colored: 0,
        solution: Vec::new(),
    };
    if pruning && !s.propagate() {
        return Decision::Infeasible;
    }
    match s.search(meter) {
        Outcome::Found => Decision::Feasible(s.solution),
        Outcome::Infeasible => Decision::Infeasible,
        Outcome::Aborted => Decision::Aborted,
    }
}

/// Position of each vertex in a smallest-last degeneracy order.
fn degeneracy_rank(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !gone[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        gone[v] = true;
        removal.push(v);
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
            }
        }
    }
    let mut rank = vec![0; n];
    for (i, &v) in removal.iter().rev().enumerate() {
        rank[v] = i;
    }
    rank
}

enum Outcome {
    Found,
    Infeasible,
    Aborted,
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    pruning: bool,
    rank: Vec<usize>,
    color: Vec<usize>,
    /// Classes each uncolored vertex may still take.
    domain: Vec<u64>,
    size: Vec<usize>,
    /// `outside[v * k + c]`: members of class `c` not adjacent to `v`.
    outside: Vec<u32>,
    /// Classes `0..used` are nonempty, the rest empty.
    used: usize,
    colored: usize,
    solution: Vec<usize>,
}

impl Search<'_> {
    /// Classes an uncolored vertex may take right now: nonempty classes in its
    /// domain plus the first empty one.
    fn choices(&self, v: usize) -> u64 {
        let open = (self.used + 1).min(self.k);
        let mask = if open == 64 { u64::MAX } else { (1u64 << open) - 1 };
        self.domain[v] & mask
    }

    fn assign(&mut self, u: usize, c: usize) {
        self.color[u] = c;
        self.colored += 1;
        self.size[c] += 1;
        if c == self.used {
            self.used += 1;
        }
        let nu = self.g.neighbor_set(u);
        for v in 0..self.g.order() {
            if !nu.contains(v) {
                self.outside[v * self.k + c] += 1;
            }
        }
        let bit = 1u64 << c;
        for &w in self.g.neighbors(u) {
            self.domain[w] &= !bit;
        }
    }

    fn unassign(&mut self, u: usize, c: usize) {
        self.color[u] = NONE;
        self.colored -= 1;
        self.size[c] -= 1;
        if self.size[c] == 0 {
            debug_assert_eq!(c + 1, self.used);
            self.used -= 1;
        }
        let nu = self.g.neighbor_set(u);
        for v in 0..self.g.order() {
            if !nu.contains(v) {
                self.outside[v * self.k + c] -= 1;
            }
        }
    }

    fn viable(&self, v: usize) -> u64 {
        let mut reachable = 0u64;
        for &w in self.g.neighbors(v) {
            if self.color[w] == NONE {
                reachable |= self.domain[w];
            }
        }
        let row = &self.outside[v * self.k..(v + 1) * self.k];
        let mut viable = 0u64;
        for (c, &out) in row.iter().enumerate() {
            if out == 0 && (self.size[c] > 0 || reachable >> c & 1 == 1) {
                viable |= 1 << c;
            }
        }
        viable
    }

    /// Runs the viability rules to a fixpoint. `false` on a dead end.
    fn propagate(&mut self) -> bool {
        let n = self.g.order();
        loop {
            let mut changed = false;
            for v in 0..n {
                let viable = self.viable(v);
                if viable == 0 {
                    return false;
                }
                if viable.count_ones() != 1 {
                    continue;
                }
                let bit = viable;
                let nv = self.g.neighbor_set(v);
                for w in 0..n {
                    if self.color[w] == NONE && !nv.contains(w) && self.domain[w] & bit != 0 {
                        self.domain[w] &= !bit;
                        if self.choices(w) == 0 {
                            return false;
                        }
                        changed = true;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn complete_is_valid(&self) -> bool {
        (0..self.g.order()).all(|v| {
            let row = &self.outside[v * self.k..(v + 1) * self.k];
            (0..self.k).any(|c| self.size[c] > 0 && row[c] == 0)
        })
    }

    fn search(&mut self, meter: &mut Meter) -> Outcome {
        if self.colored == self.g.order() {
            return if self.used == self.k && self.complete_is_valid() {
                self.solution = self.color.clone();
                Outcome::Found
            } else {
                Outcome::Infeasible
            };
        }
        if !meter.tick() {
            return Outcome::Aborted;
        }
        // Classes left to open must fit in the uncolored vertices.
        if self.k - self.used > self.g.order() - self.colored {
            return Outcome::Infeasible;
        }
        let u = (0..self.g.order())
            .filter(|&v| self.color[v] == NONE)
            .min_by_key(|&v| (self.choices(v).count_ones(), self.rank[v]))
            .unwrap();
        let mut options = self.choices(u);
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            let saved = self.domain.clone();
            self.assign(u, c);
            let ok = self.choices_nonempty() && (!self.pruning || self.propagate());
            let outcome = if ok { self.search(meter) } else { Outcome::Infeasible };
            self.unassign(u, c);
            self.domain = saved;
            match outcome {
                Outcome::Infeasible => {}
                other => return other,
            }
        }
        Outcome::Infeasible
    }

    fn choices_nonempty(&self) -> bool {
        (0..self.g.order()).all(|v| self.color[v] != NONE || self.choices(v) != 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::total_graph;
    use crate::verifiers::is_tdc;

    fn chi_td(g: &Graph) -> usize {
        let r = total_dominator_chromatic_number(g, SearchBudget::UNBOUNDED).unwrap();
        assert!(r.proven_optimal);
        let report = is_tdc(g, r.certificate.as_coloring().unwrap()).unwrap();
        assert!(report.valid, "{:?}", report.first_violation());
        r.value
    }

    #[test]
    fn small_graphs() {
        assert_eq!(chi_td(&Graph::complete(3)), 3);
        assert_eq!(chi_td(&Graph::path(2).unwrap()), 2);
        assert_eq!(chi_td(&Graph::path(4).unwrap()), 3);
        assert_eq!(chi_td(&Graph::star(4)), 2);
        assert_eq!(chi_td(&total_graph(&Graph::path(4).unwrap()).graph), 4);
    }

    #[test]
    fn needs_positive_minimum_degree() {
        assert!(total_dominator_chromatic_number(&Graph::empty(3), SearchBudget::UNBOUNDED).is_err());
    }

    #[test]
    fn pruning_off_agrees_on_total_graphs() {
        for n in 2..6 {
            let t = total_graph(&Graph::path(n).unwrap()).graph;
            let on = total_dominator_chromatic_number(&t, SearchBudget::UNBOUNDED).unwrap();
            let off =
                total_dominator_chromatic_number_with(&t, SearchBudget::UNBOUNDED, SolveOptions::NO_PRUNING)
                    .unwrap();
            assert_eq!(on.value, off.value, "n = {n}");
        }
    }

    #[test]
    fn degeneracy_rank_is_a_permutation() {
        let g = total_graph(&Graph::cycle(6).unwrap()).graph;
        let mut r = degeneracy_rank(&g);
        r.sort_unstable();
        assert_eq!(r, (0..12).collect::<Vec<_>>());
    }
}
