//! Certificate checks: proper and total colorings, (mixed) total dominating
//! sets, independent sets, total dominator colorings of a graph and total
//! dominator total colorings of its mixed objects.
//!
//! A vertex `v` totally dominates a class `C` when `v` is adjacent to every
//! member of `C`. Since nothing is adjacent to itself, `v` never dominates a
//! class that contains `v`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::budget::SearchBudget;
use crate::error::{Error, Result};
use crate::graph::{Graph, ObjectId, TotalGraph};
use crate::solvers::chromatic;

/// Which objects a coloring or set ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Universe {
    /// The vertices of a graph.
    Vertices,
    /// Vertices and edges of a base graph.
    Mixed,
}

/// An ordered partition of a universe into color classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub universe: Universe,
    pub classes: Vec<Vec<ObjectId>>,
}

impl Coloring {
    pub fn new(universe: Universe, classes: Vec<Vec<ObjectId>>) -> Self {
        Coloring { universe, classes }
    }

    /// Vertex coloring from a 0-based color per vertex. Class `c` collects the
    /// vertices with color `c`; unused colors are dropped.
    pub fn from_assignment(colors: &[usize]) -> Self {
        let k = colors.iter().copied().max().map_or(0, |c| c + 1);
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].push(ObjectId::Vertex(v + 1));
        }
        classes.retain(|c| !c.is_empty());
        Coloring::new(Universe::Vertices, classes)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Color index per vertex of an `n`-vertex graph; checks that the classes
    /// are nonempty, disjoint and cover `1..=n`.
    pub fn assignment(&self, n: usize) -> Result<Vec<usize>> {
        if self.universe != Universe::Vertices {
            return Err(Error::Coverage("expected a vertex coloring".into()));
        }
        let mut colors = vec![usize::MAX; n];
        for (c, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::Coverage(format!("class {} is empty", c + 1)));
            }
            for &o in class {
                let v = match o {
                    ObjectId::Vertex(i) if i >= 1 && i <= n => i - 1,
                    _ => return Err(Error::Coverage(format!("{o} is not a vertex of the graph"))),
                };
                if colors[v] != usize::MAX {
                    return Err(Error::Coverage(format!("{o} appears in two classes")));
                }
                colors[v] = c;
            }
        }
        if let Some(v) = colors.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Coverage(format!("v{} is not colored", v + 1)));
        }
        Ok(colors)
    }

    /// Color index per object of `g`, in the order of [`Graph::objects`].
    pub fn mixed_assignment(&self, g: &Graph) -> Result<Vec<usize>> {
        if self.universe != Universe::Mixed {
            return Err(Error::Coverage("expected a coloring of vertices and edges".into()));
        }
        let n = g.order();
        let mut colors = vec![usize::MAX; n + g.size()];
        for (c, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::Coverage(format!("class {} is empty", c + 1)));
            }
            for &o in class {
                let idx = object_index(g, o)
                    .ok_or_else(|| Error::Coverage(format!("{o} is not an object of the graph")))?;
                if colors[idx] != usize::MAX {
                    return Err(Error::Coverage(format!("{o} appears in two classes")));
                }
                colors[idx] = c;
            }
        }
        if let Some(i) = colors.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Coverage(format!("{} is not colored", g.objects()[i])));
        }
        Ok(colors)
    }

    /// Mixed coloring of a base graph -> vertex coloring of its total graph.
    pub fn to_total(&self, t: &TotalGraph) -> Result<Coloring> {
        if self.universe != Universe::Mixed {
            return Err(Error::Coverage("expected a coloring of vertices and edges".into()));
        }
        let classes = self
            .classes
            .iter()
            .map(|class| {
                t.indices_of(class)
                    .map(|idx| idx.into_iter().map(|v| ObjectId::Vertex(v + 1)).collect())
            })
            .collect::<Result<_>>()?;
        Ok(Coloring::new(Universe::Vertices, classes))
    }

    /// Vertex coloring of a total graph -> mixed coloring of the base graph.
    pub fn from_total(&self, t: &TotalGraph) -> Result<Coloring> {
        let n = t.graph.order();
        let classes = self
            .classes
            .iter()
            .map(|class| {
                class
                    .iter()
                    .map(|&o| match o {
                        ObjectId::Vertex(i) if i >= 1 && i <= n => Ok(t.label(i - 1)),
                        _ => Err(Error::Coverage(format!("{o} is not a vertex of the total graph"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(Coloring::new(Universe::Mixed, classes))
    }
}

fn object_index(g: &Graph, o: ObjectId) -> Option<usize> {
    match o {
        ObjectId::Vertex(i) if i >= 1 && i <= g.order() => Some(i - 1),
        ObjectId::Edge(i, j) if i >= 1 && j <= g.order() && i < j => {
            g.edge_index(i - 1, j - 1).map(|k| g.order() + k)
        }
        _ => None,
    }
}

/// Result of a properness check; `conflict` names the first monochromatic
/// adjacent (or incident) pair in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperCheck {
    pub proper: bool,
    pub conflict: Option<(ObjectId, ObjectId)>,
}

/// Checks that no edge of `g` is monochromatic.
pub fn is_proper_coloring(g: &Graph, c: &Coloring) -> Result<ProperCheck> {
    let colors = c.assignment(g.order())?;
    let conflict = g
        .edges()
        .iter()
        .find(|&&(a, b)| colors[a] == colors[b])
        .map(|&(a, b)| (ObjectId::Vertex(a + 1), ObjectId::Vertex(b + 1)));
    Ok(ProperCheck {
        proper: conflict.is_none(),
        conflict,
    })
}

/// Checks a coloring of vertices and edges: related objects differ in color.
pub fn is_total_coloring(g: &Graph, c: &Coloring) -> Result<ProperCheck> {
    let colors = c.mixed_assignment(g)?;
    let objects = g.objects();
    let conflict = first_related_conflict(&objects, &colors, |a, b| g.objects_related(a, b));
    Ok(ProperCheck {
        proper: conflict.is_none(),
        conflict,
    })
}

fn first_related_conflict(
    objects: &[ObjectId],
    colors: &[usize],
    related: impl Fn(ObjectId, ObjectId) -> bool,
) -> Option<(ObjectId, ObjectId)> {
    for (i, &a) in objects.iter().enumerate() {
        for (j, &b) in objects.iter().enumerate().skip(i + 1) {
            if colors[i] == colors[j] && related(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Vertices adjacent to every member of `cls` (0-based). A member of `cls`
/// can appear only if it is adjacent to all the other members, which for a
/// class of size one never happens.
pub fn common_neighborhood(g: &Graph, cls: &[usize]) -> Vec<usize> {
    (0..g.order())
        .filter(|&v| cls.iter().all(|&u| g.adjacent(v, u)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdsCheck {
    pub valid: bool,
    /// 0-based vertices without a neighbor in the set.
    pub uncovered: Vec<usize>,
}

/// Every vertex, including members of `s`, needs a neighbor in `s`.
pub fn is_total_dominating_set(g: &Graph, s: &[usize]) -> TdsCheck {
    let mut inside = vec![false; g.order()];
    for &v in s {
        if v < g.order() {
            inside[v] = true;
        }
    }
    let uncovered: Vec<usize> = (0..g.order())
        .filter(|&v| !g.neighbors(v).iter().any(|&w| inside[w]))
        .collect();
    TdsCheck {
        valid: uncovered.is_empty(),
        uncovered,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedCheck {
    pub valid: bool,
    pub offending: Vec<ObjectId>,
}

/// Every object of `g` must be adjacent or incident to an object of `s`.
/// Works directly on the base graph.
pub fn is_total_mixed_dominating_set(g: &Graph, s: &[ObjectId]) -> Result<MixedCheck> {
    check_objects(g, s)?;
    let offending: Vec<ObjectId> = g
        .objects()
        .into_iter()
        .filter(|&o| !s.iter().any(|&x| g.objects_related(o, x.canonical())))
        .collect();
    Ok(MixedCheck {
        valid: offending.is_empty(),
        offending,
    })
}

/// No two objects of `s` are adjacent or incident. `offending` holds the
/// first conflicting pair.
pub fn is_mixed_independent_set(g: &Graph, s: &[ObjectId]) -> Result<MixedCheck> {
    check_objects(g, s)?;
    let s: Vec<ObjectId> = s.iter().map(|o| o.canonical()).collect();
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            if a == b || g.objects_related(a, b) {
                return Ok(MixedCheck {
                    valid: false,
                    offending: vec![a, b],
                });
            }
        }
    }
    Ok(MixedCheck {
        valid: true,
        offending: Vec::new(),
    })
}

fn check_objects(g: &Graph, s: &[ObjectId]) -> Result<()> {
    match s.iter().find(|&&o| !g.contains_object(o.canonical())) {
        Some(o) => Err(Error::Coverage(format!("{o} is not an object of the graph"))),
        None => Ok(()),
    }
}

/// 0-based vertex set with no two members adjacent.
pub fn is_independent_set(g: &Graph, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &a)| {
        a < g.order() && s[i + 1..].iter().all(|&b| a != b && !g.adjacent(a, b))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Index of the lowest class the object totally dominates.
    Dominates(usize),
    Undominated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationReport {
    pub valid: bool,
    /// First monochromatic adjacent pair, if any.
    pub conflict: Option<(ObjectId, ObjectId)>,
    pub witnesses: Vec<(ObjectId, Witness)>,
    /// `CN(V_i)` for every class, in class order.
    pub common_neighborhoods: Vec<Vec<ObjectId>>,
}

impl DominationReport {
    pub fn undominated(&self) -> Vec<ObjectId> {
        self.witnesses
            .iter()
            .filter(|(_, w)| *w == Witness::Undominated)
            .map(|&(o, _)| o)
            .collect()
    }

    /// Human-readable first violation, `None` when valid.
    pub fn first_violation(&self) -> Option<String> {
        if let Some((a, b)) = self.conflict {
            return Some(format!("{a} and {b} are adjacent but share a color"));
        }
        self.undominated()
            .first()
            .map(|o| format!("{o} totally dominates no color class"))
    }
}

fn domination_report(
    objects: &[ObjectId],
    colors: &[usize],
    k: usize,
    related: impl Fn(ObjectId, ObjectId) -> bool,
) -> DominationReport {
    let conflict = first_related_conflict(objects, colors, &related);
    let mut members = vec![Vec::new(); k];
    for (i, &c) in colors.iter().enumerate() {
        members[c].push(i);
    }
    let mut cn = vec![Vec::new(); k];
    let mut witnesses = Vec::with_capacity(objects.len());
    for (i, &o) in objects.iter().enumerate() {
        let mut witness = Witness::Undominated;
        for (c, class) in members.iter().enumerate() {
            if class.iter().all(|&j| j != i && related(o, objects[j])) {
                cn[c].push(o);
                if witness == Witness::Undominated {
                    witness = Witness::Dominates(c);
                }
            }
        }
        witnesses.push((o, witness));
    }
    let valid = conflict.is_none() && witnesses.iter().all(|(_, w)| *w != Witness::Undominated);
    DominationReport {
        valid,
        conflict,
        witnesses,
        common_neighborhoods: cn,
    }
}

/// Total dominator coloring check: proper, and every vertex is adjacent to
/// all of some class.
pub fn is_tdc(g: &Graph, c: &Coloring) -> Result<DominationReport> {
    let colors = c.assignment(g.order())?;
    let objects: Vec<ObjectId> = (1..=g.order()).map(ObjectId::Vertex).collect();
    Ok(domination_report(&objects, &colors, c.len(), |a, b| match (a, b) {
        (ObjectId::Vertex(i), ObjectId::Vertex(j)) => g.adjacent(i - 1, j - 1),
        _ => false,
    }))
}

/// Total dominator total coloring check on the mixed objects of `g`, using the
/// adjacent-or-incident relation of `g` directly (no total graph is built).
pub fn is_tdtc(g: &Graph, c: &Coloring) -> Result<DominationReport> {
    let colors = c.mixed_assignment(g)?;
    let objects = g.objects();
    Ok(domination_report(&objects, &colors, c.len(), |a, b| {
        g.objects_related(a, b)
    }))
}

/// How `tdc_from_tds` colors the graph left after removing the TDS.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RemainderColoring {
    /// Exact chromatic number; the class count is `|S| + χ(G - S)`.
    #[default]
    Exact,
    /// DSATUR greedy; the class count is only an upper bound.
    Greedy,
}

/// Turns a total dominating set into a total dominator coloring: one
/// singleton class per member of `s` (in index order), followed by a proper
/// coloring of `G - S`.
pub fn tdc_from_tds(g: &Graph, s: &[usize], mode: RemainderColoring) -> Result<Coloring> {
    let set: BTreeSet<usize> = s.iter().copied().collect();
    let members: Vec<usize> = set.iter().copied().collect();
    if members.iter().any(|&v| v >= g.order()) {
        return Err(Error::domain("TDS member out of range"));
    }
    let check = is_total_dominating_set(g, &members);
    if !check.valid {
        return Err(Error::domain(format!(
            "not a total dominating set: v{} has no neighbor in it",
            check.uncovered[0] + 1
        )));
    }
    let (rest, map) = g.without(&members)?;
    let rest_colors = match mode {
        RemainderColoring::Exact => chromatic::optimal_coloring(&rest, SearchBudget::UNBOUNDED).0,
        RemainderColoring::Greedy => chromatic::dsatur_greedy(&rest),
    };
    let mut classes: Vec<Vec<ObjectId>> = members.iter().map(|&v| vec![ObjectId::Vertex(v + 1)]).collect();
    let k = rest_colors.iter().copied().max().map_or(0, |c| c + 1);
    let mut extra = vec![Vec::new(); k];
    for (i, &c) in rest_colors.iter().enumerate() {
        extra[c].push(ObjectId::Vertex(map[i] + 1));
    }
    classes.extend(extra.into_iter().filter(|c| !c.is_empty()));
    let coloring = Coloring::new(Universe::Vertices, classes);
    // Each S-member is dominated by the singleton of one of its S-neighbors.
    let report = is_tdc(g, &coloring)?;
    assert!(report.valid, "tdc_from_tds produced an invalid coloring: {:?}", report.first_violation());
    Ok(coloring)
}
