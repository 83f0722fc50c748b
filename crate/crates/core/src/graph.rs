//! Simple undirected graphs, the mixed object universe `V ∪ E`, and the
//! line / total graph constructions built on top of them.
//!
//! Vertices are stored 0-based. Everything that leaves the crate as a label
//! (certificates, edge lists, DOT, JSON) is 1-based, so vertex `0` prints as
//! `v1` and the edge `{0, 1}` prints as `e1_2`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Canonical 0-based edges `(i, j)` with `i < j`, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    adjacency: Vec<FixedBitSet>,
}

impl Graph {
    /// Builds a graph from 0-based edges. Edges are canonicalized; self-loops,
    /// duplicates and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::domain(format!(
                    "edge ({}, {}) out of range for {} vertices",
                    a + 1,
                    b + 1,
                    n
                )));
            }
            if a == b {
                return Err(Error::domain(format!("self-loop at vertex {}", a + 1)));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::domain(format!(
                    "duplicate edge ({}, {})",
                    e.0 + 1,
                    e.1 + 1
                )));
            }
        }
        Ok(Self::from_canonical(n, set.into_iter().collect()))
    }

    /// Same as [`Graph::from_edges`] with 1-based endpoints.
    pub fn from_one_based(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut shifted = Vec::new();
        for (a, b) in edges {
            if a == 0 || b == 0 {
                return Err(Error::domain("vertex labels are 1-based"));
            }
            shifted.push((a - 1, b - 1));
        }
        Self::from_edges(n, shifted)
    }

    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); n];
        let mut adjacency = vec![FixedBitSet::with_capacity(n); n];
        for &(a, b) in &edges {
            neighbors[a].push(b);
            neighbors[b].push(a);
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            neighbors,
            adjacency,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Self::from_canonical(n, edges)
    }

    /// The cycle `v_1 v_2 ... v_n`; the wrap edge is `(1, n)`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain(format!("cycle needs n >= 3, got {n}")));
        }
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Ok(Self::from_canonical(n, edges))
    }

    /// The path `v_1 v_2 ... v_n`.
    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("path needs n >= 2, got {n}")));
        }
        Ok(Self::from_canonical(n, (0..n - 1).map(|i| (i, i + 1)).collect()))
    }

    /// The star `K_{1,k}` with center `v_1`.
    pub fn star(k: usize) -> Self {
        Self::from_canonical(k + 1, (1..=k).map(|j| (0, j)).collect())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Canonical 0-based edges in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adjacency[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// `None` for the graph without vertices.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Position of the canonical edge `(a, b)` in [`Graph::edges`].
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let e = (a.min(b), a.max(b));
        self.edges.binary_search(&e).ok()
    }

    /// Rejects graphs without vertices or with an isolated vertex.
    pub fn require_positive_min_degree(&self, what: &str) -> Result<()> {
        match self.min_degree() {
            None => Err(Error::domain(format!("{what} needs a non-empty graph"))),
            Some(0) => {
                let v = (0..self.n).find(|&v| self.degree(v) == 0).unwrap();
                Err(Error::domain(format!(
                    "{what} needs positive minimum degree; vertex {} is isolated",
                    v + 1
                )))
            }
            Some(_) => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// The subgraph induced by `keep` (0-based). The returned map sends each new
    /// vertex index to the original one.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut map: Vec<usize> = keep.to_vec();
        map.sort_unstable();
        map.dedup();
        if let Some(&bad) = map.iter().find(|&&v| v >= self.n) {
            return Err(Error::domain(format!(
                "vertex {} out of range for {} vertices",
                bad + 1,
                self.n
            )));
        }
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            position[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| position[a] != usize::MAX && position[b] != usize::MAX)
            .map(|&(a, b)| (position[a], position[b]))
            .collect();
        Ok((Graph::from_canonical(map.len(), edges), map))
    }

    /// The subgraph induced by the complement of `remove`.
    pub fn without(&self, remove: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut drop = vec![false; self.n];
        for &v in remove {
            if v >= self.n {
                return Err(Error::domain(format!("vertex {} out of range", v + 1)));
            }
            drop[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !drop[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Objects of the mixed universe in canonical order: vertices, then edges.
    pub fn objects(&self) -> Vec<ObjectId> {
        (0..self.n)
            .map(|v| ObjectId::Vertex(v + 1))
            .chain(self.edges.iter().map(|&(a, b)| ObjectId::Edge(a + 1, b + 1)))
            .collect()
    }

    /// Whether `o` names a vertex or an edge of this graph.
    pub fn contains_object(&self, o: ObjectId) -> bool {
        match o {
            ObjectId::Vertex(i) => i >= 1 && i <= self.n,
            ObjectId::Edge(i, j) => i >= 1 && j <= self.n && self.edge_index(i - 1, j - 1).is_some(),
        }
    }

    /// "Adjacent or incident" between two objects of this graph.
    pub fn objects_related(&self, a: ObjectId, b: ObjectId) -> bool {
        use ObjectId::*;
        match (a, b) {
            (Vertex(i), Vertex(j)) => self.adjacent(i - 1, j - 1),
            (Vertex(i), Edge(x, y)) | (Edge(x, y), Vertex(i)) => i == x || i == y,
            (Edge(a1, b1), Edge(a2, b2)) => {
                (a1, b1) != (a2, b2) && (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2)
            }
        }
    }
}

/// A vertex `v_i` or an edge `e_{ij}` of a base graph, 1-based, edges with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectId {
    Vertex(usize),
    Edge(usize, usize),
}

impl ObjectId {
    /// Canonical edge label: `edge(j, i) == edge(i, j)`.
    pub fn edge(i: usize, j: usize) -> Self {
        ObjectId::Edge(i.min(j), i.max(j))
    }

    pub fn canonical(self) -> Self {
        match self {
            ObjectId::Edge(i, j) => ObjectId::edge(i, j),
            v => v,
        }
    }

    pub fn is_vertex(self) -> bool {
        matches!(self, ObjectId::Vertex(_))
    }
}

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectId::Vertex(i) => write!(f, "v{i}"),
            ObjectId::Edge(i, j) => write!(f, "e{i}_{j}"),
        }
    }
}

impl FromStr for ObjectId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(0, format!("bad object label {s:?}"));
        let num = |t: &str| -> Result<usize> {
            match t.parse::<usize>() {
                Ok(x) if x >= 1 => Ok(x),
                _ => Err(bad()),
            }
        };
        if let Some(rest) = s.strip_prefix('v') {
            Ok(ObjectId::Vertex(num(rest)?))
        } else if let Some(rest) = s.strip_prefix('e') {
            let (a, b) = rest.split_once('_').ok_or_else(bad)?;
            let (a, b) = (num(a)?, num(b)?);
            if a == b {
                return Err(bad());
            }
            Ok(ObjectId::edge(a, b))
        } else {
            Err(bad())
        }
    }
}

impl Serialize for ObjectId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ObjectId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The line graph of `g`; vertex `k` of the result is edge `k` of `g`.
pub fn line_graph(g: &Graph) -> (Graph, Vec<ObjectId>) {
    let m = g.size();
    let mut edges = Vec::new();
    for v in 0..g.order() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| g.edge_index(v, w).unwrap())
            .collect();
        for (x, &a) in incident.iter().enumerate() {
            for &b in &incident[x + 1..] {
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let labels = g
        .edges()
        .iter()
        .map(|&(a, b)| ObjectId::Edge(a + 1, b + 1))
        .collect();
    (Graph::from_canonical(m, edges), labels)
}

/// `T(G)` together with the map from its vertices to objects of the base graph.
#[derive(Clone, Debug)]
pub struct TotalGraph {
    pub graph: Graph,
    labels: Vec<ObjectId>,
    base_order: usize,
}

/// Builds `T(g)`: base vertices first (`0..n`), then edges in lexicographic
/// order. Two objects are adjacent iff they are adjacent or incident in `g`.
pub fn total_graph(g: &Graph) -> TotalGraph {
    let n = g.order();
    let (line, _) = line_graph(g);
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for (k, &(a, b)) in g.edges().iter().enumerate() {
        edges.push((a, n + k));
        edges.push((b, n + k));
    }
    edges.extend(line.edges().iter().map(|&(x, y)| (n + x, n + y)));
    edges.sort_unstable();
    TotalGraph {
        graph: Graph::from_canonical(n + g.size(), edges),
        labels: g.objects(),
        base_order: n,
    }
}

impl TotalGraph {
    pub fn labels(&self) -> &[ObjectId] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> ObjectId {
        self.labels[v]
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn base_size(&self) -> usize {
        self.labels.len() - self.base_order
    }

    /// The vertex of `T(G)` that carries object `o`.
    pub fn index_of(&self, o: ObjectId) -> Option<usize> {
        match o.canonical() {
            ObjectId::Vertex(i) => (i >= 1 && i <= self.base_order).then(|| i - 1),
            e @ ObjectId::Edge(..) => self.labels[self.base_order..]
                .binary_search(&e)
                .ok()
                .map(|k| self.base_order + k),
        }
    }

    pub fn indices_of(&self, objects: &[ObjectId]) -> Result<Vec<usize>> {
        objects
            .iter()
            .map(|&o| {
                self.index_of(o)
                    .ok_or_else(|| Error::Coverage(format!("{o} is not an object of the base graph")))
            })
            .collect()
    }

    pub fn objects_of(&self, vertices: &[usize]) -> Vec<ObjectId> {
        vertices.iter().map(|&v| self.labels[v]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_and_path_shapes() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!((c3.order(), c3.size()), (3, 3));
        let c5 = Graph::cycle(5).unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2));
        let c9 = Graph::cycle(9).unwrap();
        assert!(c9.edge_index(0, 8).is_some());
        assert!(c9.objects().contains(&ObjectId::Edge(1, 9)));
        assert_eq!(Graph::path(2).unwrap().size(), 1);
        assert_eq!(Graph::path(4).unwrap().size(), 3);
        let p7 = Graph::path(7).unwrap();
        assert_eq!((p7.min_degree(), p7.max_degree()), (Some(1), 2));
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::path(1).is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(3, [(2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2)]);
    }

    #[test]
    fn line_graph_families() {
        let (l, labels) = line_graph(&Graph::path(4).unwrap());
        assert_eq!(l, Graph::path(3).unwrap());
        assert_eq!(labels, vec![ObjectId::Edge(1, 2), ObjectId::Edge(2, 3), ObjectId::Edge(3, 4)]);
        // C_5: edges (1,2),(1,5),(2,3),(3,4),(4,5) in lexicographic order.
        let (l5, _) = line_graph(&Graph::cycle(5).unwrap());
        assert_eq!(l5.size(), 5);
        assert!((0..5).all(|v| l5.degree(v) == 2));
        assert!(l5.is_connected());
        let (star, _) = line_graph(&Graph::star(3));
        assert_eq!(star, Graph::complete(3));
        let (empty, _) = line_graph(&Graph::empty(4));
        assert_eq!(empty.order(), 0);
    }

    #[test]
    fn total_graph_small_cases() {
        let t2 = total_graph(&Graph::path(2).unwrap());
        assert_eq!(t2.graph, Graph::complete(3));
        let t3 = total_graph(&Graph::cycle(3).unwrap());
        assert_eq!((t3.graph.order(), t3.graph.size()), (6, 12));
        for n in 3..12 {
            let t = total_graph(&Graph::cycle(n).unwrap());
            assert!((0..2 * n).all(|v| t.graph.degree(v) == 4), "T(C_{n}) not 4-regular");
        }
        assert_eq!(t3.index_of(ObjectId::Edge(1, 3)), Some(4));
        assert_eq!(t3.index_of(ObjectId::Edge(3, 1)), Some(4));
        assert_eq!(t3.index_of(ObjectId::Edge(1, 4)), None);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::cycle(5).unwrap();
        let (sub, map) = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(sub, Graph::path(3).unwrap());
        assert_eq!(map, vec![0, 1, 2]);
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(c5.induced_subgraph(&all).unwrap().0, c5);
        assert!(c5.induced_subgraph(&[5]).is_err());
    }

    #[test]
    fn object_labels() {
        assert_eq!("e4_3".parse::<ObjectId>().unwrap(), ObjectId::Edge(3, 4));
        assert_eq!(ObjectId::Edge(3, 4).to_string(), "e3_4");
        assert_eq!("v12".parse::<ObjectId>().unwrap(), ObjectId::Vertex(12));
        assert!("v0".parse::<ObjectId>().is_err());
        assert!("e3_3".parse::<ObjectId>().is_err());
        assert!("x1".parse::<ObjectId>().is_err());
        assert_eq!(ObjectId::Edge(9, 1).canonical(), ObjectId::Edge(1, 9));
    }
}
