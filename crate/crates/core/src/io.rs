//! Edge-list text, DOT export, and the JSON shapes used for label maps and
//! certificates.
//!
//! Edge lists: a header line `n m`, then `m` lines `i j` with 1-based
//! endpoints in either order. Blank lines and lines starting with `#` are
//! ignored.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, ObjectId, TotalGraph};
use crate::verifiers::{Coloring, Universe};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header \"n m\""))?;
    let [n, m] = numbers::<2>(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines.by_ref() {
        if edges.len() == m {
            return Err(Error::parse(line, format!("more than {m} edges")));
        }
        let [i, j] = numbers::<2>(line, l)?;
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::parse(line, format!("endpoint out of range 1..={n}")));
        }
        if i == j {
            return Err(Error::parse(line, "self-loop"));
        }
        edges.push((i.min(j), i.max(j)));
    }
    if edges.len() != m {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::parse(0, format!("duplicate edge {} {}", w[0].0, w[0].1)));
    }
    Graph::from_one_based(n, edges)
}

fn numbers<const K: usize>(line: usize, l: &str) -> Result<[usize; K]> {
    let fields: Vec<&str> = l.split_whitespace().collect();
    if fields.len() != K {
        return Err(Error::parse(line, format!("expected {K} integers, got {l:?}")));
    }
    let mut out = [0; K];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| Error::parse(line, format!("not a nonnegative integer: {f:?}")))?;
    }
    Ok(out)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for &(a, b) in g.edges() {
        let _ = writeln!(s, "{} {}", a + 1, b + 1);
    }
    s
}

/// DOT with nodes named `v1..vn`.
pub fn to_dot(g: &Graph, name: &str) -> String {
    dot(name, g, |v| ObjectId::Vertex(v + 1).to_string())
}

/// DOT of a total graph, nodes named by their objects (`v3`, `e3_4`).
pub fn total_to_dot(t: &TotalGraph, name: &str) -> String {
    dot(name, &t.graph, |v| t.label(v).to_string())
}

/// DOT of a mixed coloring drawn on its total graph; nodes carry a
/// `class` attribute (1-based) and a fill color from a fixed palette.
pub fn coloring_to_dot(t: &TotalGraph, c: &Coloring, name: &str) -> Result<String> {
    let total = c.to_total(t)?;
    let class_of = class_per_vertex(t.graph.order(), &total);
    Ok(styled_dot(name, &t.graph, |v| t.label(v).to_string(), &class_of))
}

/// DOT of a vertex coloring of `g`, styled like [`coloring_to_dot`].
pub fn vertex_coloring_to_dot(g: &Graph, c: &Coloring, name: &str) -> Result<String> {
    c.assignment(g.order())?;
    let class_of = class_per_vertex(g.order(), c);
    Ok(styled_dot(name, g, |v| ObjectId::Vertex(v + 1).to_string(), &class_of))
}

/// DOT with the members of `set` (0-based vertex indices of `g`) filled.
pub fn set_to_dot(g: &Graph, set: &[usize], name: &str, label: impl Fn(usize) -> String) -> String {
    let mut class_of = vec![0; g.order()];
    for &v in set {
        class_of[v] = 1;
    }
    styled_dot(name, g, label, &class_of)
}

fn class_per_vertex(n: usize, c: &Coloring) -> Vec<usize> {
    let mut class_of = vec![0; n];
    for (k, class) in c.classes.iter().enumerate() {
        for o in class {
            if let ObjectId::Vertex(i) = o {
                class_of[i - 1] = k + 1;
            }
        }
    }
    class_of
}

/// Class 0 means unstyled.
fn styled_dot(name: &str, g: &Graph, label: impl Fn(usize) -> String, class_of: &[usize]) -> String {
    let mut s = format!("graph {name} {{\n  node [style=filled, fillcolor=white];\n");
    for (v, &k) in class_of.iter().enumerate() {
        if k == 0 {
            let _ = writeln!(s, "  \"{}\";", label(v));
        } else {
            let _ = writeln!(
                s,
                "  \"{}\" [class={k}, fillcolor=\"/set312/{}\"];",
                label(v),
                (k - 1) % 12 + 1
            );
        }
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(s, "  \"{}\" -- \"{}\";", label(a), label(b));
    }
    s.push_str("}\n");
    s
}

fn dot(name: &str, g: &Graph, label: impl Fn(usize) -> String) -> String {
    let mut s = format!("graph {name} {{\n");
    for v in 0..g.order() {
        let _ = writeln!(s, "  \"{}\";", label(v));
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(s, "  \"{}\" -- \"{}\";", label(a), label(b));
    }
    s.push_str("}\n");
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelEntry {
    /// 1-based vertex of the total graph.
    pub vertex: usize,
    pub object: ObjectId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelMap {
    pub base_order: usize,
    pub base_size: usize,
    pub labels: Vec<LabelEntry>,
}

pub fn label_map(t: &TotalGraph) -> LabelMap {
    LabelMap {
        base_order: t.base_order(),
        base_size: t.base_size(),
        labels: t
            .labels()
            .iter()
            .enumerate()
            .map(|(v, &object)| LabelEntry { vertex: v + 1, object })
            .collect(),
    }
}

/// On-disk certificate: either `classes` (a coloring) or `set`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDoc {
    pub universe: Universe,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<ObjectId>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<ObjectId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl CertificateDoc {
    pub fn coloring(c: &Coloring, provenance: Option<&str>) -> Self {
        CertificateDoc {
            universe: c.universe,
            classes: Some(c.classes.clone()),
            set: None,
            provenance: provenance.map(str::to_owned),
        }
    }

    pub fn set(universe: Universe, set: &[ObjectId], provenance: Option<&str>) -> Self {
        CertificateDoc {
            universe,
            classes: None,
            set: Some(set.to_vec()),
            provenance: provenance.map(str::to_owned),
        }
    }

    pub fn as_coloring(&self) -> Option<Coloring> {
        self.classes.clone().map(|c| Coloring::new(self.universe, c))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes") + "\n"
    }
}

pub fn parse_certificate(text: &str) -> Result<CertificateDoc> {
    let doc: CertificateDoc =
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    if doc.classes.is_some() == doc.set.is_some() {
        return Err(Error::parse(0, "a certificate has exactly one of \"classes\" and \"set\""));
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::total_graph;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let text = write_edge_list(&g);
        assert!(text.starts_with("5 5\n"));
        assert!(text.contains("\n1 5\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_canonicalizes_and_skips_comments() {
        let g = parse_edge_list("# triangle\n3 3\n\n2 1\n3 2\n3 1\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn edge_list_errors_carry_lines() {
        let line = |t: &str| match parse_edge_list(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line(""), 1);
        assert_eq!(line("3 2\n1 2\n1 x\n"), 3);
        assert_eq!(line("3 2\n1 2\n1 4\n"), 3);
        assert_eq!(line("3 1\n2 2\n"), 2);
        assert_eq!(line("3 1\n1 2\n2 3\n"), 3);
        assert!(parse_edge_list("3 2\n1 2\n2 1\n").is_err());
        assert!(parse_edge_list("3 2\n1 2\n").is_err());
    }

    #[test]
    fn dot_labels_objects() {
        let t = total_graph(&Graph::path(3).unwrap());
        let d = total_to_dot(&t, "T");
        assert!(d.contains("\"v1\" -- \"e1_2\""));
        assert_eq!(d.matches(" -- ").count(), t.graph.size());
        assert!(to_dot(&Graph::path(2).unwrap(), "P2").contains("\"v1\" -- \"v2\""));
        let c = Coloring::new(
            Universe::Mixed,
            vec![vec!["v1".parse().unwrap(), "e2_3".parse().unwrap()], vec!["v3".parse().unwrap(), "e1_2".parse().unwrap()], vec!["v2".parse().unwrap()]],
        );
        let d = coloring_to_dot(&t, &c, "T").unwrap();
        assert!(d.contains("\"e2_3\" [class=1,"));
        assert!(d.contains("\"v2\" [class=3,"));
    }

    #[test]
    fn label_map_json() {
        let t = total_graph(&Graph::path(2).unwrap());
        let json = serde_json::to_string(&label_map(&t)).unwrap();
        assert_eq!(
            json,
            r#"{"base_order":2,"base_size":1,"labels":[{"vertex":1,"object":"v1"},{"vertex":2,"object":"v2"},{"vertex":3,"object":"e1_2"}]}"#
        );
    }

    #[test]
    fn certificate_json() {
        let doc = parse_certificate(r#"{"universe":"mixed","classes":[["v1","e2_3"],["v2"]]}"#).unwrap();
        assert_eq!(doc.as_coloring().unwrap().len(), 2);
        assert_eq!(parse_certificate(&doc.to_json()).unwrap(), doc);
        assert!(parse_certificate(r#"{"universe":"mixed","classes":[["v1""#).is_err());
        assert!(parse_certificate(r#"{"universe":"mixed"}"#).is_err());
        assert!(parse_certificate(r#"{"universe":"mixed","set":["x9"]}"#).is_err());
        let set = CertificateDoc::set(Universe::Mixed, &["v2".parse().unwrap()], Some("constructed"));
        assert!(set.to_json().contains("\"provenance\": \"constructed\""));
    }
}
