//! Finite simple graphs with labeled vertices.
//!
//! A [`Graph`] is immutable once built. Vertices keep the order in which they
//! were supplied; that order is what every downstream construction means by
//! "label order". Edges are unordered pairs stored with the lexicographically
//! smaller label first and kept sorted by that label pair, so two graphs with
//! the same edge set always serialize identically.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const RESERVED: &[char] = &['[', ']', '{', '}', ',', ':', '*', '+', '"'];

/// A finite simple undirected graph.
#[derive(Clone, Debug)]
pub struct Graph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    edge_index: HashMap<(usize, usize), usize>,
    neighbors: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

fn check_label(label: &str) -> Result<()> {
    if label.is_empty()
        || label
            .chars()
            .any(|c| c.is_whitespace() || RESERVED.contains(&c))
    {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

impl Graph {
    /// Builds a validated graph. Edges are deduplicated as unordered pairs.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            check_label(v)?;
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index
                .get(a)
                .ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            if ia == ib {
                return Err(Error::Loop(a.to_string()));
            }
            pairs.push(if vertices[ia] < vertices[ib] {
                (ia, ib)
            } else {
                (ib, ia)
            });
        }
        pairs.sort_by(|x, y| {
            (&vertices[x.0], &vertices[x.1]).cmp(&(&vertices[y.0], &vertices[y.1]))
        });
        pairs.dedup();
        Ok(Self::assemble(vertices, index, pairs))
    }

    fn assemble(
        vertices: Vec<String>,
        index: HashMap<String, usize>,
        edges: Vec<(usize, usize)>,
    ) -> Graph {
        let mut neighbors = vec![Vec::new(); vertices.len()];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (k, &(a, b)) in edges.iter().enumerate() {
            neighbors[a].push(b);
            neighbors[b].push(a);
            edge_index.insert((a.min(b), a.max(b)), k);
        }
        for n in &mut neighbors {
            n.sort_unstable();
        }
        Graph {
            vertices,
            index,
            edges,
            edge_index,
            neighbors,
        }
    }

    /// The graph with no vertices.
    pub fn empty() -> Graph {
        Self::assemble(Vec::new(), HashMap::new(), Vec::new())
    }

    /// The star with `p` spikes `c1..cp` around `c0` and a tail `c0 - d1 - ... - dq`.
    /// With `plus`, an isolated vertex `c0'` is appended.
    pub fn gamma(p: u64, q: u64, plus: bool) -> Result<Graph> {
        if p < 1 || q < 1 {
            return Err(Error::GammaParameters { p, q });
        }
        let mut vertices = vec!["c0".to_string()];
        vertices.extend((1..=p).map(|i| format!("c{i}")));
        vertices.extend((1..=q).map(|i| format!("d{i}")));
        if plus {
            vertices.push("c0'".to_string());
        }
        let mut edges: Vec<(String, String)> = (1..=p)
            .map(|i| ("c0".to_string(), format!("c{i}")))
            .collect();
        edges.push(("c0".into(), "d1".into()));
        edges.extend((1..q).map(|i| (format!("d{i}"), format!("d{}", i + 1))));
        Graph::new(vertices, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `(|V|, |E|)`.
    pub fn counts(&self) -> (usize, usize) {
        (self.vertex_count(), self.edge_count())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub(crate) fn require_index(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Edges as canonical vertex-index pairs, in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges
            .iter()
            .map(|&(a, b)| (self.label(a), self.label(b)))
    }

    /// Position of the edge `{a, b}` in [`Graph::edges`], if present.
    pub fn edge_position(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index.contains_key(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.neighbors
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.neighbors[v].is_empty()
    }

    /// Label of an edge as used in structure files: `{x,y}`.
    pub fn edge_label(&self, e: usize) -> String {
        let (a, b) = self.edges[e];
        format!("{{{},{}}}", self.label(a), self.label(b))
    }

    pub fn to_json(&self) -> String {
        let file = GraphFile {
            vertices: self.vertices.clone(),
            edges: self
                .edge_labels()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let file: GraphFile = serde_json::from_str(text)?;
        Graph::new(file.vertices, file.edges)
    }

    /// Graphviz export.
    pub fn to_dot(&self) -> String {
        fn id(label: &str) -> String {
            let plain = label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                && !label.starts_with(|c: char| c.is_ascii_digit());
            if plain {
                label.to_string()
            } else {
                format!("\"{}\"", label.replace('\\', "\\\\"))
            }
        }
        let mut out = String::from("graph G {\n");
        for (v, label) in self.vertices.iter().enumerate() {
            if self.is_isolated(v) {
                let _ = writeln!(out, "  {};", id(label));
            }
        }
        for (a, b) in self.edge_labels() {
            let _ = writeln!(out, "  {} -- {};", id(a), id(b));
        }
        out.push_str("}\n");
        out
    }
}

/// A vertex assignment between two graphs, not necessarily a homomorphism.
#[derive(Clone, Debug)]
pub struct GraphMap<'a> {
    source: &'a Graph,
    target: &'a Graph,
    assignment: Vec<usize>,
}

impl<'a> GraphMap<'a> {
    pub fn new(source: &'a Graph, target: &'a Graph, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.vertex_count() {
            let missing = source
                .vertices()
                .get(assignment.len())
                .cloned()
                .unwrap_or_default();
            return Err(Error::PartialMap(missing));
        }
        if let Some(&bad) = assignment.iter().find(|&&t| t >= target.vertex_count()) {
            return Err(Error::UnknownVertex(format!("#{bad}")));
        }
        Ok(GraphMap {
            source,
            target,
            assignment,
        })
    }

    /// Builds a map from `(source label, target label)` pairs.
    pub fn from_labels<S: AsRef<str>>(
        source: &'a Graph,
        target: &'a Graph,
        pairs: &[(S, S)],
    ) -> Result<Self> {
        let mut assignment = vec![usize::MAX; source.vertex_count()];
        for (a, b) in pairs {
            let ia = source.require_index(a.as_ref())?;
            assignment[ia] = target.require_index(b.as_ref())?;
        }
        if let Some(v) = assignment.iter().position(|&t| t == usize::MAX) {
            return Err(Error::PartialMap(source.label(v).to_string()));
        }
        Ok(GraphMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(graph: &'a Graph) -> Self {
        GraphMap {
            source: graph,
            target: graph,
            assignment: (0..graph.vertex_count()).collect(),
        }
    }

    pub fn source(&self) -> &'a Graph {
        self.source
    }

    pub fn target(&self) -> &'a Graph {
        self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn image(&self, v: usize) -> usize {
        self.assignment[v]
    }

    /// Position in the target edge list of the image of source edge `e`.
    pub fn edge_image(&self, e: usize) -> Option<usize> {
        let (a, b) = self.source.edges()[e];
        self.target.edge_position(self.image(a), self.image(b))
    }

    pub fn check_homomorphism(&self) -> Result<()> {
        for &(a, b) in self.source.edges() {
            let (fa, fb) = (self.image(a), self.image(b));
            if fa == fb || !self.target.has_edge(fa, fb) {
                return Err(Error::NotHomomorphism(
                    self.source.label(a).to_string(),
                    self.source.label(b).to_string(),
                ));
            }
        }
        Ok(())
    }

    pub fn check_injective(&self) -> Result<()> {
        let mut seen = vec![None; self.target.vertex_count()];
        for (v, &t) in self.assignment.iter().enumerate() {
            if let Some(u) = seen[t] {
                return Err(Error::NotInjective(
                    self.source.label(u).to_string(),
                    self.source.label(v).to_string(),
                ));
            }
            seen[t] = Some(v);
        }
        Ok(())
    }

    pub fn is_homomorphism(&self) -> bool {
        self.check_homomorphism().is_ok()
    }

    pub fn is_injective(&self) -> bool {
        self.check_injective().is_ok()
    }

    pub fn is_injective_homomorphism(&self) -> bool {
        self.is_injective() && self.is_homomorphism()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &GraphMap<'a>) -> Result<GraphMap<'a>> {
        if !std::ptr::eq(self.target, next.source) && self.target != next.source {
            return Err(Error::DimensionMismatch {
                expected: self.target.vertex_count(),
                found: next.source.vertex_count(),
            });
        }
        Ok(GraphMap {
            source: self.source,
            target: next.target,
            assignment: self.assignment.iter().map(|&v| next.image(v)).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_nonempty_graph() {
        let g = Graph::new(["a", "b"], [("a", "b")]).unwrap();
        assert_eq!(g.counts(), (2, 1));
    }

    #[test]
    fn rejects_loops_unknown_endpoints_and_duplicates() {
        assert!(matches!(
            Graph::new(["a"], [("a", "a")]),
            Err(Error::Loop(_))
        ));
        assert!(matches!(
            Graph::new(["a"], [("a", "z")]),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            Graph::new(["a", "a"], Vec::<(&str, &str)>::new()),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(
            Graph::new(["a b"], Vec::<(&str, &str)>::new()),
            Err(Error::InvalidLabel(_))
        ));
    }

    #[test]
    fn unordered_pairs_are_deduplicated() {
        let g = Graph::new(["a", "b", "c"], [("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edge_labels().next(), Some(("a", "b")));
    }

    #[test]
    fn gamma_shapes() {
        let g = Graph::gamma(2, 3, false).unwrap();
        assert_eq!(g.vertices(), ["c0", "c1", "c2", "d1", "d2", "d3"]);
        let edges: Vec<_> = g.edge_labels().collect();
        assert_eq!(
            edges,
            [
                ("c0", "c1"),
                ("c0", "c2"),
                ("c0", "d1"),
                ("d1", "d2"),
                ("d2", "d3")
            ]
        );
        assert_eq!(Graph::gamma(3, 2, false).unwrap().counts(), (6, 5));
        assert_eq!(Graph::gamma(2, 3, true).unwrap().counts(), (7, 5));

        let plus = Graph::gamma(2, 2, true).unwrap();
        assert_eq!(plus.counts(), (6, 4));
        let isolated: Vec<_> = (0..6).filter(|&v| plus.is_isolated(v)).collect();
        assert_eq!(isolated, [plus.index_of("c0'").unwrap()]);

        assert!(Graph::gamma(0, 2, false).is_err());
        assert!(Graph::gamma(2, 0, true).is_err());
        assert_eq!(Graph::empty().counts(), (0, 0));
    }

    #[test]
    fn gamma_degree_profile() {
        for p in 2..7u64 {
            for q in 2..7u64 {
                let g = Graph::gamma(p, q, false).unwrap();
                let degrees: Vec<_> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
                assert_eq!(degrees.iter().filter(|&&d| d == p as usize + 1).count(), 1);
                let c0 = g.index_of("c0").unwrap();
                let leaves = g
                    .neighbors(c0)
                    .iter()
                    .filter(|&&v| g.degree(v) == 1)
                    .count();
                assert_eq!(leaves, p as usize);
                assert_eq!(g.degree(g.index_of(&format!("d{q}")).unwrap()), 1);
            }
        }
    }

    #[test]
    fn injective_homomorphisms() {
        let g = Graph::gamma(2, 2, false).unwrap();
        assert!(GraphMap::identity(&g).is_injective_homomorphism());

        let swap = GraphMap::from_labels(
            &g,
            &g,
            &[
                ("c0", "c0"),
                ("c1", "c2"),
                ("c2", "c1"),
                ("d1", "d1"),
                ("d2", "d2"),
            ],
        )
        .unwrap();
        assert!(swap.is_injective_homomorphism());

        let two = Graph::new(["x1", "x2"], Vec::<(&str, &str)>::new()).unwrap();
        let one = Graph::new(["x0"], Vec::<(&str, &str)>::new()).unwrap();
        let collapse = GraphMap::from_labels(&two, &one, &[("x1", "x0"), ("x2", "x0")]).unwrap();
        assert!(collapse.is_homomorphism());
        assert!(!collapse.is_injective_homomorphism());
    }

    #[test]
    fn json_and_dot() {
        let g = Graph::gamma(2, 1, true).unwrap();
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        let dot = g.to_dot();
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("c0 -- c1;"));
        assert!(dot.contains("\"c0'\";"));
        let parsed =
            Graph::from_json(r#"{"vertices": ["b", "a"], "edges": [["b", "a"]]}"#).unwrap();
        assert!(parsed.to_json().contains("\"a\",\n      \"b\""));
    }
}
