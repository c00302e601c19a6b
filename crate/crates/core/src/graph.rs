//! Immutable simple connected graphs and the connectivity primitives every
//! other module is built on.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    MultiEdge(usize, usize),
    #[error("edge endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("{0} vertices exceed the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("label count {labels} does not match vertex count {n}")]
    Labels { labels: usize, n: usize },
}

/// Simple undirected connected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    vertex_count: usize,
    #[serde(skip)]
    adjacency: Vec<Vec<usize>>,
    #[serde(skip)]
    neighbor_sets: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and
    /// disconnected inputs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let g = Self::build(n, edges)?;
        let comps = g.components_within(g.vertices());
        if comps.len() > 1 {
            return Err(GraphError::Disconnected {
                components: comps.len(),
            });
        }
        Ok(g)
    }

    fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut seen = HashSet::new();
        let mut adjacency = vec![Vec::new(); n];
        let mut neighbor_sets = vec![VertexSet::new(); n];
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::MultiEdge(e.0, e.1));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            neighbor_sets[u].insert(v);
            neighbor_sets[v].insert(u);
            canon.push(e);
        }
        for list in adjacency.iter_mut() {
            list.sort_unstable();
        }
        canon.sort_unstable();
        Ok(Graph {
            name: None,
            vertex_count: n,
            adjacency,
            neighbor_sets,
            edges: canon,
            labels: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_labels<S: AsRef<str>>(mut self, labels: &[S]) -> Result<Self, GraphError> {
        if labels.len() != self.vertex_count {
            return Err(GraphError::Labels {
                labels: labels.len(),
                n: self.vertex_count,
            });
        }
        self.labels = Some(labels.iter().map(|s| s.as_ref().to_string()).collect());
        Ok(self)
    }

    /// Parses the edge-list format: a header line `n m`, then `m` lines
    /// `u v`. Blank lines and lines starting with `#` are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(GraphError::Parse {
            line: 0,
            msg: "missing `n m` header".into(),
        })?;
        let nums = parse_numbers(hline, header, 2)?;
        let (n, m) = (nums[0], nums[1]);
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let uv = parse_numbers(line, l, 2)?;
            edges.push((uv[0], uv[1]));
        }
        if edges.len() != m {
            return Err(GraphError::EdgeCount {
                declared: m,
                found: edges.len(),
            });
        }
        Graph::new(n, &edges)
    }

    /// Renders the graph back into the edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("# {name}\n"));
        }
        out.push_str(&format!("{} {}\n", self.vertex_count, self.edges.len()));
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.neighbor_sets[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbor_sets[u].contains(v)
    }

    /// Union of the neighborhoods of `s` (may intersect `s`).
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in s {
            out |= self.neighbor_sets[v];
        }
        out
    }

    /// True when some vertex of `a` is adjacent to some vertex of `b`.
    pub fn sets_adjacent(&self, a: VertexSet, b: VertexSet) -> bool {
        a.iter().any(|v| self.neighbor_sets[v].intersects(&b))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Resolves a vertex token: a label when the graph carries labels, or
    /// a 0-based index.
    pub fn resolve_vertex(&self, token: &str) -> Option<usize> {
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == token) {
                return Some(i);
            }
        }
        token.parse().ok().filter(|&v| v < self.vertex_count)
    }

    pub fn set_of(&self, labels: &[&str]) -> VertexSet {
        labels
            .iter()
            .map(|l| {
                self.resolve_vertex(l)
                    .unwrap_or_else(|| panic!("no vertex `{l}`"))
            })
            .collect()
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        let parts: Vec<String> = s.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// The connected component of `G[within]` containing `start`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let grown = self.neighborhood(frontier) & within;
            frontier = grown - comp;
            comp |= frontier;
        }
        comp
    }

    /// Connected components of the induced subgraph on `within`, sorted by
    /// minimum vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, within);
            rest -= c;
            out.push(c);
        }
        out
    }

    pub fn component_count(&self, within: VertexSet) -> usize {
        let mut rest = within;
        let mut count = 0;
        while let Some(v) = rest.first() {
            rest -= self.component_of(v, within);
            count += 1;
        }
        count
    }

    /// True iff `s` is empty or induces a connected subgraph.
    pub fn is_connected_subset(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.component_of(v, s) == s,
        }
    }

    /// Maximal connected components of `G - removed`, sorted by minimum
    /// vertex.
    pub fn components_after_removal(&self, removed: VertexSet) -> Vec<VertexSet> {
        self.components_within(self.vertices() - removed)
    }

    /// Vertices of degree `n - 1`. They lie in every separating set.
    pub fn universal_vertices(&self) -> VertexSet {
        (0..self.vertex_count)
            .filter(|&v| self.degree(v) + 1 == self.vertex_count)
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

fn parse_numbers(line: usize, text: &str, want: usize) -> Result<Vec<usize>, GraphError> {
    let nums: Result<Vec<usize>, _> = text.split_whitespace().map(str::parse).collect();
    let nums = nums.map_err(|e| GraphError::Parse {
        line,
        msg: format!("{e} in `{text}`"),
    })?;
    if nums.len() != want {
        return Err(GraphError::Parse {
            line,
            msg: format!("expected {want} integers, got `{text}`"),
        });
    }
    Ok(nums)
}

/// Loads a graph from either `fixture:<name>` or a path to an edge-list
/// file.
pub fn load_graph(source: &str) -> Result<Graph, LoadError> {
    if let Some(name) = source.strip_prefix("fixture:") {
        return Ok(crate::fixtures::fixture_graph(name)?);
    }
    let text = std::fs::read_to_string(source).map_err(|e| LoadError::Io {
        path: source.to_string(),
        source: e,
    })?;
    let g = Graph::parse_edge_list(&text)?;
    let stem = std::path::Path::new(source)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| source.to_string());
    Ok(g.with_name(stem))
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture_graph;
    use crate::vertex_set::subsets;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn parses_path() {
        let g = Graph::parse_edge_list("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g, path(4));
        let with_comments = "# a comment\n4 3\n\n0 1\n# mid\n1 2\n2 3";
        assert_eq!(Graph::parse_edge_list(with_comments).unwrap(), path(4));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            Graph::parse_edge_list("3 2\n0 1\n0 1\n"),
            Err(GraphError::MultiEdge(0, 1))
        );
        assert_eq!(
            Graph::parse_edge_list("3 2\n0 1\n1 0\n"),
            Err(GraphError::MultiEdge(0, 1))
        );
        assert_eq!(Graph::parse_edge_list("2 1\n1 1\n"), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::parse_edge_list("4 2\n0 1\n2 3\n"),
            Err(GraphError::Disconnected { components: 2 })
        );
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n1 x\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 3\n0 1\n1 2\n"),
            Err(GraphError::EdgeCount { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n1 3\n"),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = fixture_graph("graph_vi").unwrap();
        let back = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn connected_subsets_on_path() {
        let g = path(4);
        assert!(g.is_connected_subset([0, 1, 2].into_iter().collect()));
        assert!(!g.is_connected_subset([0, 2].into_iter().collect()));
        assert!(g.is_connected_subset(VertexSet::new()));
    }

    #[test]
    fn graph_iv_pieces() {
        let g = fixture_graph("graph_iv").unwrap();
        assert!(!g.is_connected_subset(g.set_of(&["c", "d"])));
        let comps = g.components_after_removal(g.set_of(&["a", "b"]));
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.len() == 1));
        assert_eq!(g.components_after_removal(VertexSet::new()), vec![g.vertices()]);
    }

    #[test]
    fn star_center_removal() {
        let g = fixture_graph("star_5").unwrap();
        let comps = g.components_after_removal(VertexSet::singleton(0));
        assert_eq!(comps.len(), 5);
        assert!(comps.windows(2).all(|w| w[0].first() < w[1].first()));
    }

    // is_connected_subset(s) agrees with a single-block restriction of the
    // component decomposition, over every subset of every fixture with at
    // most 8 vertices.
    #[test]
    fn connectivity_cross_check() {
        for name in ["graph_i", "graph_ii", "graph_iv", "jcs", "lstar", "star_5"] {
            let g = fixture_graph(name).unwrap();
            for s in subsets(g.vertices()) {
                let blocks = g.components_after_removal(g.vertices() - s);
                let within: Vec<_> = blocks.iter().filter(|b| b.is_subset(&s)).collect();
                assert_eq!(blocks.len(), within.len());
                let expect = s.is_empty() || blocks.len() == 1;
                assert_eq!(g.is_connected_subset(s), expect, "{name} {s:?}");
                let cover = blocks.iter().fold(VertexSet::new(), |a, b| a | *b);
                assert_eq!(cover, s);
            }
        }
    }
}
