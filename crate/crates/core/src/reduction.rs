//! Clique instances turned into cutset-detection instances, with the
//! forward certificate built from a known clique.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::cutset::{normalize_relaxed, verify_elementary, CutsetCertificate, NormalizeError};
use crate::graph::{Graph, GraphError};
use crate::vertex_set::VertexSet;

/// A Clique instance; the graph need not be connected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueInstance {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub h: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("clique size h={0} must be at least 2")]
    SmallH(usize),
    #[error("clique size h={0} must be odd for the generalized reduction")]
    EvenH(usize),
    #[error("L={l} must exceed the edge count {m}")]
    SmallL { l: usize, m: usize },
    #[error("bad instance: {0}")]
    Instance(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0} is not a clique of size {1}")]
    NotAClique(VertexSet, usize),
    #[error("the forward cut leaves {components} components (gap {gap}); it is not a cutset")]
    ForwardRejected { components: usize, gap: isize },
    #[error("forward certificate failed: {0}")]
    ForwardInvalid(#[from] NormalizeError),
}

impl CliqueInstance {
    pub fn new(n: usize, edges: &[(usize, usize)], h: usize) -> Result<Self, ReductionError> {
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(ReductionError::Instance(format!("bad edge {u}-{v}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(ReductionError::Instance(format!("duplicate edge {u}-{v}")));
            }
        }
        if h < 2 {
            return Err(ReductionError::SmallH(h));
        }
        Ok(CliqueInstance {
            n,
            edges: edges.to_vec(),
            h,
        })
    }

    /// Edge-list text: a `n m` header then one `u v` pair per line.
    pub fn parse(text: &str, h: usize) -> Result<Self, ReductionError> {
        let mut nums = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            for tok in line.split_whitespace() {
                nums.push(
                    tok.parse::<usize>()
                        .map_err(|_| ReductionError::Instance(format!("not a number: {tok}")))?,
                );
            }
        }
        let [n, m, rest @ ..] = nums.as_slice() else {
            return Err(ReductionError::Instance("missing header".into()));
        };
        if rest.len() != 2 * m {
            return Err(ReductionError::Instance(format!(
                "header declares {m} edges, found {} numbers",
                rest.len()
            )));
        }
        let edges: Vec<_> = rest.chunks(2).map(|c| (c[0], c[1])).collect();
        CliqueInstance::new(*n, &edges, h)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.len() == self.h
            && s.iter().all(|v| v < self.n)
            && s.iter().all(|u| s.iter().all(|v| u == v || self.adjacent(u, v)))
    }
}

fn binom2(h: usize) -> usize {
    h * (h - 1) / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReductionKind {
    Elementary,
    Generalized { l: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct Reduced {
    pub instance: CliqueInstance,
    pub kind: ReductionKind,
    pub graph: Graph,
    pub target_valence: usize,
    /// Vertex indices grouped by role (`v`, `e`, `w`, `a`, `b`, `x`, `d`).
    pub roles: BTreeMap<&'static str, Vec<usize>>,
}

#[derive(Serialize)]
pub struct Sidecar<'a> {
    #[serde(flatten)]
    pub kind: ReductionKind,
    pub h: usize,
    pub target_valence: usize,
    pub vertex_count: usize,
    pub labels: Vec<String>,
    pub roles: &'a BTreeMap<&'static str, Vec<usize>>,
}

impl Reduced {
    pub fn role(&self, name: &str) -> &[usize] {
        self.roles.get(name).map_or(&[], |v| v.as_slice())
    }

    pub fn sidecar(&self) -> Sidecar<'_> {
        Sidecar {
            kind: self.kind,
            h: self.instance.h,
            target_valence: self.target_valence,
            vertex_count: self.graph.vertex_count(),
            labels: (0..self.graph.vertex_count()).map(|v| self.graph.label(v)).collect(),
            roles: &self.roles,
        }
    }
}

struct Builder {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    roles: BTreeMap<&'static str, Vec<usize>>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            labels: Vec::new(),
            edges: Vec::new(),
            roles: BTreeMap::new(),
        }
    }

    fn group(&mut self, role: &'static str, count: usize) -> Vec<usize> {
        let start = self.labels.len();
        self.labels.extend((1..=count).map(|i| format!("{role}{i}")));
        let ids: Vec<usize> = (start..start + count).collect();
        self.roles.insert(role, ids.clone());
        ids
    }

    fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edges.push((u, v));
            }
        }
    }

    fn join(&mut self, xs: &[usize], ys: &[usize]) {
        for &x in xs {
            for &y in ys {
                self.edges.push((x, y));
            }
        }
    }

    /// Each vertex of `hubs` becomes adjacent to every other vertex.
    fn universal(&mut self, hubs: &[usize]) {
        let n = self.labels.len();
        let mut is_hub = vec![false; n];
        for &a in hubs {
            is_hub[a] = true;
        }
        self.clique(hubs);
        for &a in hubs {
            for v in (0..n).filter(|&v| !is_hub[v]) {
                self.edges.push((a, v));
            }
        }
    }

    fn finish(self, name: String) -> Result<(Graph, BTreeMap<&'static str, Vec<usize>>), ReductionError> {
        let g = Graph::new(self.labels.len(), &self.edges)?
            .with_labels(&self.labels)?
            .with_name(name);
        Ok((g, self.roles))
    }
}

/// Elementary-cutset instance with target valence `C(h,2) + h`.
/// Layout: v-vertices, e-vertices, then `A` (`C(h,2)` hubs) and `B`
/// (`h + 1` vertices adjacent to `A` only).
pub fn reduce_clique_elementary(inst: &CliqueInstance) -> Result<Reduced, ReductionError> {
    let h = inst.h;
    if h < 2 {
        return Err(ReductionError::SmallH(h));
    }
    let mut b = Builder::new();
    let vs = b.group("v", inst.n);
    let es = b.group("e", inst.edges.len());
    let a = b.group("a", binom2(h));
    b.group("b", h + 1);
    b.clique(&vs);
    for (k, &(u, v)) in inst.edges.iter().enumerate() {
        b.edges.push((es[k], vs[u]));
        b.edges.push((es[k], vs[v]));
    }
    b.universal(&a);
    let (graph, roles) = b.finish(format!("clique-elementary-h{h}"))?;
    Ok(Reduced {
        instance: inst.clone(),
        kind: ReductionKind::Elementary,
        graph,
        target_valence: binom2(h) + h,
        roles,
    })
}

/// Generalized-cutset instance with target valence
/// `2L + 2n + C(h,2) + h`. `l` defaults to `m + 1`.
/// Layout: v, e, w, `A` (`L + n + C(h,2)` hubs), `B` (2), `X` and `D`
/// (`2L + n + h` each).
pub fn reduce_clique_generalized(inst: &CliqueInstance, l: Option<usize>) -> Result<Reduced, ReductionError> {
    let (h, n, m) = (inst.h, inst.n, inst.edges.len());
    if h < 2 {
        return Err(ReductionError::SmallH(h));
    }
    if h % 2 == 0 {
        return Err(ReductionError::EvenH(h));
    }
    let l = l.unwrap_or(m + 1);
    if l <= m {
        return Err(ReductionError::SmallL { l, m });
    }
    let mut b = Builder::new();
    let vs = b.group("v", n);
    let es = b.group("e", m);
    let ws = b.group("w", n);
    let a = b.group("a", l + n + binom2(h));
    b.group("b", 2);
    let xs = b.group("x", 2 * l + n + h);
    let ds = b.group("d", 2 * l + n + h);
    b.clique(&vs);
    for (k, &(u, v)) in inst.edges.iter().enumerate() {
        b.edges.push((es[k], vs[u]));
        b.edges.push((es[k], vs[v]));
    }
    for i in 0..n {
        b.edges.push((ws[i], vs[i]));
    }
    b.clique(&xs);
    b.join(&xs, &vs);
    for z in 0..xs.len() {
        b.edges.push((xs[z], ds[z]));
    }
    b.universal(&a);
    let (graph, roles) = b.finish(format!("clique-generalized-h{h}-l{l}"))?;
    Ok(Reduced {
        instance: inst.clone(),
        kind: ReductionKind::Generalized { l },
        graph,
        target_valence: 2 * l + 2 * n + binom2(h) + h,
        roles,
    })
}

/// The cutset read off a clique of the source instance: the hubs `A` and
/// the clique's v-vertices, plus (generalized) one member made of `X` and
/// every v- and e-vertex outside the clique.
pub fn forward_cutset_from_clique(red: &Reduced, clique: VertexSet) -> Result<CutsetCertificate, ReductionError> {
    let inst = &red.instance;
    if !inst.is_clique(clique) {
        return Err(ReductionError::NotAClique(clique, inst.h));
    }
    let g = &red.graph;
    let set = |ids: &[usize]| ids.iter().copied().collect::<VertexSet>();
    let vs = red.role("v");
    let es = red.role("e");
    let clique_v: VertexSet = clique.iter().map(|i| vs[i]).collect();
    let a = set(red.role("a"));
    match red.kind {
        ReductionKind::Elementary => {
            verify_elementary(g, a | clique_v).map_err(|r| ReductionError::ForwardRejected {
                components: r.components,
                gap: r.gap,
            })
        }
        ReductionKind::Generalized { l } => {
            let clique_e: VertexSet = inst
                .edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| clique.contains(u) && clique.contains(v))
                .map(|(k, _)| es[k])
                .collect();
            let r = (set(vs) - clique_v) | (set(es) - clique_e);
            let big = set(red.role("x")) | r;
            let mut members: Vec<(VertexSet, usize)> = a.iter().map(|z| (VertexSet::singleton(z), 1)).collect();
            members.push((big, l + inst.n));
            members.extend(clique_v.iter().map(|v| (VertexSet::singleton(v), 1)));
            let witness: Vec<VertexSet> = (set(red.role("d")) | set(red.role("b")) | set(red.role("w")) | clique_e)
                .iter()
                .map(VertexSet::singleton)
                .collect();
            Ok(normalize_relaxed(g, &members, &witness)?.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutset::{search_elementary, verify_generalized};
    use crate::budget::Budget;

    fn k3() -> CliqueInstance {
        CliqueInstance::new(3, &[(0, 1), (1, 2), (0, 2)], 3).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn elementary_layout() {
        let r = reduce_clique_elementary(&k3()).unwrap();
        assert_eq!(r.graph.vertex_count(), 13);
        assert_eq!(r.target_valence, 6);
        let g = &r.graph;
        for &a in r.role("a") {
            assert_eq!(g.degree(a), 12);
        }
        for &b in r.role("b") {
            assert_eq!(g.neighbor_set(b), set(r.role("a")));
        }
        assert_eq!(g.label(r.role("e")[0]), "e1");
    }

    // With as many v-vertices as the clique size nothing is left over once
    // the clique is cut, so the forward cut leaves only t + 1 components.
    #[test]
    fn triangle_alone_is_one_short() {
        let r = reduce_clique_elementary(&k3()).unwrap();
        let err = forward_cutset_from_clique(&r, set(&[0, 1, 2])).unwrap_err();
        assert_eq!(err, ReductionError::ForwardRejected { components: 7, gap: 1 });
        let report = search_elementary(&r.graph, 6, Budget::UNLIMITED);
        assert!(report.complete);
        assert!(!report.certificates.iter().any(|c| c.valence == 6));
    }

    #[test]
    fn triangle_with_pendant() {
        let inst = CliqueInstance::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)], 3).unwrap();
        let r = reduce_clique_elementary(&inst).unwrap();
        let c = forward_cutset_from_clique(&r, set(&[0, 1, 2])).unwrap();
        assert_eq!((c.valence, c.gap), (6, 2));
        assert_eq!(
            forward_cutset_from_clique(&r, set(&[1, 2, 3])),
            Err(ReductionError::NotAClique(set(&[1, 2, 3]), 3))
        );
    }

    #[test]
    fn path_has_no_target_cutset() {
        let inst = CliqueInstance::new(3, &[(0, 1), (1, 2)], 3).unwrap();
        let r = reduce_clique_elementary(&inst).unwrap();
        let report = search_elementary(&r.graph, 6, Budget::UNLIMITED);
        assert!(report.complete);
        assert!(!report.certificates.iter().any(|c| c.valence == 6 && c.gap >= 2));
    }

    #[test]
    fn generalized_k3() {
        let r = reduce_clique_generalized(&k3(), Some(4)).unwrap();
        assert_eq!(r.target_valence, 20);
        let c = forward_cutset_from_clique(&r, set(&[0, 1, 2])).unwrap();
        assert_eq!((c.valence, c.gap), (20, 2));
        let again = verify_generalized(&r.graph, &c.as_input().resolve_taus(&r.graph), &c.witness).unwrap();
        assert_eq!(again.valence, 20);
        assert_eq!(reduce_clique_generalized(&k3(), None).unwrap().kind, ReductionKind::Generalized { l: 4 });
    }

    #[test]
    fn generalized_errors() {
        let even = CliqueInstance::new(4, &[(0, 1)], 2).unwrap();
        assert_eq!(reduce_clique_generalized(&even, None).unwrap_err(), ReductionError::EvenH(2));
        assert_eq!(
            reduce_clique_generalized(&k3(), Some(3)).unwrap_err(),
            ReductionError::SmallL { l: 3, m: 3 }
        );
        let missing = CliqueInstance::new(3, &[(0, 1), (1, 2)], 3).unwrap();
        let r = reduce_clique_generalized(&missing, None).unwrap();
        assert!(matches!(
            forward_cutset_from_clique(&r, set(&[0, 1, 2])),
            Err(ReductionError::NotAClique(..))
        ));
    }

    #[test]
    fn parse_instances() {
        let inst = CliqueInstance::parse("# k3\n3 3\n0 1\n1 2\n0 2\n", 3).unwrap();
        assert_eq!(inst, k3());
        assert!(CliqueInstance::parse("3 2\n0 1\n", 3).is_err());
        assert!(CliqueInstance::parse("3 1\n0 0\n", 3).is_err());
        // isolated vertices are allowed
        assert_eq!(CliqueInstance::parse("5 1\n0 1\n", 3).unwrap().n, 5);
    }
}
