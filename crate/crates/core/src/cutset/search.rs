//! Exhaustive cutset search.
//!
//! For the generalized search, a candidate is a cut region `U` together
//! with its type-I vertices `S ⊆ U`. Type-II members are pairwise
//! independent connected sets covering `U \ S`, so they are exactly the
//! components of `G[U \ S]`. Witness blocks are unions of components
//! ("atoms") of `G - U`. Atoms touching the same contact vertex must share a
//! block, and no block may touch two contacts of one member, so the finest
//! admissible witness is the forced-merge closure and it maximizes the gap.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{verify_elementary, verify_generalized, CutsetCertificate};
use crate::budget::{Budget, Meter};
use crate::graph::Graph;
use crate::vertex_set::{k_subsets, subsets, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Keep {
    /// Per valence, every certificate attaining the largest gap.
    #[default]
    BestPerValence,
    All,
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Largest cut region; defaults to `min(|V| - 2, 8)`.
    pub max_cut: Option<usize>,
    pub keep: Keep,
    pub tame_only: bool,
    pub budget: Budget,
}

impl SearchOptions {
    pub fn max_cut(mut self, k: usize) -> Self {
        self.max_cut = Some(k);
        self
    }

    pub fn tame_only(mut self) -> Self {
        self.tame_only = true;
        self
    }

    pub fn keep(mut self, keep: Keep) -> Self {
        self.keep = keep;
        self
    }

    pub fn budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn resolved_max_cut(&self, g: &Graph) -> usize {
        let n = g.vertex_count();
        self.max_cut
            .unwrap_or_else(|| n.saturating_sub(2).min(8))
            .min(n)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub certificates: Vec<CutsetCertificate>,
    /// False when the node or time budget stopped the search early.
    pub complete: bool,
    pub nodes: u64,
    pub max_cut: usize,
}

impl SearchReport {
    /// True when the search ran to completion and found nothing.
    pub fn proves_none(&self) -> bool {
        self.complete && self.certificates.is_empty()
    }
}

#[derive(Default)]
struct Collector {
    keep: Keep,
    all: Vec<CutsetCertificate>,
    best: BTreeMap<usize, (usize, Vec<CutsetCertificate>)>,
}

impl Collector {
    fn new(keep: Keep) -> Self {
        Collector {
            keep,
            ..Default::default()
        }
    }

    fn wants(&self, key: usize, gap: usize) -> bool {
        match self.keep {
            Keep::All => true,
            Keep::BestPerValence => self.best.get(&key).is_none_or(|(g, _)| gap >= *g),
        }
    }

    fn push(&mut self, key: usize, cert: CutsetCertificate) {
        match self.keep {
            Keep::All => self.all.push(cert),
            Keep::BestPerValence => {
                let e = self.best.entry(key).or_insert((cert.gap, Vec::new()));
                if cert.gap > e.0 {
                    *e = (cert.gap, Vec::new());
                }
                if cert.gap == e.0 {
                    e.1.push(cert);
                }
            }
        }
    }

    fn merge(mut self, other: Collector) -> Collector {
        self.all.extend(other.all);
        for (key, (_, certs)) in other.best {
            for c in certs {
                self.push(key, c);
            }
        }
        self
    }

    fn finish(self) -> Vec<CutsetCertificate> {
        let mut out = self.all;
        out.extend(self.best.into_values().flat_map(|(_, c)| c));
        out.sort_by(|a, b| a.canonical_cmp(b));
        out
    }
}

/// All elementary cutsets with `1 ≤ |cut| ≤ t_max`, keeping the maximal-gap
/// certificates of each cut size.
pub fn search_elementary(g: &Graph, t_max: usize, budget: Budget) -> SearchReport {
    let meter = budget.meter();
    let univ = g.universal_vertices();
    let rest = g.vertices() - univ;
    let t_max = t_max.min(g.vertex_count());
    let sizes = univ.len().max(1)..=t_max;
    let found = sizes
        .flat_map(|k| k_subsets(rest, k - univ.len()).map(move |t| t | univ))
        .par_bridge()
        .fold(
            || Collector::new(Keep::BestPerValence),
            |mut acc, cut| {
                if !meter.charge(1) {
                    return acc;
                }
                // every component needs a vertex outside the cut
                if g.vertex_count() < 2 * cut.len() + 2 {
                    return acc;
                }
                if let Ok(cert) = verify_elementary(g, cut) {
                    if acc.wants(cut.len(), cert.gap) {
                        acc.push(cut.len(), cert);
                    }
                }
                acc
            },
        )
        .reduce(|| Collector::new(Keep::BestPerValence), Collector::merge);
    report(found.finish(), &meter, t_max)
}

/// Exhaustive generalized cutset search over cut regions of size at most
/// `options.max_cut`.
pub fn search_generalized(g: &Graph, options: &SearchOptions) -> SearchReport {
    let meter = options.budget.meter();
    let max_cut = options.resolved_max_cut(g);
    let univ = g.universal_vertices();
    if univ.len() > max_cut {
        return report(Vec::new(), &meter, max_cut);
    }
    let rest = g.vertices() - univ;
    let found = (0..=max_cut - univ.len())
        .flat_map(|k| k_subsets(rest, k).map(move |t| t | univ))
        .filter(|u| !u.is_empty())
        .par_bridge()
        .fold(
            || Collector::new(options.keep),
            |mut acc, u| {
                scan_region(g, u, univ, options, &meter, &mut acc);
                acc
            },
        )
        .reduce(|| Collector::new(options.keep), Collector::merge);
    report(found.finish(), &meter, max_cut)
}

fn report(certificates: Vec<CutsetCertificate>, meter: &Meter, max_cut: usize) -> SearchReport {
    SearchReport {
        certificates,
        complete: !meter.exceeded(),
        nodes: meter.used(),
        max_cut,
    }
}

struct Region {
    atoms: Vec<VertexSet>,
    /// Atom indices adjacent to each vertex of the region.
    adj_atoms: Vec<VertexSet>,
}

fn scan_region(
    g: &Graph,
    u: VertexSet,
    univ: VertexSet,
    options: &SearchOptions,
    meter: &Meter,
    acc: &mut Collector,
) {
    let atoms = g.components_after_removal(u);
    if atoms.len() < 3 {
        return;
    }
    let mut atom_of = vec![usize::MAX; g.vertex_count()];
    for (i, a) in atoms.iter().enumerate() {
        for v in a {
            atom_of[v] = i;
        }
    }
    let mut adj_atoms = vec![VertexSet::new(); g.vertex_count()];
    for x in u {
        adj_atoms[x] = (g.neighbor_set(x) - u).iter().map(|y| atom_of[y]).collect();
    }
    let region = Region { atoms, adj_atoms };
    let mut uf = UnionFind::new(region.atoms.len());
    for sub in subsets(u - univ) {
        if !meter.charge(1) {
            return;
        }
        let s = sub | univ;
        let type_ii = g.components_within(u - s);
        if type_ii.iter().any(|m| m.len() < 2) {
            continue;
        }
        if options.tame_only && type_ii.len() > 1 {
            continue;
        }
        if region.atoms.len() < s.len() + type_ii.len() + 2 {
            continue;
        }
        if let Some(cert) = evaluate(g, s, &type_ii, &region, &mut uf) {
            if acc.wants(cert.valence, cert.gap) {
                acc.push(cert.valence, cert);
            }
        }
    }
}

fn evaluate(
    g: &Graph,
    s: VertexSet,
    type_ii: &[VertexSet],
    region: &Region,
    uf: &mut UnionFind,
) -> Option<CutsetCertificate> {
    uf.reset();
    let mut taus = Vec::with_capacity(type_ii.len());
    for &m in type_ii {
        let mut contacts = 0;
        for x in m {
            let adj = region.adj_atoms[x];
            if let Some(first) = adj.first() {
                contacts += 1;
                for a in adj.iter().skip(1) {
                    uf.union(first, a);
                }
            }
        }
        if contacts < 3 || contacts % 2 == 0 {
            return None;
        }
        taus.push((contacts - 1) / 2);
    }
    let classes = uf.classes();
    let valence = s.len() + taus.iter().sum::<usize>();
    if classes < valence + 2 {
        return None;
    }
    // one contact per (member, block)
    let mut stamp = vec![usize::MAX; region.atoms.len()];
    for (i, &m) in type_ii.iter().enumerate() {
        for x in m {
            if let Some(a) = region.adj_atoms[x].first() {
                let r = uf.find(a);
                if stamp[r] == i {
                    return None;
                }
                stamp[r] = i;
            }
        }
    }
    let mut blocks: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for (i, a) in region.atoms.iter().enumerate() {
        *blocks.entry(uf.find(i)).or_default() |= *a;
    }
    let mut witness: Vec<VertexSet> = blocks.into_values().collect();
    witness.sort();
    let mut members: Vec<(VertexSet, usize)> = s.iter().map(|v| (VertexSet::singleton(v), 1)).collect();
    members.extend(type_ii.iter().copied().zip(taus));
    members.sort();
    let mut cert = verify_generalized(g, &members, &witness)
        .unwrap_or_else(|v| panic!("search built an invalid certificate: {v:?}"));
    cert.canonicalize();
    Some(cert)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}
