//! Hamiltonian paths, bipolar orderings and tridents: the two-agent
//! structures behind the traceability and bipolar-ordering certificates.

use std::collections::HashSet;

use serde::Serialize;

use crate::budget::{Budget, Meter, Outcome};
use crate::graph::Graph;
use crate::vertex_set::{k_subsets, VertexSet};

/// Largest graph on which the type-2 trident search enumerates all cuts.
pub const TRIDENT_EXHAUSTIVE_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TridentKind {
    Type1,
    Type2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trident {
    pub kind: TridentKind,
    pub cut: VertexSet,
    /// Components of `G - cut`, sorted by minimum vertex.
    pub components: Vec<VertexSet>,
    /// Contact vertex of each component (type-2 only).
    pub contacts: Vec<usize>,
}

/// Depth-first search for a Hamiltonian path, trying start vertices and
/// extensions in index order.
pub fn find_hamiltonian_path(g: &Graph, budget: Budget) -> Outcome<Vec<usize>> {
    let n = g.vertex_count();
    let meter = budget.meter();
    let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if leaves.len() > 2 {
        return Outcome::NotFound;
    }
    // a Hamiltonian path must start or end at every leaf
    let starts: Vec<usize> = if leaves.is_empty() { (0..n).collect() } else { vec![leaves[0]] };
    let mut dead = HashSet::new();
    for s in starts {
        let mut path = vec![s];
        match ham_extend(g, &mut path, VertexSet::singleton(s), &mut dead, &meter) {
            Some(true) => return Outcome::Found(path),
            Some(false) => {}
            None => return Outcome::BudgetExceeded,
        }
    }
    Outcome::NotFound
}

fn ham_extend(
    g: &Graph,
    path: &mut Vec<usize>,
    used: VertexSet,
    dead: &mut HashSet<(VertexSet, usize)>,
    meter: &Meter,
) -> Option<bool> {
    if !meter.charge(1) {
        return None;
    }
    let n = g.vertex_count();
    if used.len() == n {
        return Some(true);
    }
    let end = *path.last().expect("nonempty path");
    if dead.contains(&(used, end)) {
        return Some(false);
    }
    let rest = g.vertices() - used;
    if !g.is_connected_subset(rest.with(end)) {
        dead.insert((used, end));
        return Some(false);
    }
    for &next in g.neighbors(end) {
        if used.contains(next) {
            continue;
        }
        path.push(next);
        match ham_extend(g, path, used.with(next), dead, meter) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => return None,
        }
        path.pop();
    }
    dead.insert((used, end));
    Some(false)
}

/// Search for an ordering whose every prefix and suffix induce connected
/// subgraphs.
pub fn find_bipolar_ordering(g: &Graph, budget: Budget) -> Outcome<Vec<usize>> {
    let meter = budget.meter();
    let all = g.vertices();
    let mut dead = HashSet::new();
    for s in 0..g.vertex_count() {
        if !g.is_connected_subset(all.without(s)) {
            continue;
        }
        let mut order = vec![s];
        match bipolar_extend(g, &mut order, VertexSet::singleton(s), &mut dead, &meter) {
            Some(true) => return Outcome::Found(order),
            Some(false) => {}
            None => return Outcome::BudgetExceeded,
        }
    }
    Outcome::NotFound
}

fn bipolar_extend(
    g: &Graph,
    order: &mut Vec<usize>,
    prefix: VertexSet,
    dead: &mut HashSet<VertexSet>,
    meter: &Meter,
) -> Option<bool> {
    if !meter.charge(1) {
        return None;
    }
    let all = g.vertices();
    if prefix == all {
        return Some(true);
    }
    if dead.contains(&prefix) {
        return Some(false);
    }
    let rest = all - prefix;
    for next in g.neighborhood(prefix) & rest {
        if !g.is_connected_subset(rest.without(next)) {
            continue;
        }
        order.push(next);
        match bipolar_extend(g, order, prefix.with(next), dead, meter) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => return None,
        }
        order.pop();
    }
    dead.insert(prefix);
    Some(false)
}

/// True when every vertex but the first has an earlier neighbor and every
/// vertex but the last has a later neighbor.
pub fn is_bipolar_ordering(g: &Graph, order: &[usize]) -> bool {
    if !is_permutation(g, order) {
        return false;
    }
    let mut seen = VertexSet::new();
    for (i, &v) in order.iter().enumerate() {
        if i > 0 && !g.neighbor_set(v).intersects(&seen) {
            return false;
        }
        seen.insert(v);
    }
    let mut seen = VertexSet::new();
    for (i, &v) in order.iter().enumerate().rev() {
        if i + 1 < order.len() && !g.neighbor_set(v).intersects(&seen) {
            return false;
        }
        seen.insert(v);
    }
    true
}

pub fn is_hamiltonian_path(g: &Graph, order: &[usize]) -> bool {
    is_permutation(g, order) && order.windows(2).all(|w| g.adjacent(w[0], w[1]))
}

fn is_permutation(g: &Graph, order: &[usize]) -> bool {
    order.len() == g.vertex_count()
        && order.iter().all(|&v| v < g.vertex_count())
        && order.iter().copied().collect::<VertexSet>().len() == order.len()
}

/// Checks the trident definition for a given cut.
pub fn check_trident(g: &Graph, cut: VertexSet) -> Option<Trident> {
    if cut.is_empty() {
        return None;
    }
    let components = g.components_after_removal(cut);
    if cut.len() == 1 {
        return (components.len() >= 3).then(|| Trident {
            kind: TridentKind::Type1,
            cut,
            components,
            contacts: Vec::new(),
        });
    }
    if components.len() != 3 {
        return None;
    }
    let mut contacts = Vec::with_capacity(3);
    for c in &components {
        let touching = g.neighborhood(*c) & cut;
        if touching.len() != 1 {
            return None;
        }
        contacts.push(touching.first().expect("one contact"));
    }
    let distinct: VertexSet = contacts.iter().copied().collect();
    (distinct.len() == 3).then_some(Trident {
        kind: TridentKind::Type2,
        cut,
        components,
        contacts,
    })
}

/// First trident in canonical order: type-1 cuts by vertex index, then
/// type-2 cuts by size and lexicographic order.
///
/// Type-2 search enumerates every candidate cut, so graphs larger than
/// [`TRIDENT_EXHAUSTIVE_LIMIT`] report `BudgetExceeded` unless a type-1
/// trident exists.
pub fn find_trident(g: &Graph) -> Outcome<Trident> {
    let n = g.vertex_count();
    for v in 0..n {
        if let Some(t) = check_trident(g, VertexSet::singleton(v)) {
            return Outcome::Found(t);
        }
    }
    if n > TRIDENT_EXHAUSTIVE_LIMIT {
        return Outcome::BudgetExceeded;
    }
    for k in 2..n.saturating_sub(2) {
        for cut in k_subsets(g.vertices(), k) {
            if let Some(t) = check_trident(g, cut) {
                return Outcome::Found(t);
            }
        }
    }
    Outcome::NotFound
}
