//! Connected allocations: enumeration, EF1 / EF1-outer checks, brute-force
//! existence and the deprived / privileged classification.

use std::ops::ControlFlow;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::budget::{Budget, Meter, Outcome};
use crate::cutset::CutsetCertificate;
use crate::graph::Graph;
use crate::valuation::{dominates, format_rational, Rational, Valuation};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Allocation {
    pub shares: Vec<VertexSet>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
pub enum AllocationError {
    #[error("shares {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("vertices {0} are not allocated")]
    Uncovered(VertexSet),
    #[error("share {0} is not connected")]
    Disconnected(usize),
    #[error("share {0} is empty")]
    Empty(usize),
    #[error("share {0} contains vertices outside the graph")]
    OutOfRange(usize),
}

impl Allocation {
    pub fn new(shares: Vec<VertexSet>) -> Self {
        Allocation { shares }
    }

    pub fn agents(&self) -> usize {
        self.shares.len()
    }

    pub fn validate(&self, g: &Graph, allow_empty: bool) -> Result<(), AllocationError> {
        let full = g.vertices();
        let mut seen = VertexSet::new();
        for (i, &s) in self.shares.iter().enumerate() {
            if !s.is_subset(&full) {
                return Err(AllocationError::OutOfRange(i));
            }
            if s.is_empty() && !allow_empty {
                return Err(AllocationError::Empty(i));
            }
            if !g.is_connected_subset(s) {
                return Err(AllocationError::Disconnected(i));
            }
            if s.intersects(&seen) {
                let j = (0..i).find(|&j| self.shares[j].intersects(&s)).expect("overlap");
                return Err(AllocationError::Overlap(j, i));
            }
            seen |= s;
        }
        if seen != full {
            return Err(AllocationError::Uncovered(full - seen));
        }
        Ok(())
    }

    pub fn describe(&self, g: &Graph) -> String {
        let parts: Vec<String> = self.shares.iter().map(|s| g.format_set(*s)).collect();
        parts.join(" | ")
    }
}

/// Default empty-share policy: empties are allowed only when there are at
/// least as many agents as vertices.
pub fn default_allow_empty(g: &Graph, n: usize) -> bool {
    n >= g.vertex_count()
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemovalScan {
    pub vertex: usize,
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
    /// Whether the share stays connected without `vertex`.
    pub connected: bool,
}

/// Agent `envious` envies agent `envied` even after any admissible single
/// removal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnvyWitness {
    pub envious: usize,
    pub envied: usize,
    #[serde(serialize_with = "ser_rational")]
    pub own_value: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub envied_value: Rational,
    pub removals: Vec<RemovalScan>,
}

/// EF1 (or EF1-outer) under a common valuation.
pub fn check_ef1(g: &Graph, a: &Allocation, v: &Valuation, outer: bool) -> Result<(), EnvyWitness> {
    check_with(g, a, |_| v, outer)
}

/// EF1 (or EF1-outer) under per-agent valuations.
pub fn check_ef1_profile(
    g: &Graph,
    a: &Allocation,
    profile: &[Valuation],
    outer: bool,
) -> Result<(), EnvyWitness> {
    assert_eq!(profile.len(), a.agents(), "one valuation per agent");
    check_with(g, a, |i| &profile[i], outer)
}

fn check_with<'a>(
    g: &Graph,
    a: &Allocation,
    val: impl Fn(usize) -> &'a Valuation,
    outer: bool,
) -> Result<(), EnvyWitness> {
    for (i, &own) in a.shares.iter().enumerate() {
        let v = val(i);
        let own_value = v.evaluate(own);
        for (j, &other) in a.shares.iter().enumerate() {
            if i == j {
                continue;
            }
            let envied_value = v.evaluate(other);
            if own_value >= envied_value {
                continue;
            }
            let removals: Vec<RemovalScan> = other
                .iter()
                .map(|x| {
                    let rest = other.without(x);
                    RemovalScan {
                        vertex: x,
                        value: v.evaluate(rest),
                        connected: g.is_connected_subset(rest),
                    }
                })
                .collect();
            let ok = removals
                .iter()
                .any(|r| (r.connected || !outer) && own_value >= r.value);
            if !ok {
                return Err(EnvyWitness {
                    envious: i,
                    envied: j,
                    own_value,
                    envied_value,
                    removals,
                });
            }
        }
    }
    Ok(())
}

/// Calls `f` on every connected partition of `g` into exactly `k`
/// nonempty parts. Parts are listed in order of their minimum vertex and
/// each unordered partition is produced once.
pub fn for_each_connected_partition(
    g: &Graph,
    k: usize,
    mut f: impl FnMut(&[VertexSet]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if k == 0 || k > g.vertex_count() {
        return ControlFlow::Continue(());
    }
    let mut stack = Vec::with_capacity(k);
    partition_rec(g, g.vertices(), k, &mut stack, &mut |_| true, &mut f)
}

fn partition_rec(
    g: &Graph,
    rest: VertexSet,
    k: usize,
    stack: &mut Vec<VertexSet>,
    admit: &mut dyn FnMut(&[VertexSet]) -> bool,
    f: &mut dyn FnMut(&[VertexSet]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if k == 1 {
        if !rest.is_empty() && g.is_connected_subset(rest) {
            stack.push(rest);
            let r = if admit(stack) { f(stack) } else { ControlFlow::Continue(()) };
            stack.pop();
            return r;
        }
        return ControlFlow::Continue(());
    }
    let anchor = rest.first().expect("rest nonempty");
    connected_sets(g, anchor, rest, &mut |s| {
        let r = rest - s;
        if r.len() < k - 1 || g.component_count(r) > k - 1 {
            return ControlFlow::Continue(());
        }
        stack.push(s);
        let out = if admit(stack) {
            partition_rec(g, r, k - 1, stack, admit, f)
        } else {
            ControlFlow::Continue(())
        };
        stack.pop();
        out
    })
}

/// Every connected subset of `within` containing `anchor`, each once.
pub fn connected_sets(
    g: &Graph,
    anchor: usize,
    within: VertexSet,
    f: &mut dyn FnMut(VertexSet) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn rec(
        g: &Graph,
        s: VertexSet,
        excluded: VertexSet,
        within: VertexSet,
        f: &mut dyn FnMut(VertexSet) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let frontier = (g.neighborhood(s) & within) - s - excluded;
        match frontier.first() {
            None => f(s),
            Some(u) => {
                rec(g, s.with(u), excluded, within, f)?;
                rec(g, s, excluded.with(u), within, f)
            }
        }
    }
    rec(g, VertexSet::singleton(anchor), VertexSet::new(), within, f)
}

/// Calls `f` on every connected allocation for `n` agents, up to agent
/// order. With `allow_empty`, partitions into fewer than `n` parts are
/// padded with empty shares.
pub fn for_each_connected_allocation(
    g: &Graph,
    n: usize,
    allow_empty: bool,
    mut f: impl FnMut(&Allocation) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let lo = if allow_empty { 1 } else { n };
    for k in lo..=n.min(g.vertex_count()) {
        for_each_connected_partition(g, k, |parts| {
            let mut shares = parts.to_vec();
            shares.resize(n, VertexSet::new());
            f(&Allocation { shares })
        })?;
    }
    ControlFlow::Continue(())
}

pub fn enumerate_connected_allocations(g: &Graph, n: usize, allow_empty: bool) -> Vec<Allocation> {
    let mut out = Vec::new();
    let _ = for_each_connected_allocation(g, n, allow_empty, |a| {
        out.push(a.clone());
        ControlFlow::Continue(())
    });
    out
}

pub fn count_connected_allocations(g: &Graph, n: usize, allow_empty: bool) -> u64 {
    let mut count = 0;
    let _ = for_each_connected_allocation(g, n, allow_empty, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Exact evaluation in a representation cheaper than rationals.
enum Fast<'a> {
    Scaled(Vec<i128>),
    Cm {
        distinguished: VertexSet,
        cutset: &'a CutsetCertificate,
    },
}

impl<'a> Fast<'a> {
    fn new(v: &'a Valuation) -> Option<Self> {
        match v {
            Valuation::Additive(w) => {
                let mut l: i128 = 1;
                for r in w {
                    l = l.lcm(&(*r.denom() as i128));
                    if l > 1 << 60 {
                        return None;
                    }
                }
                let scaled = w.iter().map(|r| *r.numer() as i128 * (l / *r.denom() as i128)).collect();
                Some(Fast::Scaled(scaled))
            }
            Valuation::CutsetMonotone {
                distinguished,
                cutset,
            } => Some(Fast::Cm {
                distinguished: *distinguished,
                cutset,
            }),
        }
    }

    #[inline]
    fn value(&self, s: VertexSet) -> i128 {
        match self {
            Fast::Scaled(w) => s.iter().map(|v| w[v]).sum(),
            Fast::Cm {
                distinguished,
                cutset,
            } => {
                let d = cutset.members.iter().filter(|m| dominates(s, m)).count();
                ((s & *distinguished).len() + d) as i128
            }
        }
    }

    /// `min(v(s), min over admissible x of v(s \ {x}))`; 0 for empty `s`.
    fn threshold(&self, g: &Graph, s: VertexSet, outer: bool) -> i128 {
        if s.is_empty() {
            return 0;
        }
        let total = self.value(s);
        let removable = s.iter().filter(|&x| !outer || g.is_connected_subset(s.without(x)));
        match self {
            Fast::Scaled(w) => total - removable.map(|x| w[x]).max().unwrap_or(0).max(0),
            Fast::Cm { .. } => removable.map(|x| self.value(s.without(x))).min().unwrap_or(total).min(total),
        }
    }
}

/// Brute-force search for a connected EF1 (or EF1-outer) allocation under
/// a common valuation. `NotFound` proves that none exists.
pub fn find_ef1_allocation(
    g: &Graph,
    n: usize,
    v: &Valuation,
    outer: bool,
    allow_empty: bool,
    budget: Budget,
) -> Outcome<Allocation> {
    let meter = budget.meter();
    let found = match Fast::new(v) {
        Some(fast) => search_fast(g, n, &fast, outer, allow_empty, &meter),
        None => search_exact(g, n, v, outer, allow_empty, &meter),
    };
    match found {
        Some(a) => {
            debug_assert!(check_ef1(g, &a, v, outer).is_ok());
            Outcome::Found(a)
        }
        None if meter.exceeded() => Outcome::BudgetExceeded,
        None => Outcome::NotFound,
    }
}

fn search_fast(
    g: &Graph,
    n: usize,
    fast: &Fast,
    outer: bool,
    allow_empty: bool,
    meter: &Meter,
) -> Option<Allocation> {
    if n == 0 {
        return None;
    }
    let lo = if allow_empty { 1 } else { n };
    let full = g.vertices();
    for k in lo..=n.min(g.vertex_count()) {
        let empties = n - k;
        if k == 1 {
            let t = fast.threshold(g, full, outer);
            if empties == 0 || t <= 0 {
                return Some(pad(vec![full], n));
            }
            continue;
        }
        // shard on the part containing vertex 0
        let mut firsts = Vec::new();
        let _ = connected_sets(g, 0, full, &mut |s| {
            let r = full - s;
            if r.len() >= k - 1 && g.component_count(r) < k {
                firsts.push(s);
            }
            ControlFlow::Continue(())
        });
        let hit = firsts.par_iter().find_map_first(|&first| {
            let mut vals: Vec<(i128, i128)> = Vec::with_capacity(k);
            let mut found = None;
            let mut stack = vec![first];
            let mut admit = |parts: &[VertexSet]| -> bool {
                if !meter.charge(1) {
                    return false;
                }
                // recompute from the prefix; parts are few
                vals.clear();
                vals.extend(parts.iter().map(|&p| (fast.value(p), fast.threshold(g, p, outer))));
                admissible(&vals)
            };
            if !admit(&stack) {
                return None;
            }
            let _ = partition_rec(g, full - first, k - 1, &mut stack, &mut admit, &mut |parts| {
                let max_t = parts.iter().map(|&p| fast.threshold(g, p, outer)).max().unwrap_or(0);
                if empties == 0 || max_t <= 0 {
                    found = Some(pad(parts.to_vec(), n));
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            found
        });
        if hit.is_some() {
            return hit;
        }
        if meter.exceeded() {
            return None;
        }
    }
    None
}

/// No part's value falls below another part's threshold.
fn admissible(vals: &[(i128, i128)]) -> bool {
    let (Some(&(last_v, last_t)), rest) = (vals.last(), &vals[..vals.len().saturating_sub(1)]) else {
        return true;
    };
    rest.iter().all(|&(v, t)| v >= last_t && last_v >= t)
}

fn search_exact(
    g: &Graph,
    n: usize,
    v: &Valuation,
    outer: bool,
    allow_empty: bool,
    meter: &Meter,
) -> Option<Allocation> {
    let mut found = None;
    let _ = for_each_connected_allocation(g, n, allow_empty, |a| {
        if !meter.charge(1) {
            return ControlFlow::Break(());
        }
        if check_ef1(g, a, v, outer).is_ok() {
            found = Some(a.clone());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

fn pad(mut shares: Vec<VertexSet>, n: usize) -> Allocation {
    shares.resize(n, VertexSet::new());
    Allocation { shares }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// Agents dominating no cutset member.
    pub deprived: Vec<usize>,
    /// Agents holding two or more distinguished vertices.
    pub privileged: Vec<usize>,
}

pub fn classify_agents(a: &Allocation, cert: &CutsetCertificate) -> Classification {
    let dist = cert.distinguished();
    let mut deprived = Vec::new();
    let mut privileged = Vec::new();
    for (i, &s) in a.shares.iter().enumerate() {
        if !cert.members.iter().any(|m| dominates(s, m)) {
            deprived.push(i);
        }
        if (s & dist).len() >= 2 {
            privileged.push(i);
        }
    }
    Classification {
        deprived,
        privileged,
    }
}
