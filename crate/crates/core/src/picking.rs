//! Sequential picking procedures producing connected EF1-outer allocations
//! when there are at least `|V| - 2` agents.

use serde::Serialize;
use thiserror::Error;

use crate::allocation::Allocation;
use crate::graph::Graph;
use crate::valuation::{Rational, Valuation};
use crate::vertex_set::VertexSet;

/// Per-agent valuations together with the picking order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub valuations: Vec<Valuation>,
    pub order: Vec<usize>,
}

impl Profile {
    pub fn new(valuations: Vec<Valuation>) -> Self {
        let order = (0..valuations.len()).collect();
        Profile { valuations, order }
    }

    pub fn common(v: Valuation, n: usize) -> Self {
        Profile::new(vec![v; n])
    }

    /// Panics unless `order` is a permutation of the agents.
    pub fn with_order(mut self, order: Vec<usize>) -> Self {
        let mut seen = order.clone();
        seen.sort_unstable();
        assert!(seen.iter().copied().eq(0..self.valuations.len()), "order must be a permutation");
        self.order = order;
        self
    }

    pub fn agents(&self) -> usize {
        self.valuations.len()
    }

    fn value(&self, agent: usize, s: VertexSet) -> Rational {
        self.valuations[agent].evaluate(s)
    }

    /// Most valuable vertex of `avail` for `agent`, lowest index on ties.
    fn favourite(&self, agent: usize, avail: VertexSet) -> Option<usize> {
        let mut best: Option<(usize, Rational)> = None;
        for v in avail {
            let val = self.value(agent, VertexSet::singleton(v));
            if best.is_none_or(|(_, b)| val > b) {
                best = Some((v, val));
            }
        }
        best.map(|(v, _)| v)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
pub enum PickError {
    #[error("{agents} agents on {vertices} vertices; this procedure needs {expected}")]
    WrongAgentCount {
        agents: usize,
        vertices: usize,
        expected: String,
    },
    #[error("vertex {u} is the only neighbor of both {a} and {b}")]
    LeafCondition { a: usize, b: usize, u: usize },
    #[error("profile has {found} valuations over {vertices} vertices")]
    BadProfile { found: usize, vertices: usize },
}

/// How the final allocation was assembled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum PickRoute {
    WholeGraph,
    Singletons,
    LastVertex { vertex: usize, agent: usize },
    TwoNeighbors { a: usize, b: usize, agent_a: usize, agent_b: usize },
    JoinHolder { a: usize, b: usize, u: usize, agent: usize },
    Repick { a: usize, b: usize, taker: usize, x: usize, receiver: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PickResult {
    pub allocation: Allocation,
    pub route: PickRoute,
    /// `(agent, vertex)` in phase-one picking order.
    pub picks: Vec<(usize, usize)>,
}

/// No vertex is the only neighbor of two distinct vertices; otherwise the
/// lexicographically first violating `(a, b, u)`.
pub fn leaf_condition_holds(g: &Graph) -> Result<(), (usize, usize, usize)> {
    let mut first_leaf: Vec<Option<usize>> = vec![None; g.vertex_count()];
    let mut worst: Option<(usize, usize, usize)> = None;
    for v in g.vertices() {
        if g.degree(v) != 1 {
            continue;
        }
        let u = g.neighbors(v)[0];
        match first_leaf[u] {
            None => first_leaf[u] = Some(v),
            Some(a) => {
                let t = (a, v, u);
                if worst.is_none_or(|w| t < w) {
                    worst = Some(t);
                }
            }
        }
    }
    worst.map_or(Ok(()), Err)
}

fn check_profile(g: &Graph, p: &Profile) -> Result<(), PickError> {
    let n = g.vertex_count();
    if p.valuations.iter().any(|v| v.weights().is_some_and(|w| w.len() != n)) {
        return Err(PickError::BadProfile {
            found: p.agents(),
            vertices: n,
        });
    }
    Ok(())
}

fn phase_one(p: &Profile, mut avail: VertexSet, agents: &[usize]) -> (Vec<(usize, usize)>, VertexSet) {
    let mut picks = Vec::with_capacity(agents.len());
    for &i in agents {
        let Some(v) = p.favourite(i, avail) else { break };
        avail.remove(v);
        picks.push((i, v));
    }
    (picks, avail)
}

fn shares_from(n: usize, picks: &[(usize, usize)]) -> Vec<VertexSet> {
    let mut shares = vec![VertexSet::new(); n];
    for &(i, v) in picks {
        shares[i].insert(v);
    }
    shares
}

/// Picking for `n >= |V| - 1` agents: everyone picks a favourite vertex in
/// order; a single leftover joins the first agent whose pick is adjacent.
pub fn pick_n_minus_1(g: &Graph, p: &Profile) -> Result<PickResult, PickError> {
    check_profile(g, p)?;
    let n = p.agents();
    let nv = g.vertex_count();
    if n + 1 < nv || n == 0 {
        return Err(PickError::WrongAgentCount {
            agents: n,
            vertices: nv,
            expected: format!("at least {}", nv.saturating_sub(1).max(1)),
        });
    }
    if n == 1 && nv <= 2 {
        return Ok(whole(g, p));
    }
    let (picks, rest) = phase_one(p, g.vertices(), &p.order);
    let mut shares = shares_from(n, &picks);
    let Some(x) = rest.first() else {
        return Ok(PickResult {
            allocation: Allocation::new(shares),
            route: PickRoute::Singletons,
            picks,
        });
    };
    let (agent, _) = *picks
        .iter()
        .find(|&&(_, v)| g.adjacent(v, x))
        .expect("a connected graph gives the leftover a picked neighbor");
    shares[agent].insert(x);
    Ok(PickResult {
        allocation: Allocation::new(shares),
        route: PickRoute::LastVertex { vertex: x, agent },
        picks,
    })
}

fn whole(g: &Graph, p: &Profile) -> PickResult {
    let mut shares = vec![VertexSet::new(); p.agents()];
    shares[0] = g.vertices();
    PickResult {
        allocation: Allocation::new(shares),
        route: PickRoute::WholeGraph,
        picks: Vec::new(),
    }
}

/// Two-phase picking for `n = |V| - 2` agents on graphs satisfying
/// [`leaf_condition_holds`].
pub fn pick_n_minus_2(g: &Graph, p: &Profile) -> Result<PickResult, PickError> {
    check_profile(g, p)?;
    let n = p.agents();
    let nv = g.vertex_count();
    if n + 2 != nv || n == 0 {
        return Err(PickError::WrongAgentCount {
            agents: n,
            vertices: nv,
            expected: format!("exactly {}", nv.saturating_sub(2)),
        });
    }
    if let Err((a, b, u)) = leaf_condition_holds(g) {
        return Err(PickError::LeafCondition { a, b, u });
    }
    if n == 1 {
        return Ok(whole(g, p));
    }

    let (picks, rest) = phase_one(p, g.vertices(), &p.order);
    let left: Vec<usize> = rest.iter().collect();
    let (r0, r1) = (left[0], left[1]);
    let holder = |v: usize| picks.iter().find(|&&(_, w)| w == v).map(|&(i, _)| i).expect("picked");
    let mut shares = shares_from(n, &picks);

    // distinct picked neighbors for the two leftovers
    for &(i, vi) in &picks {
        if !g.adjacent(vi, r0) {
            continue;
        }
        if let Some(&(j, _)) = picks.iter().find(|&&(j, vj)| j != i && g.adjacent(vj, r1)) {
            shares[i].insert(r0);
            shares[j].insert(r1);
            return Ok(PickResult {
                allocation: Allocation::new(shares),
                route: PickRoute::TwoNeighbors {
                    a: r0,
                    b: r1,
                    agent_a: i,
                    agent_b: j,
                },
                picks,
            });
        }
    }

    let picked_nbr = |v: usize| picks.iter().map(|&(_, w)| w).filter(|&w| g.adjacent(v, w)).min();
    let (a, b) = if picked_nbr(r0).is_some() { (r1, r0) } else { (r0, r1) };
    let u = picked_nbr(b).expect("a connected graph gives a leftover a picked neighbor");
    let ab = VertexSet::from_iter([a, b]);

    let taker = picks.iter().position(|&(i, vi)| p.value(i, ab) > p.value(i, VertexSet::singleton(vi)));
    let Some(pos) = taker else {
        let agent = holder(u);
        shares[agent] |= ab;
        return Ok(PickResult {
            allocation: Allocation::new(shares),
            route: PickRoute::JoinHolder { a, b, u, agent },
            picks,
        });
    };

    let (i, _) = picks[pos];
    let pool: VertexSet = picks[pos..].iter().map(|&(_, v)| v).collect();
    let later: Vec<usize> = picks[pos + 1..].iter().map(|&(z, _)| z).collect();
    let (repicks, leftover) = phase_one(p, pool, &later);
    let x = leftover.first().expect("one vertex remains");
    let mut w: Vec<(usize, usize)> = picks[..pos].to_vec();
    w.extend(repicks);
    let (receiver, _) = w
        .iter()
        .copied()
        .filter(|&(_, wj)| g.adjacent(wj, x))
        .min_by_key(|&(_, wj)| wj)
        .expect("the leaf condition gives the last vertex a neighbor among the single picks");

    let mut shares = shares_from(n, &w);
    shares[i] = ab;
    shares[receiver].insert(x);
    Ok(PickResult {
        allocation: Allocation::new(shares),
        route: PickRoute::Repick {
            a,
            b,
            taker: i,
            x,
            receiver,
        },
        picks,
    })
}

/// Dispatches on the agent count: one agent takes everything, `n >= |V| - 1`
/// uses [`pick_n_minus_1`], `n = |V| - 2` uses [`pick_n_minus_2`].
pub fn pick(g: &Graph, p: &Profile) -> Result<PickResult, PickError> {
    let n = p.agents();
    let nv = g.vertex_count();
    if n == 1 {
        check_profile(g, p)?;
        return Ok(whole(g, p));
    }
    if n + 1 >= nv {
        pick_n_minus_1(g, p)
    } else if n + 2 == nv {
        pick_n_minus_2(g, p)
    } else {
        Err(PickError::WrongAgentCount {
            agents: n,
            vertices: nv,
            expected: format!("at least {}", nv - 2),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::allocation::check_ef1_profile;
    use crate::fixtures::fixture_graph;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn additive(w: &[i64]) -> Valuation {
        Valuation::additive(w.iter().map(|&x| Rational::from_integer(x)).collect()).unwrap()
    }

    fn assert_ef1_outer(g: &Graph, p: &Profile, r: &PickResult) {
        r.allocation.validate(g, true).unwrap();
        assert_eq!(r.allocation.agents(), p.agents());
        check_ef1_profile(g, &r.allocation, &p.valuations, true).unwrap();
    }

    #[test]
    fn leaf_condition() {
        let star = fixture_graph("star_3").unwrap();
        assert_eq!(leaf_condition_holds(&star), Err((1, 2, 0)));
        assert!(leaf_condition_holds(&fixture_graph("graph_iv").unwrap()).is_ok());
        assert!(leaf_condition_holds(&path(4)).is_ok());
        assert!(leaf_condition_holds(&path(2)).is_ok());
    }

    #[test]
    fn n_minus_1_examples() {
        let g = path(3);
        let p = Profile::common(Valuation::unit(3), 2);
        let r = pick_n_minus_1(&g, &p).unwrap();
        assert_ef1_outer(&g, &p, &r);
        let mut sizes: Vec<usize> = r.allocation.shares.iter().map(|s| s.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2]);

        let g = fixture_graph("graph_iv").unwrap();
        let p = Profile::common(Valuation::unit(6), 6);
        let r = pick(&g, &p).unwrap();
        assert_eq!(r.route, PickRoute::Singletons);
        assert!(r.allocation.shares.iter().all(|s| s.len() == 1));

        let p = Profile::common(Valuation::unit(6), 9);
        let r = pick(&g, &p).unwrap();
        assert_ef1_outer(&g, &p, &r);
        assert_eq!(r.allocation.shares.iter().filter(|s| s.is_empty()).count(), 3);
    }

    #[test]
    fn n_minus_2_examples() {
        let g = path(4);
        let p = Profile::common(Valuation::unit(4), 2);
        assert_ef1_outer(&g, &p, &pick_n_minus_2(&g, &p).unwrap());

        let star = fixture_graph("star_3").unwrap();
        let p = Profile::common(Valuation::unit(4), 2);
        assert_eq!(
            pick_n_minus_2(&star, &p),
            Err(PickError::LeafCondition { a: 1, b: 2, u: 0 })
        );
        assert!(matches!(
            pick_n_minus_2(&path(5), &Profile::common(Valuation::unit(5), 2)),
            Err(PickError::WrongAgentCount { .. })
        ));
    }

    #[test]
    fn repick_route() {
        // agent 0 trades its pick for the two leftovers; the rest re-pick
        let g = path(6);
        let hi = additive(&[9, 8, 7, 6, 0, 0]);
        let p = Profile::new(vec![Valuation::unit(6), hi.clone(), hi.clone(), hi]);
        let r = pick_n_minus_2(&g, &p).unwrap();
        assert_ef1_outer(&g, &p, &r);
        assert_eq!(r.route, PickRoute::Repick { a: 5, b: 4, taker: 0, x: 3, receiver: 3 });
        assert_eq!(r.allocation.shares[0], VertexSet::from_iter([4, 5]));
    }

    #[test]
    fn join_holder_route() {
        // leftovers 4, 5 hang off 3 only; nobody values them
        let g = path(6);
        let p = Profile::common(additive(&[5, 4, 3, 2, 1, 1]), 4);
        let r = pick_n_minus_2(&g, &p).unwrap();
        assert_ef1_outer(&g, &p, &r);
        assert_eq!(r.route, PickRoute::JoinHolder { a: 5, b: 4, u: 3, agent: 3 });
    }

    #[test]
    fn graph_iv_random_weights() {
        let g = fixture_graph("graph_iv").unwrap();
        let w = [[3, 1, 4, 1, 5, 9], [2, 6, 5, 3, 5, 8], [9, 7, 9, 3, 2, 3], [8, 4, 6, 2, 6, 4], [3, 3, 8, 3, 2, 7]];
        let vals: Vec<Valuation> = w.iter().map(|r| additive(r)).collect();
        let p5 = Profile::new(vals.clone());
        assert_ef1_outer(&g, &p5, &pick_n_minus_1(&g, &p5).unwrap());
        let p4 = Profile::new(vals[..4].to_vec()).with_order(vec![2, 0, 3, 1]);
        assert_ef1_outer(&g, &p4, &pick_n_minus_2(&g, &p4).unwrap());
    }

    #[test]
    fn deterministic() {
        let g = fixture_graph("graph_iv").unwrap();
        let p = Profile::common(Valuation::unit(6), 4);
        assert_eq!(pick(&g, &p).unwrap(), pick(&g, &p).unwrap());
    }
}
