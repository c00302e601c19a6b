//! The exhaustive oracle: find a connected EF1 allocation or prove that
//! none exists, and explain why a given allocation fails.

use fairgraph::allocation::{check_ef1, default_allow_empty};
use fairgraph::fixtures::fixture_valuation;
use fairgraph::graph::Graph;
use fairgraph::valuation::{format_rational, parse_weights};
use fairgraph::{find_ef1_allocation, Allocation, Budget, Outcome};

fn main() {
    for name in ["graph_iv", "graph_v", "graph_vi", "graph_vii"] {
        let (g, v, n) = fixture_valuation(name).unwrap();
        let out = find_ef1_allocation(&g, n, &v, false, default_allow_empty(&g, n), Budget::UNLIMITED);
        println!("{name} with {n} agents: {}", match out {
            Outcome::Found(a) => format!("found {}", a.describe(&g)),
            Outcome::NotFound => "no connected EF1 allocation".into(),
            Outcome::BudgetExceeded => "budget exhausted".into(),
        });
    }

    // A path where removing an interior vertex would disconnect the share.
    let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let v = parse_weights(&g, "0 2\n2 3\n").unwrap();
    let a = Allocation::new(vec![[0].into_iter().collect(), [1, 2, 3].into_iter().collect()]);
    println!("\nP4 weights 2 0 3 0, shares {}", a.describe(&g));
    println!("  EF1: {}", check_ef1(&g, &a, &v, false).is_ok());
    if let Err(w) = check_ef1(&g, &a, &v, true) {
        println!(
            "  EF1-outer fails: agent {} values own share {} and agent {}'s share {}",
            w.envious,
            format_rational(&w.own_value),
            w.envied,
            format_rational(&w.envied_value)
        );
        for r in &w.removals {
            println!("    drop {}: {} (connected: {})", g.label(r.vertex), format_rational(&r.value), r.connected);
        }
    }

    let (g, v, _) = fixture_valuation("graph_iv").unwrap();
    let tight = find_ef1_allocation(&g, 3, &v, false, false, Budget::nodes(5));
    println!("\ngraph_iv under a 5-node budget: {tight:?}");
}
