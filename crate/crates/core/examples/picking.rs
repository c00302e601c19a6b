//! Picking procedures for many agents with individual additive valuations.
//! With `|V| - 1` agents the procedure always succeeds; with `|V| - 2` it
//! needs the leaf condition.

use fairgraph::allocation::check_ef1_profile;
use fairgraph::fixtures::fixture_graph;
use fairgraph::picking::{leaf_condition_holds, pick, Profile};
use fairgraph::{Graph, Rational, Valuation};

fn profile(agents: usize, vertices: usize, seed: u64) -> Vec<Valuation> {
    // Deterministic small weights without pulling in an RNG.
    let mut x = seed;
    (0..agents)
        .map(|_| {
            let w = (0..vertices)
                .map(|_| {
                    x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    Rational::from_integer((x >> 60) as i64)
                })
                .collect();
            Valuation::additive(w).unwrap()
        })
        .collect()
}

fn run(g: &Graph, agents: usize) {
    let vals = profile(agents, g.vertex_count(), 7);
    match pick(g, &Profile::new(vals.clone())) {
        Ok(res) => {
            let ok = check_ef1_profile(g, &res.allocation, &vals, true).is_ok();
            println!("  {agents} agents via {:?}: {} (EF1-outer: {ok})", res.route, res.allocation.describe(g));
        }
        Err(e) => println!("  {agents} agents: {e}"),
    }
}

fn main() {
    let path = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap().with_name("P6");
    for g in [path, fixture_graph("graph_iv").unwrap(), fixture_graph("star_4").unwrap()] {
        println!("{} (leaf condition: {:?})", g.name().unwrap(), leaf_condition_holds(&g));
        let n = g.vertex_count();
        run(&g, n - 1);
        run(&g, n - 2);
    }
}
