//! Parse an edge list, inspect connectivity, and enumerate the connected
//! allocations of a small graph.

use fairgraph::allocation::{count_connected_allocations, enumerate_connected_allocations};
use fairgraph::graph::load_graph;
use fairgraph::Graph;

const DIAMOND: &str = "\
# friendly diamond with two tails
6 6
0 1
1 2
1 3
2 4
3 4
4 5
";

fn main() {
    let g = Graph::parse_edge_list(DIAMOND).unwrap();
    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    let cut = [1, 4].into_iter().collect();
    let parts: Vec<String> = g.components_after_removal(cut).iter().map(|c| g.format_set(*c)).collect();
    println!("removing {{1,4}} leaves {}", parts.join(" "));

    for n in 1..=4 {
        println!("{n} agents: {} connected allocations", count_connected_allocations(&g, n, false));
    }
    for a in enumerate_connected_allocations(&g, 2, false).iter().take(4) {
        println!("  {}", a.describe(&g));
    }

    let fixture = load_graph("fixture:graph_iv").unwrap();
    print!("\nfixture:graph_iv as an edge list\n{}", fixture.to_edge_list());
}
