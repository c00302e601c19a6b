//! Two-agent structure: a graph admits a bipolar ordering exactly when it
//! has no trident. Prints whichever witness exists for a few graphs.

use fairgraph::fixtures::fixture_graph;
use fairgraph::obstruction::{find_bipolar_ordering, find_hamiltonian_path, find_trident};
use fairgraph::{Budget, Graph, Outcome};

fn show(g: &Graph) {
    let name = g.name().unwrap_or("?");
    let labels = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ");
    match find_hamiltonian_path(g, Budget::UNLIMITED) {
        Outcome::Found(p) => println!("{name}: traceable via {}", labels(&p)),
        _ => println!("{name}: not traceable"),
    }
    match (find_bipolar_ordering(g, Budget::UNLIMITED), find_trident(g)) {
        (Outcome::Found(order), _) => println!("  bipolar ordering {}", labels(&order)),
        (_, Outcome::Found(t)) => {
            let comps: Vec<String> = t.components.iter().map(|c| g.format_set(*c)).collect();
            println!("  {:?} trident on {} leaving {}", t.kind, g.format_set(t.cut), comps.join(" "));
        }
        other => println!("  undecided: {other:?}"),
    }
}

fn main() {
    for name in ["graph_i", "graph_ii", "graph_iii", "graph_iv", "jcs", "star_4"] {
        show(&fixture_graph(name).unwrap());
    }
    let cycle = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap().with_name("C6");
    show(&cycle);
}
