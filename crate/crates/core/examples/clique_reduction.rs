//! Build cutset instances from Clique instances and check the forward
//! direction: a planted clique yields a cutset of the target valence.

use fairgraph::cutset::search_elementary;
use fairgraph::reduction::{forward_cutset_from_clique, reduce_clique_elementary, reduce_clique_generalized, CliqueInstance};
use fairgraph::{Budget, VertexSet};

fn main() {
    // A triangle 0-1-2 with a pendant 3 hanging off vertex 2.
    let inst = CliqueInstance::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)], 3).unwrap();
    let clique: VertexSet = [0, 1, 2].into_iter().collect();

    let red = reduce_clique_elementary(&inst).unwrap();
    println!("elementary: {} vertices, target valence {}", red.graph.vertex_count(), red.target_valence);
    let cert = forward_cutset_from_clique(&red, clique).unwrap();
    println!("  forward cutset: {}", cert.describe(&red.graph));
    let report = search_elementary(&red.graph, red.target_valence, Budget::UNLIMITED);
    let best = report.certificates.iter().filter(|c| c.valence == red.target_valence).map(|c| c.gap).max();
    println!("  search at valence {}: best gap {best:?}", red.target_valence);

    let red = reduce_clique_generalized(&inst, None).unwrap();
    println!("generalized: {} vertices, target valence {}", red.graph.vertex_count(), red.target_valence);
    let cert = forward_cutset_from_clique(&red, clique).unwrap();
    println!("  forward cutset valence {} gap {} with {} members", cert.valence, cert.gap, cert.members.len());
    println!("  sidecar: {}", serde_json::to_string(&red.sidecar()).unwrap());
}
