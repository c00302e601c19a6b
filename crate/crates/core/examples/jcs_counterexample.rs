//! The JCS graph has no cutset with gap two or more and no Hamiltonian
//! path, yet three agents sharing one additive valuation cannot be served.
//! A small palette search rediscovers such a valuation from scratch.

use fairgraph::allocation::default_allow_empty;
use fairgraph::fixtures::{fixture_graph, fixture_valuation};
use fairgraph::obstruction::find_hamiltonian_path;
use fairgraph::spectrum::search_ca_counterexample;
use fairgraph::valuation::format_rational;
use fairgraph::{find_ef1_allocation, Budget, Outcome, Rational, SearchOptions};

fn main() {
    let g = fixture_graph("jcs").unwrap();
    let cutsets = fairgraph::cutset::search_generalized(&g, &SearchOptions::default().max_cut(6));
    println!("cutsets up to size 6: {} (complete: {})", cutsets.certificates.len(), cutsets.complete);
    println!("Hamiltonian path: {:?}", find_hamiltonian_path(&g, Budget::UNLIMITED).found());

    let (g, v, n) = fixture_valuation("jcs").unwrap();
    let w: Vec<String> = v.weights().unwrap().iter().map(format_rational).collect();
    let out = find_ef1_allocation(&g, n, &v, false, default_allow_empty(&g, n), Budget::UNLIMITED);
    println!("weights {} with {n} agents: EF1 exists? {}", w.join(" "), out.is_found());

    let palette = [Rational::from_integer(2), Rational::from_integer(3)];
    match search_ca_counterexample(&g, 3, &palette, Budget::UNLIMITED) {
        Outcome::Found(v) => {
            let w: Vec<String> = v.weights().unwrap().iter().map(format_rational).collect();
            println!("palette {{2, 3}} search found {}", w.join(" "));
        }
        other => println!("palette search: {other:?}"),
    }
}
