//! Verdicts for every agent count up to `|V|`, each backed by a
//! certificate: a Hamiltonian path, a picking regime, a bipolar ordering,
//! a blocking cutset or an oracle-confirmed counterexample.

use fairgraph::fixtures::fixture_graph;
use fairgraph::spectrum::{compute_spectrum, SpectrumOptions, ValueClass};

fn main() {
    for (name, class) in [("star_5", ValueClass::CA), ("graph_iv", ValueClass::CA), ("lstar", ValueClass::CA), ("graph_vii", ValueClass::CM)] {
        let g = fixture_graph(name).unwrap();
        let report = compute_spectrum(&g, class, g.vertex_count(), &SpectrumOptions::default()).unwrap();
        println!("{name} [{class}] {}", report.pattern());
        for e in &report.entries {
            let why = e.certificate.as_ref().map(|c| c.summary(&g)).unwrap_or_else(|| "no certificate".into());
            println!("  n = {}: {:?}, {why}", e.n, e.verdict);
        }
    }
}
