//! Turn a cutset into a common valuation under which no connected EF1
//! allocation exists, for every agent count in its critical interval.

use fairgraph::allocation::default_allow_empty;
use fairgraph::fixtures::fixture_graph;
use fairgraph::valuation::{blocking_valuation_cm, blocking_valuation_tame, format_rational};
use fairgraph::{find_ef1_allocation, Budget, SearchOptions, Valuation};

fn main() {
    for name in ["graph_iv", "graph_v", "graph_vii"] {
        let g = fixture_graph(name).unwrap();
        let report = fairgraph::cutset::search_generalized(&g, &SearchOptions::default());
        let cert = &report.certificates[0];
        println!("{name}: {}", cert.describe(&g));

        let mut valuations = vec![("monotone", blocking_valuation_cm(cert))];
        if cert.is_tame() {
            valuations.push(("additive", blocking_valuation_tame(&g, cert).unwrap()));
        }
        for (kind, v) in &valuations {
            if let Valuation::Additive(w) = v {
                let shown: Vec<String> = w.iter().map(format_rational).collect();
                println!("  {kind} weights: {}", shown.join(" "));
            }
            for n in cert.critical_interval() {
                let out = find_ef1_allocation(&g, n, v, false, default_allow_empty(&g, n), Budget::UNLIMITED);
                println!("  {kind}, n = {n}: EF1 allocation exists? {}", out.is_found());
            }
        }
    }
}
