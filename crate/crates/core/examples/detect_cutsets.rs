//! Search every figure graph for cutsets and print the best gap found for
//! each valence, then confirm one certificate with the standalone verifier.
//!
//! Run with `cargo run --example detect_cutsets`.

use fairgraph::cutset::{search_elementary, search_generalized, verify_input};
use fairgraph::fixtures::fixture_graph;
use fairgraph::{Budget, SearchOptions};

fn main() {
    for name in ["graph_iv", "graph_v", "graph_vi", "graph_vii", "jcs", "lstar"] {
        let g = fixture_graph(name).expect("fixture");
        let report = search_generalized(&g, &SearchOptions::default());
        let verdict = if report.proves_none() { "none (exhaustive)" } else { "found" };
        println!("{name}: {} vertices, cut size <= {}, {verdict}", g.vertex_count(), report.max_cut);
        for cert in &report.certificates {
            println!("  {}", cert.describe(&g));
        }
    }

    let g = fixture_graph("graph_iv").unwrap();
    let elementary = search_elementary(&g, 2, Budget::UNLIMITED);
    let cert = &elementary.certificates[0];
    let again = verify_input(&g, &cert.as_input()).expect("a found certificate re-verifies");
    println!("\nelementary on graph_iv: cut {} valence {} gap {}", g.format_set(again.cut()), again.valence, again.gap);
}
