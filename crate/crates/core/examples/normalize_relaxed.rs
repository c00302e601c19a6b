//! A relaxed cutset may have disconnected type-II members or an even
//! number of contacts. Normalization rewrites it into a proper cutset with
//! the same valence and no fewer witness blocks.

use fairgraph::cutset::normalize_relaxed;
use fairgraph::{Graph, VertexSet};

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

fn main() {
    // Member {0, 1} touches blocks {2}, {3} through 0 and 1 only: two
    // contacts, which is even.
    let g = Graph::new(7, &[(0, 1), (0, 2), (1, 3), (4, 2), (4, 3), (4, 5), (4, 6)]).unwrap();
    let members = [(set(&[0, 1]), 1), (set(&[4]), 1)];
    let witness = [set(&[2]), set(&[3]), set(&[5]), set(&[6])];
    match normalize_relaxed(&g, &members, &witness) {
        Ok((cert, steps)) => {
            for s in &steps {
                println!("case {} on member {}: {}", s.case, s.member, s.detail);
            }
            println!("result: {}", cert.describe(&g));
        }
        Err(e) => println!("rejected: {e}"),
    }
}
