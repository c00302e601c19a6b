//! Built-in graphs with fixed vertex labelings, addressable as
//! `fixture:<name>`.
//!
//! Labeled vertices come first in alphabetical order; vertices without a
//! letter in the drawings get `u1, u2, ...` (or `s<x>` for the spoke
//! attached to pentagon vertex `x` in `graph_vii`, and `l1..lk` for star
//! leaves).

use crate::graph::{Graph, GraphError};
use crate::valuation::{Rational, Valuation};

pub struct FixtureInfo {
    pub name: &'static str,
    pub summary: &'static str,
}

pub const FIXTURES: &[FixtureInfo] = &[
    FixtureInfo {
        name: "graph_i",
        summary: "K_{1,3} with center a; type-1 trident {a}",
    },
    FixtureInfo {
        name: "graph_ii",
        summary: "triangle b,c,d each carrying a pendant (u1 at b, u2 at c, u3 at d); type-2 trident {b,c,d}",
    },
    FixtureInfo {
        name: "graph_iii",
        summary: "square e-f-g-h with triangle u1,u2 at e, path u3-u4 at f, pendant u5 at h, path j-k at g",
    },
    FixtureInfo {
        name: "graph_iv",
        summary: "friendly diamond: e-a, a-c, a-d, c-b, d-b, b-f; elementary cutset {a,b}",
    },
    FixtureInfo {
        name: "graph_v",
        summary: "u1-c, c-d, d-u2, c-e, e-u3, d-e, u2-f, u3-f, f-u4; cutset {f},{c,d,e}",
    },
    FixtureInfo {
        name: "graph_vi",
        summary: "hubs expanded to triangles g,h,j and k,m,n around a,b,c,d; cutset {g,h,j},{k,m,n}",
    },
    FixtureInfo {
        name: "graph_vii",
        summary: "hub a joined through spokes sb..sf to pentagon b-c-d-e-f; cutset {a},{b,c,d,e,f}",
    },
    FixtureInfo {
        name: "jcs",
        summary: "a-b, b-c, c-d, c-e, d-f, e-f, f-g, g-h, b-g; non-traceable, no cutset of gap >= 2",
    },
    FixtureInfo {
        name: "lstar",
        summary: "subdivided lips graph: a-v1-b, a-v2-b, b-v3-c, b-v4-c, a-v5-c",
    },
    FixtureInfo {
        name: "star_<k>",
        summary: "K_{1,k}: center c (vertex 0), leaves l1..lk",
    },
];

fn labeled(name: &str, labels: &[&str], edges: &[(&str, &str)]) -> Graph {
    let idx = |l: &str| labels.iter().position(|x| *x == l).expect("fixture label");
    let e: Vec<_> = edges.iter().map(|(u, v)| (idx(u), idx(v))).collect();
    Graph::new(labels.len(), &e)
        .and_then(|g| g.with_labels(labels))
        .expect("fixture graphs are valid")
        .with_name(name)
}

pub fn fixture_graph(name: &str) -> Result<Graph, GraphError> {
    let g = match name {
        "graph_i" => labeled(
            name,
            &["a", "u1", "u2", "u3"],
            &[("a", "u1"), ("a", "u2"), ("a", "u3")],
        ),
        "graph_ii" => labeled(
            name,
            &["b", "c", "d", "u1", "u2", "u3"],
            &[
                ("b", "c"),
                ("c", "d"),
                ("b", "d"),
                ("b", "u1"),
                ("c", "u2"),
                ("d", "u3"),
            ],
        ),
        "graph_iii" => labeled(
            name,
            &["e", "f", "g", "h", "j", "k", "u1", "u2", "u3", "u4", "u5"],
            &[
                ("u1", "u2"),
                ("u1", "e"),
                ("u2", "e"),
                ("u3", "u4"),
                ("u4", "f"),
                ("e", "f"),
                ("e", "h"),
                ("f", "g"),
                ("h", "g"),
                ("h", "u5"),
                ("g", "j"),
                ("j", "k"),
            ],
        ),
        "graph_iv" => labeled(
            name,
            &["a", "b", "c", "d", "e", "f"],
            &[
                ("e", "a"),
                ("a", "c"),
                ("a", "d"),
                ("c", "b"),
                ("d", "b"),
                ("b", "f"),
            ],
        ),
        "graph_v" => labeled(
            name,
            &["c", "d", "e", "f", "u1", "u2", "u3", "u4"],
            &[
                ("u1", "c"),
                ("c", "d"),
                ("d", "u2"),
                ("c", "e"),
                ("e", "u3"),
                ("d", "e"),
                ("u2", "f"),
                ("u3", "f"),
                ("f", "u4"),
            ],
        ),
        "graph_vi" => labeled(
            name,
            &["a", "b", "c", "d", "g", "h", "j", "k", "m", "n"],
            &[
                ("a", "g"),
                ("g", "h"),
                ("h", "c"),
                ("g", "j"),
                ("j", "d"),
                ("h", "j"),
                ("c", "k"),
                ("k", "m"),
                ("d", "n"),
                ("n", "m"),
                ("k", "n"),
                ("m", "b"),
            ],
        ),
        "graph_vii" => labeled(
            name,
            &["a", "b", "c", "d", "e", "f", "sb", "sc", "sd", "se", "sf"],
            &[
                ("a", "sb"),
                ("a", "sc"),
                ("a", "sd"),
                ("a", "se"),
                ("a", "sf"),
                ("sb", "b"),
                ("sc", "c"),
                ("sd", "d"),
                ("se", "e"),
                ("sf", "f"),
                ("b", "c"),
                ("c", "d"),
                ("d", "e"),
                ("e", "f"),
                ("f", "b"),
            ],
        ),
        "jcs" => labeled(
            name,
            &["a", "b", "c", "d", "e", "f", "g", "h"],
            &[
                ("a", "b"),
                ("b", "c"),
                ("c", "d"),
                ("c", "e"),
                ("d", "f"),
                ("e", "f"),
                ("f", "g"),
                ("g", "h"),
                ("b", "g"),
            ],
        ),
        "lstar" => labeled(
            name,
            &["a", "b", "c", "v1", "v2", "v3", "v4", "v5"],
            &[
                ("a", "v2"),
                ("v2", "b"),
                ("b", "v4"),
                ("v4", "c"),
                ("a", "v1"),
                ("v1", "b"),
                ("b", "v3"),
                ("v3", "c"),
                ("a", "v5"),
                ("v5", "c"),
            ],
        ),
        other => {
            let k = other
                .strip_prefix("star_")
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1)
                .ok_or_else(|| GraphError::UnknownFixture(other.to_string()))?;
            star(k)
        }
    };
    Ok(g)
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    let mut labels = vec!["c".to_string()];
    labels.extend((1..=k).map(|i| format!("l{i}")));
    Graph::new(k + 1, &edges)
        .and_then(|g| g.with_labels(&labels))
        .expect("star is valid")
        .with_name(format!("star_{k}"))
}

/// A fixture graph together with its published blocking weights and the
/// agent count they defeat.
pub fn fixture_valuation(name: &str) -> Result<(Graph, Valuation, usize), GraphError> {
    let g = fixture_graph(name)?;
    let third = Rational::new(1, 3);
    let quarter = Rational::new(1, 4);
    let one = Rational::from_integer(1);
    let w = |pairs: &[(&[&str], Rational)]| {
        let mut weights = vec![Rational::from_integer(0); g.vertex_count()];
        for (labels, value) in pairs {
            for l in labels.iter() {
                weights[g.resolve_vertex(l).expect("fixture label")] = *value;
            }
        }
        Valuation::additive(weights).expect("nonnegative weights")
    };
    let (v, n) = match name {
        "graph_i" => (w(&[(&["a", "u1", "u2", "u3"], one)]), 2),
        "graph_ii" => (
            w(&[(&["b", "c", "d"], third), (&["u1", "u2", "u3"], one)]),
            2,
        ),
        "graph_iii" => (
            w(&[(&["e", "f", "h"], third), (&["u1", "u3", "u5"], one)]),
            2,
        ),
        "graph_iv" => (w(&[(&["a", "b", "c", "d", "e", "f"], one)]), 3),
        "graph_v" => (
            w(&[
                (&["u1", "u2", "u3", "u4", "f"], one),
                (&["c", "d", "e"], third),
            ]),
            3,
        ),
        "graph_vi" => (
            w(&[
                (&["g", "m"], third),
                (&["h", "j", "k", "n"], quarter),
                (&["a", "b", "c", "d"], one),
            ]),
            3,
        ),
        "graph_vii" => (
            w(&[
                (&["a", "sb", "sc", "sd", "se", "sf"], one),
                (&["b", "c", "d", "e", "f"], third),
            ]),
            4,
        ),
        "jcs" => {
            let weights = [2, 2, 2, 3, 3, 2, 2, 2]
                .into_iter()
                .map(Rational::from_integer)
                .collect();
            (Valuation::additive(weights).expect("nonnegative"), 3)
        }
        "lstar" => (
            Valuation::additive(vec![one; g.vertex_count()]).expect("nonnegative"),
            4,
        ),
        _ if name.starts_with("star_") => (
            Valuation::additive(vec![one; g.vertex_count()]).expect("nonnegative"),
            2,
        ),
        other => return Err(GraphError::UnknownFixture(other.to_string())),
    };
    Ok((g, v, n))
}

/// Names of the concrete fixtures (with `star_5` standing in for the star
/// family).
pub fn fixture_names() -> Vec<&'static str> {
    vec![
        "graph_i", "graph_ii", "graph_iii", "graph_iv", "graph_v", "graph_vi", "graph_vii", "jcs",
        "lstar", "star_5",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let expect = [
            ("graph_i", 4, 3),
            ("graph_ii", 6, 6),
            ("graph_iii", 11, 12),
            ("graph_iv", 6, 6),
            ("graph_v", 8, 9),
            ("graph_vi", 10, 12),
            ("graph_vii", 11, 15),
            ("jcs", 8, 9),
            ("lstar", 8, 10),
            ("star_5", 6, 5),
        ];
        for (name, n, m) in expect {
            let g = fixture_graph(name).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (n, m), "{name}");
        }
    }

    #[test]
    fn graph_iv_edges() {
        let g = fixture_graph("graph_iv").unwrap();
        for (u, v) in [("e", "a"), ("a", "c"), ("a", "d"), ("c", "b"), ("d", "b"), ("b", "f")] {
            assert!(g.adjacent(g.resolve_vertex(u).unwrap(), g.resolve_vertex(v).unwrap()));
        }
    }

    #[test]
    fn unknown_fixture() {
        assert!(matches!(fixture_graph("nope"), Err(GraphError::UnknownFixture(_))));
        assert!(fixture_graph("star_0").is_err());
        assert!(fixture_valuation("nope").is_err());
    }

    #[test]
    fn published_weights() {
        let (g, v, n) = fixture_valuation("graph_vi").unwrap();
        assert_eq!(n, 3);
        let at = |l: &str| v.weight(g.resolve_vertex(l).unwrap()).unwrap();
        assert_eq!(at("g"), Rational::new(1, 3));
        assert_eq!(at("n"), Rational::new(1, 4));
        assert_eq!(at("d"), Rational::from_integer(1));

        let (_, v, n) = fixture_valuation("jcs").unwrap();
        assert_eq!(n, 3);
        let w: Vec<i64> = (0..8).map(|i| v.weight(i).unwrap().to_integer()).collect();
        assert_eq!(w, vec![2, 2, 2, 3, 3, 2, 2, 2]);

        let (g, v, n) = fixture_valuation("graph_iv").unwrap();
        assert_eq!(n, 3);
        assert!((0..g.vertex_count()).all(|i| v.weight(i) == Some(Rational::from_integer(1))));
    }
}
