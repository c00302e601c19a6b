use serde::Serialize;
use thiserror::Error;

use super::{Contact, CutsetCertificate, Member, MemberKind};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// One violated clause of the cutset definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Error)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    #[error("vertex {vertex} is out of range")]
    VertexOutOfRange { vertex: usize },
    #[error("member {member} is empty")]
    EmptyMember { member: usize },
    #[error("members {a} and {b} overlap")]
    MembersOverlap { a: usize, b: usize },
    #[error("type-II member {member} does not induce a connected subgraph")]
    DisconnectedMember { member: usize },
    #[error("witness block {block} is empty")]
    EmptyBlock { block: usize },
    #[error("witness blocks {a} and {b} overlap")]
    BlocksOverlap { a: usize, b: usize },
    #[error("witness block {block} meets the cutset")]
    BlockMeetsCutset { block: usize },
    #[error("vertices {vertices} are covered by neither members nor witness")]
    Uncovered { vertices: VertexSet },
    #[error("witness blocks {a} and {b} are adjacent")]
    BlocksAdjacent { a: usize, b: usize },
    #[error("member {member} has {} contact vertices {vertices} for block {block}", vertices.len())]
    MultipleContacts {
        member: usize,
        block: usize,
        vertices: VertexSet,
    },
    #[error("vertex {vertex} of member {member} is the contact of several blocks")]
    SharedContactVertex { member: usize, vertex: usize },
    #[error("type-II member {member} has {found} contact blocks, expected {expected} for tau={tau}")]
    ContactCount {
        member: usize,
        tau: usize,
        expected: String,
        found: usize,
    },
    #[error("type-I member {member} has tau={tau}, expected 1")]
    TypeITau { member: usize, tau: usize },
    #[error("type-II member {member} has tau=0")]
    TypeIITauZero { member: usize },
    #[error("type-II members {a} and {b} are adjacent")]
    TypeIIAdjacent { a: usize, b: usize },
    #[error("witness has {blocks} blocks but valence {valence} needs at least {}", valence + 2)]
    GapTooSmall { blocks: usize, valence: usize },
}

/// Cut rejected by [`verify_elementary`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementaryRejection {
    pub components: usize,
    pub gap: isize,
}

/// Accepts `cut` as an elementary cutset when removing it leaves at least
/// `|cut| + 2` components.
pub fn verify_elementary(g: &Graph, cut: VertexSet) -> Result<CutsetCertificate, ElementaryRejection> {
    let witness = g.components_after_removal(cut);
    let gap = witness.len() as isize - cut.len() as isize;
    if gap < 2 || !cut.is_subset(&g.vertices()) {
        return Err(ElementaryRejection {
            components: witness.len(),
            gap,
        });
    }
    let members = cut
        .iter()
        .map(|v| Member {
            vertices: VertexSet::singleton(v),
            kind: MemberKind::TypeI,
            tau: 1,
            contacts: Vec::new(),
        })
        .collect();
    Ok(CutsetCertificate {
        members,
        witness,
        valence: cut.len(),
        gap: gap as usize,
    })
}

/// Checks every clause of the generalized cutset definition and returns
/// either the certificate or the full list of violations.
pub fn verify_generalized(
    g: &Graph,
    members: &[(VertexSet, usize)],
    witness: &[VertexSet],
) -> Result<CutsetCertificate, Vec<Violation>> {
    check(g, members, witness, false)
}

/// As [`verify_generalized`], but type-II members may be disconnected and
/// may have `2 tau` instead of `2 tau + 1` contact blocks.
pub fn verify_relaxed(
    g: &Graph,
    members: &[(VertexSet, usize)],
    witness: &[VertexSet],
) -> Result<CutsetCertificate, Vec<Violation>> {
    check(g, members, witness, true)
}

fn check(
    g: &Graph,
    members: &[(VertexSet, usize)],
    witness: &[VertexSet],
    relaxed: bool,
) -> Result<CutsetCertificate, Vec<Violation>> {
    let full = g.vertices();
    let mut out = Vec::new();
    for s in members.iter().map(|m| &m.0).chain(witness) {
        if let Some(vertex) = (*s - full).first() {
            out.push(Violation::VertexOutOfRange { vertex });
        }
    }
    if !out.is_empty() {
        return Err(out);
    }

    for (i, &(m, _)) in members.iter().enumerate() {
        if m.is_empty() {
            out.push(Violation::EmptyMember { member: i });
        }
        for (j, &(other, _)) in members.iter().enumerate().skip(i + 1) {
            if m.intersects(&other) {
                out.push(Violation::MembersOverlap { a: i, b: j });
            }
        }
        if !relaxed && m.len() > 1 && !g.is_connected_subset(m) {
            out.push(Violation::DisconnectedMember { member: i });
        }
    }

    let cut = members.iter().fold(VertexSet::new(), |a, m| a | m.0);
    let mut covered = cut;
    for (j, &b) in witness.iter().enumerate() {
        if b.is_empty() {
            out.push(Violation::EmptyBlock { block: j });
        }
        if b.intersects(&cut) {
            out.push(Violation::BlockMeetsCutset { block: j });
        }
        for (k, other) in witness.iter().enumerate().skip(j + 1) {
            if b.intersects(other) {
                out.push(Violation::BlocksOverlap { a: j, b: k });
            }
        }
        covered |= b;
    }
    if covered != full {
        out.push(Violation::Uncovered {
            vertices: full - covered,
        });
    }
    let block_nbrs: Vec<VertexSet> = witness.iter().map(|&b| g.neighborhood(b)).collect();
    for (j, nbrs) in block_nbrs.iter().enumerate() {
        for (k, b) in witness.iter().enumerate().skip(j + 1) {
            if nbrs.intersects(b) {
                out.push(Violation::BlocksAdjacent { a: j, b: k });
            }
        }
    }

    let mut built = Vec::with_capacity(members.len());
    for (i, &(m, tau)) in members.iter().enumerate() {
        if m.len() <= 1 {
            if tau != 1 {
                out.push(Violation::TypeITau { member: i, tau });
            }
            built.push(Member {
                vertices: m,
                kind: MemberKind::TypeI,
                tau,
                contacts: Vec::new(),
            });
            continue;
        }
        let mut contacts = Vec::new();
        let mut bearing = 0;
        let mut used = VertexSet::new();
        for (j, nb) in block_nbrs.iter().enumerate() {
            let cs = m & *nb;
            if cs.is_empty() {
                continue;
            }
            bearing += 1;
            if cs.len() > 1 {
                out.push(Violation::MultipleContacts {
                    member: i,
                    block: j,
                    vertices: cs,
                });
                continue;
            }
            let vertex = cs.first().expect("nonempty");
            if !used.insert(vertex) {
                out.push(Violation::SharedContactVertex { member: i, vertex });
            }
            contacts.push(Contact { block: j, vertex });
        }
        if tau == 0 {
            out.push(Violation::TypeIITauZero { member: i });
        } else {
            let ok = bearing == 2 * tau + 1 || (relaxed && bearing == 2 * tau);
            if !ok {
                let expected = if relaxed {
                    format!("{} or {}", 2 * tau, 2 * tau + 1)
                } else {
                    (2 * tau + 1).to_string()
                };
                out.push(Violation::ContactCount {
                    member: i,
                    tau,
                    expected,
                    found: bearing,
                });
            }
        }
        built.push(Member {
            vertices: m,
            kind: MemberKind::TypeII,
            tau,
            contacts,
        });
    }

    let type_ii: Vec<usize> = (0..members.len()).filter(|&i| members[i].0.len() > 1).collect();
    for (x, &i) in type_ii.iter().enumerate() {
        let nb = g.neighborhood(members[i].0);
        for &j in &type_ii[x + 1..] {
            if nb.intersects(&members[j].0) {
                out.push(Violation::TypeIIAdjacent { a: i, b: j });
            }
        }
    }

    let valence: usize = members.iter().map(|m| m.1).sum();
    if witness.len() < valence + 2 {
        out.push(Violation::GapTooSmall {
            blocks: witness.len(),
            valence,
        });
    }

    if out.is_empty() {
        Ok(CutsetCertificate {
            members: built,
            witness: witness.to_vec(),
            valence,
            gap: witness.len() - valence,
        })
    } else {
        Err(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture_graph;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn singletons(g: &Graph, labels: &[&str]) -> Vec<VertexSet> {
        labels.iter().map(|l| g.set_of(&[l])).collect()
    }

    #[test]
    fn elementary_graph_iv() {
        let g = fixture_graph("graph_iv").unwrap();
        let c = verify_elementary(&g, g.set_of(&["a", "b"])).unwrap();
        assert_eq!((c.valence, c.gap), (2, 2));
        let mut w = c.witness.clone();
        w.sort();
        let mut expect = singletons(&g, &["e", "c", "d", "f"]);
        expect.sort();
        assert_eq!(w, expect);
    }

    #[test]
    fn elementary_star_and_path() {
        let g = fixture_graph("star_5").unwrap();
        let c = verify_elementary(&g, VertexSet::singleton(0)).unwrap();
        assert_eq!((c.valence, c.gap), (1, 4));
        let r = verify_elementary(&path(4), VertexSet::singleton(1)).unwrap_err();
        assert_eq!(r.gap, 1);
    }

    #[test]
    fn generalized_graph_v() {
        let g = fixture_graph("graph_v").unwrap();
        let members = [(g.set_of(&["f"]), 1), (g.set_of(&["c", "d", "e"]), 1)];
        let witness = singletons(&g, &["u1", "u2", "u3", "u4"]);
        let c = verify_generalized(&g, &members, &witness).unwrap();
        assert_eq!((c.valence, c.gap), (2, 2));
        assert!(c.is_tame());
        assert_eq!(c.members[1].contact_vertices(), g.set_of(&["c", "d", "e"]));
    }

    #[test]
    fn generalized_graph_vii() {
        let g = fixture_graph("graph_vii").unwrap();
        let members = [(g.set_of(&["a"]), 1), (g.set_of(&["b", "c", "d", "e", "f"]), 2)];
        let witness = singletons(&g, &["sb", "sc", "sd", "se", "sf"]);
        let c = verify_generalized(&g, &members, &witness).unwrap();
        assert_eq!((c.valence, c.gap), (3, 2));
    }

    #[test]
    fn graph_vi_bad_witness() {
        let g = fixture_graph("graph_vi").unwrap();
        let members = [(g.set_of(&["g", "h", "j"]), 1), (g.set_of(&["k", "m", "n"]), 1)];
        let witness = [g.set_of(&["a", "c"]), g.set_of(&["b"]), g.set_of(&["d"])];
        let v = verify_generalized(&g, &members, &witness).unwrap_err();
        assert!(v.iter().any(|x| matches!(x, Violation::MultipleContacts { member: 0, block: 0, .. })));
        assert!(v.iter().any(|x| matches!(x, Violation::ContactCount { .. })));
        assert!(v.contains(&Violation::GapTooSmall { blocks: 3, valence: 2 }));

        let good = singletons(&g, &["a", "b", "c", "d"]);
        let c = verify_generalized(&g, &members, &good).unwrap();
        assert_eq!((c.valence, c.gap), (2, 2));
        assert!(!c.is_tame());
    }

    #[test]
    fn structural_violations() {
        let g = path(5);
        let s = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        let v = verify_generalized(&g, &[(s(&[1]), 2), (s(&[1, 3]), 1)], &[s(&[0, 2]), VertexSet::new()])
            .unwrap_err();
        assert!(v.contains(&Violation::TypeITau { member: 0, tau: 2 }));
        assert!(v.contains(&Violation::MembersOverlap { a: 0, b: 1 }));
        assert!(v.contains(&Violation::DisconnectedMember { member: 1 }));
        assert!(v.contains(&Violation::EmptyBlock { block: 1 }));
        assert!(v.contains(&Violation::Uncovered { vertices: s(&[4]) }));

        let v = verify_generalized(&g, &[(s(&[9]), 1)], &[]).unwrap_err();
        assert_eq!(v, vec![Violation::VertexOutOfRange { vertex: 9 }]);
    }

    #[test]
    fn relaxed_accepts_even_count() {
        // x=0 with leaves 1,2,3 and neighbor 4; member {4,5} touches leaves 6 and 7
        let g = Graph::new(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (5, 7)]).unwrap();
        let m = [(VertexSet::singleton(0), 1), (VertexSet::from_iter([4, 5]), 1)];
        let w: Vec<_> = [1, 2, 3, 6, 7].into_iter().map(VertexSet::singleton).collect();
        let strict = verify_generalized(&g, &m, &w).unwrap_err();
        assert_eq!(
            strict,
            vec![Violation::ContactCount {
                member: 1,
                tau: 1,
                expected: "3".into(),
                found: 2
            }]
        );
        let c = verify_relaxed(&g, &m, &w).unwrap();
        assert_eq!((c.valence, c.gap), (2, 3));
    }
}
