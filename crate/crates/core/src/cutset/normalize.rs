use serde::Serialize;
use thiserror::Error;

use super::{verify_generalized, verify_relaxed, CutsetCertificate, Violation};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormalizeError {
    #[error("input is not a relaxed cutset: {}", join(.0))]
    InvalidInput(Vec<Violation>),
    #[error("normalization produced an invalid cutset: {}", join(.0))]
    Internal(Vec<Violation>),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// One rewrite applied by [`normalize_relaxed`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizeStep {
    pub case: u8,
    pub member: VertexSet,
    pub detail: String,
}

/// Rewrites a relaxed cutset (type-II members possibly disconnected or with
/// an even number of contacts) into one satisfying the full definition with
/// the same valence and at least as many witness blocks.
pub fn normalize_relaxed(
    g: &Graph,
    members: &[(VertexSet, usize)],
    witness: &[VertexSet],
) -> Result<(CutsetCertificate, Vec<NormalizeStep>), NormalizeError> {
    verify_relaxed(g, members, witness).map_err(NormalizeError::InvalidInput)?;
    let mut members = members.to_vec();
    let mut witness = witness.to_vec();
    let mut steps = Vec::new();
    while let Some(step) = rewrite_once(g, &mut members, &mut witness) {
        steps.push(step);
        debug_assert!(verify_relaxed(g, &members, &witness).is_ok());
    }
    let mut cert = verify_generalized(g, &members, &witness).map_err(NormalizeError::Internal)?;
    cert.canonicalize();
    Ok((cert, steps))
}

/// `(block, contact vertex)` pairs of a member in a valid relaxed cutset.
fn contacts_of(g: &Graph, m: VertexSet, witness: &[VertexSet]) -> Vec<(usize, usize)> {
    witness
        .iter()
        .enumerate()
        .filter_map(|(j, &b)| (m & g.neighborhood(b)).first().map(|v| (j, v)))
        .collect()
}

fn rewrite_once(
    g: &Graph,
    members: &mut Vec<(VertexSet, usize)>,
    witness: &mut Vec<VertexSet>,
) -> Option<NormalizeStep> {
    for i in 0..members.len() {
        let (m, tau) = members[i];
        if m.len() < 2 {
            continue;
        }
        let contacts = contacts_of(g, m, witness);
        let c = contacts.len();
        if c.is_multiple_of(2) && c >= 4 {
            let (_, s) = contacts.iter().copied().min_by_key(|&(_, v)| v).expect("contacts");
            members[i] = (m.without(s), tau - 1);
            members.push((VertexSet::singleton(s), 1));
            return Some(NormalizeStep {
                case: 1,
                member: m,
                detail: format!("split contact {s} off as a type-I member"),
            });
        }
        if c == 2 {
            let (sj, sk) = if contacts[0].1 < contacts[1].1 {
                (contacts[0], contacts[1])
            } else {
                (contacts[1], contacts[0])
            };
            let moved = m.without(sj.1);
            members[i] = (VertexSet::singleton(sj.1), 1);
            witness[sk.0] |= moved;
            return Some(NormalizeStep {
                case: 2,
                member: m,
                detail: format!("kept contact {} as type-I, moved {moved} into block {}", sj.1, sk.0),
            });
        }
        let comps = g.components_within(m);
        if comps.len() == 1 {
            continue;
        }
        let count = |d: &VertexSet| contacts.iter().filter(|(_, v)| d.contains(*v)).count();
        if let Some(d) = comps.iter().find(|d| count(d) == 0) {
            members[i] = (m - *d, tau);
            witness.push(*d);
            return Some(NormalizeStep {
                case: 3,
                member: m,
                detail: format!("moved contactless component {d} into the witness"),
            });
        }
        if let Some(d) = comps.iter().find(|d| count(d) == 1) {
            let (j, _) = contacts.iter().copied().find(|(_, v)| d.contains(*v)).expect("contact");
            members[i] = (m - *d, tau);
            witness[j] |= *d;
            return Some(NormalizeStep {
                case: 4,
                member: m,
                detail: format!("moved component {d} into block {j}"),
            });
        }
        let d = comps
            .iter()
            .find(|d| count(d) % 2 == 1)
            .copied()
            .expect("an odd total splits into at least one odd component");
        let cd = count(&d);
        members[i] = (d, (cd - 1) / 2);
        members.push((m - d, (c - cd) / 2));
        return Some(NormalizeStep {
            case: 5,
            member: m,
            detail: format!("split component {d} off as its own type-II member"),
        });
    }
    None
}
