//! Elementary and generalized cutsets: certificates, verification, search
//! and normalization of relaxed certificates.

mod normalize;
mod search;
mod verify;

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use normalize::{normalize_relaxed, NormalizeError, NormalizeStep};
pub use search::{search_elementary, search_generalized, Keep, SearchOptions, SearchReport};
pub use verify::{verify_elementary, verify_generalized, verify_relaxed, ElementaryRejection, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MemberKind {
    TypeI,
    TypeII,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contact {
    pub block: usize,
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Member {
    pub vertices: VertexSet,
    pub kind: MemberKind,
    pub tau: usize,
    /// Contact vertex per witness block, sorted by block. Empty for type-I
    /// members.
    pub contacts: Vec<Contact>,
}

impl Member {
    pub fn contact_vertices(&self) -> VertexSet {
        self.contacts.iter().map(|c| c.vertex).collect()
    }

    pub fn is_type_ii(&self) -> bool {
        self.kind == MemberKind::TypeII
    }
}

/// A verified cutset: members, pass-through numbers and witness partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutsetCertificate {
    pub members: Vec<Member>,
    pub witness: Vec<VertexSet>,
    pub valence: usize,
    pub gap: usize,
}

impl CutsetCertificate {
    /// At most one type-II member.
    pub fn is_tame(&self) -> bool {
        self.members.iter().filter(|m| m.is_type_ii()).count() <= 1
    }

    pub fn is_elementary(&self) -> bool {
        self.members.iter().all(|m| m.kind == MemberKind::TypeI)
    }

    /// The agent counts this certificate blocks: `valence < n < valence + gap`.
    pub fn critical_interval(&self) -> RangeInclusive<usize> {
        critical_interval(self.valence, self.gap)
    }

    pub fn blocks(&self, n: usize) -> bool {
        self.critical_interval().contains(&n)
    }

    /// Union of all members.
    pub fn cut(&self) -> VertexSet {
        self.members.iter().fold(VertexSet::new(), |a, m| a | m.vertices)
    }

    /// Minimum vertex of every witness block.
    pub fn distinguished(&self) -> VertexSet {
        self.witness.iter().filter_map(|b| b.first()).collect()
    }

    /// The `(members, witness)` pair accepted by the verifiers.
    pub fn as_input(&self) -> CertificateInput {
        CertificateInput {
            members: self
                .members
                .iter()
                .map(|m| MemberInput {
                    vertices: m.vertices,
                    tau: Some(m.tau),
                })
                .collect(),
            witness: self.witness.clone(),
        }
    }

    /// Sorts members lexicographically and witness blocks by minimum
    /// vertex, remapping contact block indices.
    pub fn canonicalize(&mut self) {
        let mut order: Vec<usize> = (0..self.witness.len()).collect();
        order.sort_by_key(|&i| self.witness[i]);
        let mut remap = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        self.witness = order.iter().map(|&i| self.witness[i]).collect();
        for m in &mut self.members {
            for c in &mut m.contacts {
                c.block = remap[c.block];
            }
            m.contacts.sort_by_key(|c| c.block);
        }
        self.members.sort_by_key(|a| a.vertices);
    }

    /// Canonical order: valence ascending, gap descending, then members.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.valence
            .cmp(&other.valence)
            .then(other.gap.cmp(&self.gap))
            .then_with(|| {
                let a = self.members.iter().map(|m| m.vertices);
                let b = other.members.iter().map(|m| m.vertices);
                a.cmp(b)
            })
            .then_with(|| self.witness.cmp(&other.witness))
    }

    pub fn describe(&self, g: &Graph) -> String {
        let members: Vec<String> = self
            .members
            .iter()
            .map(|m| match m.kind {
                MemberKind::TypeI => g.format_set(m.vertices),
                MemberKind::TypeII => format!("{}[tau={}]", g.format_set(m.vertices), m.tau),
            })
            .collect();
        let witness: Vec<String> = self.witness.iter().map(|b| g.format_set(*b)).collect();
        format!(
            "valence {} gap {}{} members {} witness {}",
            self.valence,
            self.gap,
            if self.is_tame() { " tame" } else { "" },
            members.join(" "),
            witness.join(" ")
        )
    }
}

impl fmt::Display for CutsetCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.members.iter().map(|m| m.vertices.to_string()).collect();
        write!(
            f,
            "valence={} gap={} members=[{}]",
            self.valence,
            self.gap,
            members.join(",")
        )
    }
}

impl Serialize for CutsetCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Shape<'a> {
            members: &'a [Member],
            witness: &'a [VertexSet],
            valence: usize,
            gap: usize,
            tame: bool,
            critical_interval: [usize; 2],
        }
        let ci = self.critical_interval();
        Shape {
            members: &self.members,
            witness: &self.witness,
            valence: self.valence,
            gap: self.gap,
            tame: self.is_tame(),
            critical_interval: [*ci.start(), *ci.end()],
        }
        .serialize(s)
    }
}

/// Unverified certificate as read from JSON. The serialized form of a
/// [`CutsetCertificate`] parses as this type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateInput {
    pub members: Vec<MemberInput>,
    pub witness: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberInput {
    pub vertices: VertexSet,
    /// Derived from the contact count when absent.
    #[serde(default)]
    pub tau: Option<usize>,
}

impl CertificateInput {
    pub fn new(members: &[(VertexSet, usize)], witness: &[VertexSet]) -> Self {
        CertificateInput {
            members: members
                .iter()
                .map(|&(vertices, tau)| MemberInput {
                    vertices,
                    tau: Some(tau),
                })
                .collect(),
            witness: witness.to_vec(),
        }
    }

    /// Fills in missing pass-through numbers: 1 for singletons, otherwise
    /// `floor(contacts / 2)`.
    pub fn resolve_taus(&self, g: &Graph) -> Vec<(VertexSet, usize)> {
        self.members
            .iter()
            .map(|m| {
                let tau = m.tau.unwrap_or_else(|| {
                    if m.vertices.len() == 1 {
                        1
                    } else {
                        contact_blocks(g, m.vertices, &self.witness) / 2
                    }
                });
                (m.vertices, tau)
            })
            .collect()
    }
}

fn contact_blocks(g: &Graph, member: VertexSet, witness: &[VertexSet]) -> usize {
    let n = g.neighborhood(member);
    witness.iter().filter(|b| b.intersects(&n)).count()
}

pub fn critical_interval(valence: usize, gap: usize) -> RangeInclusive<usize> {
    valence + 1..=valence + gap.max(1) - 1
}

/// Verifies a cutset given as serialized input, deriving missing taus.
pub fn verify_input(
    g: &Graph,
    input: &CertificateInput,
) -> Result<CutsetCertificate, Vec<Violation>> {
    let members = input.resolve_taus(g);
    verify_generalized(g, &members, &input.witness)
}
