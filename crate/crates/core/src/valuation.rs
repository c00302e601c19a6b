//! Exact valuations over vertex sets.
//!
//! Two families are supported: additive weight vectors (common additive,
//! "CA") and the cutset-monotone valuation ("CM") that counts distinguished
//! vertices plus dominated cutset members. Both are defined on every vertex
//! subset, connected or not, because EF1 evaluates `A_j \ {x}`.

use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cutset::{CutsetCertificate, Member, MemberKind};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use crate::fixtures::fixture_valuation;

pub type Rational = num_rational::Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValuationError {
    #[error("weight {weight} at vertex {vertex} is negative")]
    Negative { vertex: usize, weight: String },
    #[error("cannot parse rational `{0}`")]
    BadRational(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cutset is not tame ({type_ii} type-II members)")]
    NotTame { type_ii: usize },
    #[error("{found} weights given for {expected} vertices")]
    Length { expected: usize, found: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Valuation {
    Additive(Vec<Rational>),
    CutsetMonotone {
        distinguished: VertexSet,
        cutset: CutsetCertificate,
    },
}

impl Valuation {
    pub fn additive(weights: Vec<Rational>) -> Result<Self, ValuationError> {
        if let Some((vertex, w)) = weights.iter().enumerate().find(|(_, w)| w.is_negative()) {
            return Err(ValuationError::Negative {
                vertex,
                weight: format_rational(w),
            });
        }
        Ok(Valuation::Additive(weights))
    }

    pub fn unit(n: usize) -> Self {
        Valuation::Additive(vec![Rational::from_integer(1); n])
    }

    /// Weight of a single vertex for additive valuations.
    pub fn weight(&self, v: usize) -> Option<Rational> {
        match self {
            Valuation::Additive(w) => w.get(v).copied(),
            Valuation::CutsetMonotone { .. } => None,
        }
    }

    pub fn weights(&self) -> Option<&[Rational]> {
        match self {
            Valuation::Additive(w) => Some(w),
            Valuation::CutsetMonotone { .. } => None,
        }
    }

    pub fn is_additive(&self) -> bool {
        matches!(self, Valuation::Additive(_))
    }

    pub fn evaluate(&self, s: VertexSet) -> Rational {
        match self {
            Valuation::Additive(w) => s.iter().map(|v| w.get(v).copied().unwrap_or_default()).sum(),
            Valuation::CutsetMonotone {
                distinguished,
                cutset,
            } => {
                let dominated = cutset.members.iter().filter(|m| dominates(s, m)).count();
                Rational::from_integer(((s & *distinguished).len() + dominated) as i64)
            }
        }
    }
}

/// `s` contains a type-I member's vertex, or two or more contact vertices
/// of a type-II member.
pub fn dominates(s: VertexSet, m: &Member) -> bool {
    match m.kind {
        MemberKind::TypeI => s.intersects(&m.vertices),
        MemberKind::TypeII => (s & m.contact_vertices()).len() >= 2,
    }
}

/// Additive blocking valuation for a tame cutset: 1 on distinguished
/// vertices and type-I members, 1/3 on the contacts of the type-II member.
pub fn blocking_valuation_tame(g: &Graph, cert: &CutsetCertificate) -> Result<Valuation, ValuationError> {
    let type_ii = cert.members.iter().filter(|m| m.is_type_ii()).count();
    if type_ii > 1 {
        return Err(ValuationError::NotTame { type_ii });
    }
    let mut w = vec![Rational::zero(); g.vertex_count()];
    for v in cert.distinguished() {
        w[v] = Rational::from_integer(1);
    }
    for m in &cert.members {
        match m.kind {
            MemberKind::TypeI => {
                for v in m.vertices {
                    w[v] = Rational::from_integer(1);
                }
            }
            MemberKind::TypeII => {
                for v in m.contact_vertices() {
                    w[v] = Rational::new(1, 3);
                }
            }
        }
    }
    Ok(Valuation::Additive(w))
}

/// Cutset-monotone blocking valuation; valid for any cutset.
pub fn blocking_valuation_cm(cert: &CutsetCertificate) -> Valuation {
    Valuation::CutsetMonotone {
        distinguished: cert.distinguished(),
        cutset: cert.clone(),
    }
}

/// Parses `p/q`, `p`, or a finite decimal such as `0.25`.
pub fn parse_rational(text: &str) -> Result<Rational, ValuationError> {
    let t = text.trim();
    let bad = || ValuationError::BadRational(text.to_string());
    if let Some((p, q)) = t.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 15 {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let int: i64 = if int.is_empty() || int == "-" { 0 } else { int.parse().map_err(|_| bad())? };
        let den = 10i64.pow(frac.len() as u32);
        let f: i64 = frac.parse().map_err(|_| bad())?;
        let num = int.abs().checked_mul(den).and_then(|x| x.checked_add(f)).ok_or_else(bad)?;
        return Ok(Rational::new(if neg { -num } else { num }, den));
    }
    t.parse::<i64>().map(Rational::from_integer).map_err(|_| bad())
}

pub fn format_rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses a weight file: lines `vertex p/q` with the vertex given by label
/// or index. Unlisted vertices weigh 0.
pub fn parse_weights(g: &Graph, text: &str) -> Result<Valuation, ValuationError> {
    let mut w = vec![Rational::zero(); g.vertex_count()];
    for (line, l) in numbered_lines(text) {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(ValuationError::Parse {
                line,
                msg: format!("expected `vertex p/q`, got `{l}`"),
            });
        }
        let v = g.resolve_vertex(parts[0]).ok_or_else(|| ValuationError::Parse {
            line,
            msg: format!("unknown vertex `{}`", parts[0]),
        })?;
        w[v] = parse_rational(parts[1])?;
    }
    Valuation::additive(w)
}

/// Parses a profile file: lines `agent vertex p/q`. Agents are 0-based and
/// the profile has `agents` entries.
pub fn parse_profile(g: &Graph, agents: usize, text: &str) -> Result<Vec<Valuation>, ValuationError> {
    let mut ws = vec![vec![Rational::zero(); g.vertex_count()]; agents];
    for (line, l) in numbered_lines(text) {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let err = |msg: String| ValuationError::Parse { line, msg };
        if parts.len() != 3 {
            return Err(err(format!("expected `agent vertex p/q`, got `{l}`")));
        }
        let a: usize = parts[0]
            .parse()
            .ok()
            .filter(|&a| a < agents)
            .ok_or_else(|| err(format!("agent `{}` out of range", parts[0])))?;
        let v = g
            .resolve_vertex(parts[1])
            .ok_or_else(|| err(format!("unknown vertex `{}`", parts[1])))?;
        ws[a][v] = parse_rational(parts[2])?;
    }
    ws.into_iter().map(Valuation::additive).collect()
}

fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Serializable view: weights as `p/q` strings, or the CM structure.
#[derive(Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum ValuationView {
    Additive { weights: Vec<String> },
    CutsetMonotone { distinguished: VertexSet, cutset: CutsetCertificate },
}

impl From<&Valuation> for ValuationView {
    fn from(v: &Valuation) -> Self {
        match v {
            Valuation::Additive(w) => ValuationView::Additive {
                weights: w.iter().map(format_rational).collect(),
            },
            Valuation::CutsetMonotone {
                distinguished,
                cutset,
            } => ValuationView::CutsetMonotone {
                distinguished: *distinguished,
                cutset: cutset.clone(),
            },
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ValuationView::from(self).serialize(s)
    }
}
