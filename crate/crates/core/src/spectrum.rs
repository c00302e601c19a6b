//! Per-agent-count existence verdicts with checkable certificates.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::allocation::{find_ef1_allocation, Allocation};
use crate::budget::{Budget, Outcome};
use crate::cutset::{normalize_relaxed, search_generalized, verify_elementary, CutsetCertificate, SearchOptions};
use crate::graph::Graph;
use crate::obstruction::{find_bipolar_ordering, find_hamiltonian_path, find_trident, Trident, TridentKind};
use crate::picking::leaf_condition_holds;
use crate::valuation::{blocking_valuation_cm, blocking_valuation_tame, Rational, Valuation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ValueClass {
    /// Common additive valuations.
    CA,
    /// Common monotone valuations.
    CM,
}

impl FromStr for ValueClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "CA" => Ok(ValueClass::CA),
            "CM" => Ok(ValueClass::CM),
            _ => Err(format!("unknown valuation class {s:?} (expected CA or CM)")),
        }
    }
}

impl fmt::Display for ValueClass {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(match self {
            ValueClass::CA => "CA",
            ValueClass::CM => "CM",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PickingRule {
    /// `n >= |V| - 1`: sequential picking.
    AtLeastAllButOne,
    /// `n = |V| - 2` on a graph where no vertex is the sole neighbor of two
    /// others.
    AllButTwoLeafCondition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    SingleAgent,
    Traceable { path: Vec<usize> },
    Bipolar { order: Vec<usize> },
    PickingRegime { rule: PickingRule },
    CutsetBlock { cutset: CutsetCertificate, class: ValueClass },
    ExplicitCounterexample { valuation: Valuation },
}

impl Certificate {
    pub fn summary(&self, g: &Graph) -> String {
        let seq = |v: &[usize]| v.iter().map(|&x| g.label(x)).collect::<Vec<_>>().join("-");
        match self {
            Certificate::SingleAgent => "one agent takes the whole graph".into(),
            Certificate::Traceable { path } => format!("Hamiltonian path {}", seq(path)),
            Certificate::Bipolar { order } => format!("bipolar ordering {}", seq(order)),
            Certificate::PickingRegime {
                rule: PickingRule::AtLeastAllButOne,
            } => "picking with at least |V|-1 agents".into(),
            Certificate::PickingRegime {
                rule: PickingRule::AllButTwoLeafCondition,
            } => "two-phase picking with |V|-2 agents".into(),
            Certificate::CutsetBlock { cutset, class } => {
                format!("{class} blocking cutset {}", cutset.describe(g))
            }
            Certificate::ExplicitCounterexample { valuation } => match valuation.weights() {
                Some(w) => format!(
                    "counterexample weights ({})",
                    w.iter().map(crate::valuation::format_rational).collect::<Vec<_>>().join(",")
                ),
                None => "counterexample valuation".into(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub n: usize,
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub class: ValueClass,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumReport {
    pub fn verdicts(&self) -> Vec<Verdict> {
        self.entries.iter().map(|e| e.verdict).collect()
    }

    pub fn has_unknown(&self) -> bool {
        self.entries.iter().any(|e| e.verdict == Verdict::Unknown)
    }

    /// Compact form such as `<yes, no, no, YES, YES>`: the trailing run of
    /// yes entries after the last other verdict is capitalised.
    pub fn pattern(&self) -> String {
        let tail = self
            .entries
            .iter()
            .rposition(|e| e.verdict != Verdict::Yes)
            .map_or(0, |i| i + 1);
        let words: Vec<&str> = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| match e.verdict {
                Verdict::Yes if i >= tail => "YES",
                Verdict::Yes => "yes",
                Verdict::No => "no",
                Verdict::Unknown => "?",
            })
            .collect();
        format!("<{}>", words.join(", "))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("n={n}: both a yes and a no certificate were derived")]
    Inconsistent { n: usize },
}

#[derive(Clone, Debug, Default)]
pub struct SpectrumOptions {
    /// Budget for each individual search.
    pub budget: Budget,
    pub max_cut: Option<usize>,
    /// Candidate `(n, valuation)` counterexamples; each is accepted only if
    /// the oracle confirms it.
    pub counterexamples: Vec<(usize, Valuation)>,
}

/// Turns a trident into a cutset blocking two agents.
pub fn trident_cutset(g: &Graph, t: &Trident) -> CutsetCertificate {
    match t.kind {
        TridentKind::Type1 => verify_elementary(g, t.cut).expect("a type-1 trident is an elementary cutset"),
        TridentKind::Type2 => {
            normalize_relaxed(g, &[(t.cut, 1)], &t.components)
                .expect("a type-2 trident is a relaxed cutset")
                .0
        }
    }
}

pub fn compute_spectrum(
    g: &Graph,
    class: ValueClass,
    n_max: usize,
    options: &SpectrumOptions,
) -> Result<SpectrumReport, SpectrumError> {
    let nv = g.vertex_count();
    let budget = options.budget;
    let mut search = SearchOptions::default().budget(budget);
    if let Some(k) = options.max_cut {
        search = search.max_cut(k);
    }
    if class == ValueClass::CA {
        search = search.tame_only();
    }

    let ((ham, bipolar), (cutsets, trident)) = rayon::join(
        || rayon::join(|| find_hamiltonian_path(g, budget), || find_bipolar_ordering(g, budget)),
        || rayon::join(|| search_generalized(g, &search), || find_trident(g)),
    );
    let leaf_ok = leaf_condition_holds(g).is_ok();
    let counterexamples: Vec<(usize, Valuation)> = options
        .counterexamples
        .par_iter()
        .filter(|(n, v)| find_ef1_allocation(g, *n, v, false, *n >= nv, budget).is_not_found())
        .cloned()
        .collect();

    let mut entries = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let yes = if n == 1 {
            Some(Certificate::SingleAgent)
        } else if let Outcome::Found(path) = &ham {
            Some(Certificate::Traceable { path: path.clone() })
        } else if n + 1 >= nv {
            Some(Certificate::PickingRegime {
                rule: PickingRule::AtLeastAllButOne,
            })
        } else if n + 2 == nv && leaf_ok {
            Some(Certificate::PickingRegime {
                rule: PickingRule::AllButTwoLeafCondition,
            })
        } else if let (2, Outcome::Found(order)) = (n, &bipolar) {
            Some(Certificate::Bipolar { order: order.clone() })
        } else {
            None
        };

        let mut no = cutsets
            .certificates
            .iter()
            .find(|c| c.blocks(n))
            .map(|c| Certificate::CutsetBlock {
                cutset: c.clone(),
                class,
            });
        if no.is_none() && n == 2 {
            if let Outcome::Found(t) = &trident {
                no = Some(Certificate::CutsetBlock {
                    cutset: trident_cutset(g, t),
                    class,
                });
            }
        }
        if no.is_none() {
            no = counterexamples
                .iter()
                .find(|(m, _)| *m == n)
                .map(|(_, v)| Certificate::ExplicitCounterexample { valuation: v.clone() });
        }

        let entry = match (yes, no) {
            (Some(_), Some(_)) => return Err(SpectrumError::Inconsistent { n }),
            (Some(c), None) => SpectrumEntry {
                n,
                verdict: Verdict::Yes,
                certificate: Some(c),
            },
            (None, Some(c)) => SpectrumEntry {
                n,
                verdict: Verdict::No,
                certificate: Some(c),
            },
            (None, None) => SpectrumEntry {
                n,
                verdict: Verdict::Unknown,
                certificate: None,
            },
        };
        entries.push(entry);
    }
    Ok(SpectrumReport { class, entries })
}

/// Re-derives a no entry with the exhaustive oracle: `NotFound` confirms
/// it, `Found` refutes it.
pub fn replay_no_entry(g: &Graph, entry: &SpectrumEntry, budget: Budget) -> Option<Outcome<Allocation>> {
    let n = entry.n;
    let allow_empty = n >= g.vertex_count();
    let v = match entry.certificate.as_ref()? {
        Certificate::CutsetBlock {
            cutset,
            class: ValueClass::CA,
        } => blocking_valuation_tame(g, cutset).ok()?,
        Certificate::CutsetBlock {
            cutset,
            class: ValueClass::CM,
        } => blocking_valuation_cm(cutset),
        Certificate::ExplicitCounterexample { valuation } => valuation.clone(),
        _ => return None,
    };
    Some(find_ef1_allocation(g, n, &v, false, allow_empty, budget))
}

/// Tries every assignment of palette weights to the vertices, in
/// lexicographic order, and returns the first one under which no connected
/// EF1 allocation for `n` agents exists. `NotFound` only means the palette
/// has no such assignment.
pub fn search_ca_counterexample(
    g: &Graph,
    n: usize,
    palette: &[Rational],
    budget: Budget,
) -> Outcome<Valuation> {
    let nv = g.vertex_count();
    let k = palette.len() as u64;
    let Some(total) = k.checked_pow(nv as u32) else {
        return Outcome::BudgetExceeded;
    };
    if k == 0 {
        return Outcome::NotFound;
    }
    let meter = budget.meter();
    let decode = |mut code: u64| {
        let mut w = vec![palette[0]; nv];
        for slot in w.iter_mut().rev() {
            *slot = palette[(code % k) as usize];
            code /= k;
        }
        w
    };
    let hit = (0..total).into_par_iter().find_map_first(|code| {
        if !meter.charge(1) {
            return None;
        }
        let v = Valuation::additive(decode(code)).ok()?;
        match find_ef1_allocation(g, n, &v, false, n >= nv, Budget::UNLIMITED) {
            Outcome::NotFound => Some(v),
            _ => None,
        }
    });
    match hit {
        Some(v) => Outcome::Found(v),
        None if meter.exceeded() => Outcome::BudgetExceeded,
        None => Outcome::NotFound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture_graph, fixture_valuation};
    use Verdict::*;

    fn spectrum(name: &str, class: ValueClass, n_max: usize) -> SpectrumReport {
        let g = fixture_graph(name).unwrap();
        compute_spectrum(&g, class, n_max, &SpectrumOptions::default()).unwrap()
    }

    #[test]
    fn star_spectrum() {
        let s = spectrum("star_5", ValueClass::CA, 6);
        assert_eq!(s.verdicts(), vec![Yes, No, No, No, Yes, Yes]);
        assert_eq!(s.pattern(), "<yes, no, no, no, YES, YES>");
        for e in &s.entries[1..4] {
            let Some(Certificate::CutsetBlock { cutset, .. }) = &e.certificate else {
                panic!("expected a cutset")
            };
            assert_eq!((cutset.valence, cutset.gap), (1, 4));
        }
    }

    #[test]
    fn diamond_spectrum() {
        let s = spectrum("graph_iv", ValueClass::CA, 5);
        assert_eq!(s.verdicts(), vec![Yes, Yes, No, Yes, Yes]);
        assert!(matches!(s.entries[1].certificate, Some(Certificate::Bipolar { .. })));
        assert_eq!(s.pattern(), "<yes, yes, no, YES, YES>");
    }

    #[test]
    fn lstar_spectrum() {
        let s = spectrum("lstar", ValueClass::CA, 8);
        assert_eq!(s.verdicts(), vec![Yes, Yes, Unknown, No, Unknown, Yes, Yes, Yes]);
        let g = fixture_graph("lstar").unwrap();
        let Some(Certificate::CutsetBlock { cutset, .. }) = &s.entries[3].certificate else {
            panic!()
        };
        assert_eq!(cutset.cut(), g.set_of(&["a", "b", "c"]));
        assert_eq!((cutset.valence, cutset.gap), (3, 2));
    }

    #[test]
    fn traceable_is_all_yes() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        for class in [ValueClass::CA, ValueClass::CM] {
            let s = compute_spectrum(&g, class, 6, &SpectrumOptions::default()).unwrap();
            assert!(s.verdicts().iter().all(|&v| v == Yes));
        }
    }

    #[test]
    fn counterexamples_are_checked() {
        let (g, v, n) = fixture_valuation("jcs").unwrap();
        let plain = compute_spectrum(&g, ValueClass::CA, 4, &SpectrumOptions::default()).unwrap();
        assert_eq!(plain.entries[2].verdict, Unknown);
        let bad = Valuation::unit(g.vertex_count());
        let opts = SpectrumOptions {
            counterexamples: vec![(n, v), (2, bad)],
            ..Default::default()
        };
        let s = compute_spectrum(&g, ValueClass::CA, 4, &opts).unwrap();
        assert_eq!(s.entries[2].verdict, No);
        assert_eq!(s.entries[1].verdict, Yes);
        assert_eq!(replay_no_entry(&g, &s.entries[2], Budget::UNLIMITED), Some(Outcome::NotFound));
    }

    #[test]
    fn no_entries_replay() {
        for name in ["star_5", "graph_iv", "graph_ii", "lstar"] {
            let g = fixture_graph(name).unwrap();
            for class in [ValueClass::CA, ValueClass::CM] {
                let s = compute_spectrum(&g, class, g.vertex_count(), &SpectrumOptions::default()).unwrap();
                for e in s.entries.iter().filter(|e| e.verdict == No) {
                    assert_eq!(
                        replay_no_entry(&g, e, Budget::UNLIMITED),
                        Some(Outcome::NotFound),
                        "{name} {class} n={}",
                        e.n
                    );
                }
            }
        }
    }

    #[test]
    fn palette_search() {
        let g = fixture_graph("graph_iv").unwrap();
        let one = Rational::from_integer(1);
        assert_eq!(
            search_ca_counterexample(&g, 3, &[one], Budget::UNLIMITED),
            Outcome::Found(Valuation::unit(6))
        );
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let palette = [one, Rational::from_integer(2), Rational::from_integer(5)];
        assert_eq!(search_ca_counterexample(&p4, 2, &palette, Budget::UNLIMITED), Outcome::NotFound);
        assert_eq!(search_ca_counterexample(&p4, 2, &palette, Budget::nodes(3)), Outcome::BudgetExceeded);
    }

    #[test]
    fn jcs_palette_hit() {
        let g = fixture_graph("jcs").unwrap();
        let palette = [Rational::from_integer(2), Rational::from_integer(3)];
        let v = search_ca_counterexample(&g, 3, &palette, Budget::UNLIMITED).found().unwrap();
        assert_eq!(find_ef1_allocation(&g, 3, &v, false, false, Budget::UNLIMITED), Outcome::NotFound);
    }
}
