//! Library side of the `arcsemi` command: the analysis document and the
//! helpers behind each subcommand.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use arcsemi::classifier::{classify, PropertyReport};
use arcsemi::cycle_length::{decide_l_leq_k, l_of_with_cap, small_threshold, DecisionStep};
use arcsemi::graph::blocks::blocks;
use arcsemi::graph::components::{
    closure, condensation_and_terminals, is_acyclic, is_connected_ignoring_isolated,
    strong_components, weak_components,
};
use arcsemi::graph::families;
use arcsemi::oracle::{generate_with_cap, probe, ElementCap, OracleReport};
use arcsemi::verify::{compare_reports, Disagreement};
use arcsemi::{Digraph, Error, Graph, Result};
use serde::{Deserialize, Serialize};

/// Everything `arcsemi analyze` reports about one digraph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub input: Digraph,
    /// Arcs the closure adds to the input.
    pub closure_added: Vec<(usize, usize)>,
    pub components: ComponentSummary,
    pub classifier: PropertyReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
    /// Set when the classifier and a completed oracle run disagree.
    pub disagreement: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub disagreements: Vec<Disagreement>,
    /// Absent for digraphs without arcs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<LSection>,
    /// Wall-clock milliseconds per phase.
    pub timings_ms: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSummary {
    pub strong: Vec<Vec<usize>>,
    pub weak: Vec<Vec<usize>>,
    /// Strong components with no arc leaving them.
    pub terminals: Vec<Vec<usize>>,
    pub acyclic: bool,
    /// At most one weak component carries arcs.
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OracleSection {
    Complete { size: usize, report: OracleReport },
    /// Enumeration stopped at the element cap; no oracle verdicts exist.
    Aborted { cap: usize, partial: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<usize>,
    pub lower_bound: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn symmetric_parts(d: &Digraph) -> Vec<Graph> {
    let closed = closure(d);
    strong_components(&closed)
        .parts()
        .iter()
        .filter(|p| p.len() > 1)
        .map(|p| Graph::try_from_digraph(closed.induced(p)).expect("closed strong components are symmetric"))
        .collect()
}

/// A lower bound on `l(D)` from degrees and block sizes of the closure's
/// strong components.
pub fn l_lower_bound(d: &Digraph) -> usize {
    symmetric_parts(d)
        .iter()
        .map(|g| {
            let degree = g.max_degree().saturating_sub(1);
            let block = blocks(g).max_block_size().saturating_sub(2);
            degree.max(block)
        })
        .fold(1, usize::max)
}

fn l_section(d: &Digraph, cap: ElementCap) -> LSection {
    let lower_bound = l_lower_bound(d);
    match l_of_with_cap(d, cap) {
        Ok(l) => LSection {
            exact: Some(l),
            lower_bound: l,
            note: None,
        },
        Err(e) => LSection {
            exact: None,
            lower_bound,
            note: Some(e.to_string()),
        },
    }
}

/// Runs the classifier, and the oracle when `with_oracle` is set.
pub fn analyze(d: &Digraph, with_oracle: bool, cap: ElementCap) -> AnalysisDocument {
    let mut timings_ms = BTreeMap::new();

    let start = Instant::now();
    let closed = closure(d);
    let closure_added = closed
        .arcs()
        .iter()
        .copied()
        .filter(|&(u, v)| !d.has_arc(u, v))
        .collect();
    let condensation = condensation_and_terminals(d);
    let components = ComponentSummary {
        strong: condensation.components.parts().to_vec(),
        weak: weak_components(d).parts().to_vec(),
        terminals: condensation.terminals.clone(),
        acyclic: is_acyclic(d),
        connected: is_connected_ignoring_isolated(d),
    };
    timings_ms.insert("structure".to_string(), millis(start.elapsed()));

    let start = Instant::now();
    let classifier = classify(d);
    timings_ms.insert("classifier".to_string(), millis(start.elapsed()));

    let mut oracle = None;
    let mut disagreements = Vec::new();
    if with_oracle && d.arc_count() > 0 {
        let start = Instant::now();
        oracle = Some(match generate_with_cap(d, cap) {
            Ok(s) => {
                let report = probe(&s);
                disagreements = compare_reports(d, &classifier, &report);
                OracleSection::Complete {
                    size: s.len(),
                    report,
                }
            }
            Err(Error::ElementCap { cap, partial }) => OracleSection::Aborted { cap, partial },
            Err(e) => unreachable!("generate failed on a parsed digraph: {e}"),
        });
        timings_ms.insert("oracle".to_string(), millis(start.elapsed()));
    }

    let l = (d.arc_count() > 0).then(|| {
        let start = Instant::now();
        let section = l_section(d, cap);
        timings_ms.insert("l".to_string(), millis(start.elapsed()));
        section
    });

    AnalysisDocument {
        input: d.clone(),
        closure_added,
        components,
        classifier,
        oracle,
        disagreement: !disagreements.is_empty(),
        disagreements,
        l,
        timings_ms,
    }
}

/// Graph families with an unbounded size parameter, as used by `bench`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchFamily {
    Q,
    R,
    Path,
    /// `K_3 ⊕_q K_3` on `n` vertices.
    Oplus,
}

impl BenchFamily {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q" | "qn" => Ok(BenchFamily::Q),
            "r" | "rn" => Ok(BenchFamily::R),
            "p" | "pn" | "path" => Ok(BenchFamily::Path),
            "oplus" => Ok(BenchFamily::Oplus),
            _ => Err(Error::InvalidParameters(format!(
                "unknown bench family {s:?}; expected q, r, path or oplus"
            ))),
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            BenchFamily::Q | BenchFamily::Path => 3,
            BenchFamily::R => 4,
            BenchFamily::Oplus => 7,
        }
    }

    pub fn build(self, n: usize) -> Result<Graph> {
        if n < self.min_n() {
            return Err(Error::InvalidParameters(format!(
                "{self:?} needs n >= {}, got {n}",
                self.min_n()
            )));
        }
        Ok(match self {
            BenchFamily::Q => families::q_graph(n),
            BenchFamily::R => families::r_graph(n),
            BenchFamily::Path => families::path(n),
            BenchFamily::Oplus => {
                let k3 = families::complete(3);
                families::oplus(&k3, 1, n - 6, &k3, 1)?.graph
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub verdict: bool,
    pub path_taken: DecisionStep,
    /// `n` is at most the exact-evaluation threshold for `k`.
    pub below_threshold: bool,
    pub flagged: bool,
    /// Fastest of the repetitions, in milliseconds.
    pub time_ms: f64,
    pub ns_per_vertex: f64,
}

/// Times `decide_l_leq_k` on `family` at each size.
pub fn bench(family: BenchFamily, sizes: &[usize], k: usize, reps: usize) -> Result<Vec<BenchRow>> {
    sizes
        .iter()
        .map(|&n| {
            let g = family.build(n)?;
            let mut best = Duration::MAX;
            let mut decision = None;
            for _ in 0..reps.max(1) {
                let start = Instant::now();
                let d = decide_l_leq_k(&g, k)?;
                best = best.min(start.elapsed());
                decision = Some(d);
            }
            let d = decision.expect("at least one repetition");
            Ok(BenchRow {
                n,
                verdict: d.verdict,
                path_taken: d.path_taken,
                below_threshold: n <= small_threshold(k),
                flagged: d.flagged,
                time_ms: millis(best),
                ns_per_vertex: best.as_secs_f64() * 1e9 / n as f64,
            })
        })
        .collect()
}

/// Named graphs and families `gen` can emit. `params` are the numeric
/// arguments after the family name.
pub fn generate_family(name: &str, params: &[usize]) -> Result<Digraph> {
    let need = |count: usize| -> Result<&[usize]> {
        if params.len() == count {
            Ok(params)
        } else {
            Err(Error::InvalidParameters(format!(
                "{name} takes {count} numeric argument(s), got {}",
                params.len()
            )))
        }
    };
    let at_least = |n: usize, min: usize| -> Result<usize> {
        if n >= min {
            Ok(n)
        } else {
            Err(Error::InvalidParameters(format!("{name} needs n >= {min}, got {n}")))
        }
    };
    let pick = |index: usize, len: usize| -> Result<usize> {
        if (1..=len).contains(&index) {
            Ok(index - 1)
        } else {
            Err(Error::InvalidParameters(format!("{name} index must be in 1..={len}")))
        }
    };
    Ok(match name.to_ascii_lowercase().as_str() {
        "path" | "p" => families::path(at_least(need(1)?[0], 1)?).into(),
        "cycle" | "c" => families::cycle(at_least(need(1)?[0], 3)?).into(),
        "complete" | "k" => families::complete(at_least(need(1)?[0], 1)?).into(),
        "star" => families::star(at_least(need(1)?[0], 1)?).into(),
        "kbip" | "complete-bipartite" => {
            let p = need(2)?;
            families::complete_bipartite(at_least(p[0], 1)?, at_least(p[1], 1)?).into()
        }
        "q" => families::q_graph(at_least(need(1)?[0], 3)?).into(),
        "r" => families::r_graph(at_least(need(1)?[0], 4)?).into(),
        "fan" => families::fan(at_least(need(1)?[0], 2)?),
        "oneway-path" => families::oneway_path(at_least(need(1)?[0], 2)?),
        "oplus" => BenchFamily::Oplus.build(need(1)?[0])?.into(),
        "bull" => {
            need(0)?;
            families::bull().into()
        }
        "e-graph" => {
            need(0)?;
            families::e_graph().into()
        }
        "theta0" => {
            need(0)?;
            families::theta0().into()
        }
        "zero-simple" => {
            let all = families::zero_simple_catalog();
            all[pick(need(1)?[0], all.len())?].clone()
        }
        "congruence-free" => {
            let all = families::congruence_free_catalog();
            all[pick(need(1)?[0], all.len())?].clone()
        }
        _ => {
            return Err(Error::InvalidParameters(format!(
                "unknown family {name:?}; try one of {}",
                GEN_FAMILIES.join(", ")
            )))
        }
    })
}

pub const GEN_FAMILIES: [&str; 15] = [
    "path",
    "cycle",
    "complete",
    "star",
    "kbip",
    "q",
    "r",
    "fan",
    "oneway-path",
    "oplus",
    "bull",
    "e-graph",
    "theta0",
    "zero-simple",
    "congruence-free",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fan_document_agrees() {
        let doc = analyze(&families::fan(5), true, ElementCap(ElementCap::DEFAULT));
        assert!(!doc.disagreement);
        match doc.oracle {
            Some(OracleSection::Complete { size, .. }) => assert_eq!(size, 15),
            other => panic!("unexpected oracle section {other:?}"),
        }
        assert_eq!(doc.l.unwrap().exact, Some(1));
    }

    #[test]
    fn aborted_oracle_is_distinguished() {
        let doc = analyze(&families::cycle(5).into(), true, ElementCap(10));
        assert!(matches!(doc.oracle, Some(OracleSection::Aborted { cap: 10, .. })));
        assert!(!doc.disagreement);
        let l = doc.l.unwrap();
        assert_eq!(l.exact, Some(4));
    }

    #[test]
    fn every_family_builds() {
        for name in GEN_FAMILIES {
            let params: &[usize] = match name {
                "bull" | "e-graph" | "theta0" => &[],
                "kbip" => &[2, 3],
                "zero-simple" | "congruence-free" => &[1],
                _ => &[8],
            };
            generate_family(name, params).unwrap();
        }
    }

    #[test]
    fn bench_rows_report_steps() {
        let rows = bench(BenchFamily::Q, &[20, 500], 3, 1).unwrap();
        assert!(rows[0].below_threshold);
        assert_eq!(rows[0].path_taken, DecisionStep::Brute);
        assert!(!rows[1].below_threshold);
        assert!(rows.iter().all(|r| r.verdict));
    }
}
