//! Cross-checks between the fast classifiers and the oracle.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classifier::{classify, Property, PropertyReport};
use crate::cycle_length::{decide_l_leq_k, l_of};
use crate::error::Result;
use crate::graph::enumerate::{connected_graphs_up_to_iso, labeled_digraphs, MAX_LABELED_N};
use crate::graph::{minor, Digraph, Graph};
use crate::oracle::{generate, l_brute, probe, OracleReport};

/// The oracle's answer for a property; `None` if it was not computed.
pub fn oracle_value(report: &OracleReport, p: Property) -> Option<bool> {
    Some(match p {
        Property::HTrivial => report.h_trivial,
        Property::RTrivial => report.r_trivial,
        Property::LTrivial => report.l_trivial,
        Property::JTrivial => report.j_trivial,
        Property::Aperiodic => report.aperiodic,
        Property::Band => report.band,
        Property::CompletelyRegular => report.completely_regular,
        Property::Inverse => report.inverse,
        Property::Commutative => report.commutative,
        Property::Semilattice => report.semilattice,
        Property::Regular => report.regular,
        Property::HasLeftZero => report.has_left_zero(),
        Property::HasRightZero => report.has_right_zero(),
        Property::HasZero => report.has_zero(),
        Property::LeftZeroSemigroup => report.left_zero_semigroup,
        Property::RightZeroSemigroup => report.right_zero_semigroup,
        Property::Simple => report.simple,
        Property::RectangularBand => report.rectangular_band,
        Property::ZeroSimple => report.zero_simple,
        Property::CongruenceFree => return report.congruence_free,
        Property::Trivial => report.trivial,
        Property::Group => report.group,
    })
}

/// A property on which the classifier and the oracle differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub digraph: Digraph,
    pub property: Property,
    pub classifier: bool,
    pub oracle: bool,
}

/// Every applicable property where `report` contradicts `oracle`.
pub fn compare_reports(
    d: &Digraph,
    report: &PropertyReport,
    oracle: &OracleReport,
) -> Vec<Disagreement> {
    Property::ALL
        .into_iter()
        .filter_map(|p| {
            let c = report.value(p)?;
            let o = oracle_value(oracle, p)?;
            (c != o).then(|| Disagreement {
                digraph: d.clone(),
                property: p,
                classifier: c,
                oracle: o,
            })
        })
        .collect()
}

/// Checks `classifier` against the oracle on one digraph. Digraphs without
/// arcs are skipped.
pub fn property_agreement<F>(d: &Digraph, classifier: F) -> Result<Vec<Disagreement>>
where
    F: Fn(&Digraph) -> PropertyReport,
{
    if d.arc_count() == 0 {
        return Ok(Vec::new());
    }
    let oracle = probe(&generate(d)?);
    Ok(compare_reports(d, &classifier(d), &oracle))
}

/// Summary of an exhaustive property sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub digraphs: usize,
    pub comparisons: usize,
    pub disagreements: Vec<Disagreement>,
}

/// Property agreement over every labelled digraph on `n` vertices.
pub fn property_sweep<F>(n: usize, classifier: F) -> Result<SweepSummary>
where
    F: Fn(&Digraph) -> PropertyReport,
{
    let mut summary = SweepSummary::default();
    for d in labeled_digraphs(n)? {
        if d.arc_count() == 0 {
            continue;
        }
        let oracle = probe(&generate(&d)?);
        let report = classifier(&d);
        summary.digraphs += 1;
        summary.comparisons += Property::ALL
            .into_iter()
            .filter(|&p| report.value(p).is_some() && oracle_value(&oracle, p).is_some())
            .count();
        summary
            .disagreements
            .extend(compare_reports(&d, &report, &oracle));
    }
    Ok(summary)
}

/// Outcome of comparing the decision procedure with the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionCheck {
    pub graph: Digraph,
    pub k: usize,
    pub decided: bool,
    pub l: usize,
    pub step: String,
}

impl DecisionCheck {
    pub fn agrees(&self) -> bool {
        self.decided == (self.l <= self.k)
    }
}

/// Runs `decide_l_leq_k` and compares it with `l_brute(G) <= k`.
pub fn verify_decision(g: &Graph, k: usize) -> Result<DecisionCheck> {
    let decision = decide_l_leq_k(g, k)?;
    let l = if g.n() == 1 { 1 } else { l_brute(g.as_digraph())? };
    Ok(DecisionCheck {
        graph: g.as_digraph().clone(),
        k,
        decided: decision.verdict,
        l,
        step: decision.path_taken.to_string(),
    })
}

/// Deterministic report of a full verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub n_max: usize,
    pub k_max: usize,
    pub checks: Vec<CheckResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

/// Largest `n` for the exhaustive property sweep inside [`run_verify`].
pub const VERIFY_PROPERTY_N: usize = MAX_LABELED_N;
/// Largest `n` for the connected-graph decision sweep inside [`run_verify`].
pub const VERIFY_GRAPH_N: usize = 7;

/// Random connected graph on `n` vertices: a random spanning tree plus each
/// remaining edge with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i], order[j]));
    }
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("random edges are valid")
}

/// Random digraph with each arc present with probability `p`.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Digraph {
    let arcs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (1..=n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::new(n, arcs).expect("random arcs are valid")
}

/// Random permutation of `1..=n` in the form accepted by `relabel`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    p.shuffle(rng);
    p
}

/// A random minor: a sequence of vertex deletions, edge deletions and
/// contractions, keeping the graph connected.
pub fn random_minor<R: Rng>(rng: &mut R, g: &Graph, steps: usize) -> Graph {
    let mut h = g.clone();
    for _ in 0..steps {
        if h.n() <= 2 {
            break;
        }
        let edges: Vec<(usize, usize)> = h.edges().collect();
        let next = match rng.gen_range(0..3) {
            0 => minor::delete_vertex(&h, rng.gen_range(1..=h.n())).ok(),
            1 => {
                let &(u, v) = edges.choose(rng).expect("connected graph has edges");
                minor::delete_edge(&h, u, v).ok()
            }
            _ => {
                let &(u, v) = edges.choose(rng).expect("connected graph has edges");
                minor::contract_edge(&h, u, v).ok()
            }
        };
        if let Some(next) = next.filter(Graph::is_connected) {
            h = next;
        }
    }
    h
}

/// Runs the classifier-oracle sweep for `n <= min(n_max, 5)`, the
/// decision sweep over connected graphs with `n <= min(n_max, 7)` and
/// `k <= k_max`, and seeded relabelling and minor checks.
pub fn run_verify(n_max: usize, k_max: usize, seed: u64) -> Result<VerifyReport> {
    run_verify_with(n_max, k_max, seed, classify)
}

/// [`run_verify`] with a substitute classifier, for harness self-tests.
pub fn run_verify_with<F>(n_max: usize, k_max: usize, seed: u64, classifier: F) -> Result<VerifyReport>
where
    F: Fn(&Digraph) -> PropertyReport,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    let mut props = CheckResult::new("classifier agrees with oracle");
    for n in 1..=n_max.min(VERIFY_PROPERTY_N) {
        let summary = property_sweep(n, &classifier)?;
        props.cases += summary.digraphs;
        for bad in summary.disagreements.iter().take(20) {
            props.failures.push(format!(
                "{}: {} classifier={} oracle={}",
                bad.digraph, bad.property, bad.classifier, bad.oracle
            ));
        }
    }
    checks.push(props);

    let mut relabel = CheckResult::new("classifier invariant under relabelling");
    for _ in 0..200 {
        let n = rng.gen_range(2..=n_max.clamp(2, 8));
        let d = random_digraph(&mut rng, n, 0.35);
        if d.arc_count() == 0 {
            continue;
        }
        let perm = random_permutation(&mut rng, n);
        let a = classifier(&d);
        let b = classifier(&d.relabel(&perm));
        let same = Property::ALL.into_iter().all(|p| a.value(p) == b.value(p));
        relabel.record(same, || format!("{d} under {perm:?}"));
    }
    checks.push(relabel);

    let mut decide = CheckResult::new("decision agrees with oracle");
    let mut l_exact = CheckResult::new("l_of agrees with oracle");
    for n in 1..=n_max.min(VERIFY_GRAPH_N) {
        for g in connected_graphs_up_to_iso(n)? {
            if g.n() >= 2 {
                let brute = l_brute(g.as_digraph())?;
                let fast = l_of(g.as_digraph())?;
                l_exact.record(fast == brute, || format!("{g}: l_of={fast} l_brute={brute}"));
            }
            for k in 1..=k_max {
                let check = verify_decision(&g, k)?;
                decide.record(check.agrees(), || {
                    format!(
                        "{} k={}: decided {} but l={} (step {})",
                        check.graph, k, check.decided, check.l, check.step
                    )
                });
            }
        }
    }
    checks.push(l_exact);
    checks.push(decide);

    let mut minors = CheckResult::new("l does not grow under minors");
    for _ in 0..100 {
        let n = rng.gen_range(3..=n_max.clamp(3, 6));
        let g = random_connected_graph(&mut rng, n, 0.3);
        let h = random_minor(&mut rng, &g, 3);
        let lg = l_brute(g.as_digraph())?;
        let lh = if h.n() >= 2 { l_brute(h.as_digraph())? } else { 1 };
        minors.record(lh <= lg, || format!("{g} has minor {h} with l {lh} > {lg}"));
    }
    checks.push(minors);

    Ok(VerifyReport {
        seed,
        n_max,
        k_max,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifier_matches_oracle_up_to_three_vertices() {
        for n in 1..=3 {
            let s = property_sweep(n, classify).unwrap();
            assert!(s.disagreements.is_empty(), "{:?}", s.disagreements);
        }
    }

    #[test]
    fn injected_bug_is_caught() {
        let broken = |d: &Digraph| {
            let mut r = classify(d);
            let v = r.properties.get_mut(&Property::Band).unwrap();
            v.verdict = match v.verdict {
                crate::classifier::Outcome::True => crate::classifier::Outcome::False,
                other => other,
            };
            r
        };
        let s = property_sweep(3, broken).unwrap();
        assert!(!s.disagreements.is_empty());
        assert!(s.disagreements.iter().all(|d| d.property == Property::Band));
    }
}
