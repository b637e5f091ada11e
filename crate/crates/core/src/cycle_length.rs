//! The cycle statistic `l(D)` and the linear-time test for `l(G) <= k`.
//!
//! `l(D)` is the longest cycle of any element of `⟨D⟩`. Since `⟨D⟩` equals
//! the semigroup of the closure, and the closure's strong components are
//! symmetric, `l(D)` is the maximum of `l(G)` over those components viewed
//! as graphs. For a connected graph `G` the exact value is known when `G` is
//! a path (1), a cycle `C_n` (`n - 1`), `Q_n` or `R_n` (2), non-separable
//! (`n - 1`, or `n - 2` when odd bipartite), or `L ⊕_q R` with `q >= s`;
//! anything else is enumerated.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::blocks::{blocks, is_nonseparable};
use crate::graph::branches::{branches, split_at_branch, Branch};
use crate::graph::components::{closure, strong_components};
use crate::graph::shape::{bipartite_test, is_cycle_graph, is_path, recognize_shape};
use crate::graph::{Bipartiteness, Digraph, Graph, ShapeTag};
use crate::oracle::{l_brute_exceeds, l_brute_with_cap, ElementCap};

/// Closed form `l(L ⊕_q R)` for `|L| = m`, `|R| = s`.
pub fn oplus_l(m: usize, s: usize, q: usize) -> Result<usize> {
    if !(1 <= m && m <= s && s <= q) || m == 2 || s == 2 {
        return Err(Error::InvalidParameters(format!(
            "oplus_l needs q >= s >= m >= 1 and m, s != 2; got m={m}, s={s}, q={q}"
        )));
    }
    Ok(match (m, s) {
        (1, 1) => 1,
        (1, _) => s - 1,
        _ => m + s - 3,
    })
}

/// Which exact characterisation of `l(G)` applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LExtreme {
    One,
    Two,
    NMinus1,
    NMinus2,
    Unclassified,
}

impl LExtreme {
    /// The value of `l` on an `n`-vertex graph with this tag.
    pub fn value(self, n: usize) -> Option<usize> {
        match self {
            LExtreme::One => Some(1),
            LExtreme::Two => Some(2),
            LExtreme::NMinus1 => Some((n - 1).max(1)),
            LExtreme::NMinus2 => Some(n - 2),
            LExtreme::Unclassified => None,
        }
    }
}

pub fn classify_l_extremes(g: &Graph) -> Result<LExtreme> {
    let shape = recognize_shape(g)?;
    Ok(match shape {
        ShapeTag::Path { .. } => LExtreme::One,
        ShapeTag::Qn { .. } | ShapeTag::Rn { .. } => LExtreme::Two,
        ShapeTag::K2 => LExtreme::NMinus1,
        _ if is_nonseparable(g) => match bipartite_test(g) {
            Bipartiteness::OddBipartite => LExtreme::NMinus2,
            _ => LExtreme::NMinus1,
        },
        _ => LExtreme::Unclassified,
    })
}

/// A representation `G = L ⊕_q R` with `q >= s >= m`, if one exists.
fn oplus_form(g: &Graph) -> Option<(usize, usize, usize, Branch)> {
    let bd = blocks(g);
    let all = branches(g, &bd).ok()?;
    all.into_iter().find_map(|b| {
        let split = split_at_branch(g, &b)?;
        (split.q >= split.s()).then(|| (split.m(), split.s(), split.q, b))
    })
}

/// `l(G)` from a closed form, without enumeration.
pub fn l_closed_form(g: &Graph) -> Result<Option<usize>> {
    let n = g.n();
    if n <= 1 {
        return Ok(Some(1));
    }
    if let Some(v) = classify_l_extremes(g)?.value(n) {
        return Ok(Some(v));
    }
    Ok(oplus_form(g).and_then(|(m, s, q, _)| oplus_l(m, s, q).ok()))
}

/// `l(G)` for a connected graph.
pub fn l_connected_graph(g: &Graph, cap: ElementCap) -> Result<usize> {
    match l_closed_form(g)? {
        Some(v) => Ok(v),
        None => l_brute_with_cap(g.as_digraph(), cap),
    }
}

/// `l(D)`: the maximum of `l` over the strong components of the closure,
/// and 1 for acyclic digraphs.
pub fn l_of(d: &Digraph) -> Result<usize> {
    l_of_with_cap(d, ElementCap::from_env())
}

pub fn l_of_with_cap(d: &Digraph, cap: ElementCap) -> Result<usize> {
    if d.arc_count() == 0 {
        return Err(Error::NoArcs);
    }
    let closed = closure(d);
    let mut best = 1;
    for part in strong_components(&closed).parts() {
        if part.len() < 2 {
            continue;
        }
        let g = Graph::from_symmetric_unchecked(closed.induced(part));
        best = best.max(l_connected_graph(&g, cap)?);
    }
    Ok(best)
}

/// Which step of the decision procedure produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DecisionStep {
    #[serde(rename = "brute")]
    Brute,
    #[serde(rename = "path")]
    Path,
    #[serde(rename = "degree")]
    Degree,
    #[serde(rename = "degree2count")]
    Degree2Count,
    #[serde(rename = "block")]
    Block,
    #[serde(rename = "branch-no")]
    BranchNo,
    #[serde(rename = "branch-yes")]
    BranchYes,
}

impl DecisionStep {
    pub fn number(self) -> u8 {
        match self {
            DecisionStep::Brute => 1,
            DecisionStep::Path => 2,
            DecisionStep::Degree => 3,
            DecisionStep::Degree2Count => 4,
            DecisionStep::Block => 5,
            DecisionStep::BranchNo | DecisionStep::BranchYes => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DecisionStep::Brute => "brute",
            DecisionStep::Path => "path",
            DecisionStep::Degree => "degree",
            DecisionStep::Degree2Count => "degree2count",
            DecisionStep::Block => "block",
            DecisionStep::BranchNo => "branch-no",
            DecisionStep::BranchYes => "branch-yes",
        }
    }
}

impl fmt::Display for DecisionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Quantities the procedure measured before deciding.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionDetails {
    /// `(k+2)(k+1)(2k-1)`.
    pub threshold: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    /// Vertices of degree other than 2.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub non_degree2: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_block: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<Branch>,
    /// Exact `l(G)` when it was computed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_l: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LDecision {
    pub n: usize,
    pub k: usize,
    /// `l(G) <= k`.
    pub verdict: bool,
    pub step: u8,
    pub path_taken: DecisionStep,
    pub details: DecisionDetails,
    /// Set when the branch step found no separating longest branch and the
    /// answer came from exact evaluation instead.
    #[serde(default)]
    pub flagged: bool,
}

/// `(k+2)(k+1)(2k-1)`, the size below which the procedure evaluates
/// exactly.
pub fn small_threshold(k: usize) -> usize {
    (k + 2)
        .saturating_mul(k + 1)
        .saturating_mul((2 * k).saturating_sub(1))
}

// Largest degree for which the exact evaluation may enumerate the semigroup.
const ENUMERATION_LIMIT: usize = 16;

/// Exact `l(G) <= k` for small graphs: closed forms, then bounded
/// enumeration, then lower bounds.
fn exact_leq(g: &Graph, k: usize, details: &mut DecisionDetails) -> Result<bool> {
    if let Some(l) = l_closed_form(g)? {
        details.exact_l = Some(l);
        return Ok(l <= k);
    }
    let n = g.n();
    if n <= ENUMERATION_LIMIT {
        return Ok(!l_brute_exceeds(g.as_digraph(), k, ElementCap::from_env())?);
    }
    // l(G) >= max degree - 1 and l(G) >= l(B) >= |B| - 2 for every block B
    let bd = blocks(g);
    let lower = (g.max_degree().saturating_sub(1)).max(bd.max_block_size().saturating_sub(2));
    if lower > k {
        details.note = Some(format!("lower bound {lower} exceeds k"));
        return Ok(false);
    }
    Err(Error::TooLarge {
        what: "exact evaluation of l",
        n,
        limit: ENUMERATION_LIMIT,
    })
}

/// Decides `l(G) <= k` for a connected graph in `O(n + m)` time once `n`
/// exceeds [`small_threshold`]`(k)`.
pub fn decide_l_leq_k(g: &Graph, k: usize) -> Result<LDecision> {
    let n = g.n();
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut details = DecisionDetails {
        threshold: small_threshold(k),
        ..Default::default()
    };
    let done = |verdict: bool, path_taken: DecisionStep, details: DecisionDetails| LDecision {
        n,
        k,
        verdict,
        step: path_taken.number(),
        path_taken,
        details,
        flagged: false,
    };

    // l(G) = 1 exactly for paths
    if k == 1 {
        return Ok(done(is_path(g), DecisionStep::Path, details));
    }
    if n <= details.threshold {
        let verdict = exact_leq(g, k, &mut details)?;
        return Ok(done(verdict, DecisionStep::Brute, details));
    }
    if is_path(g) {
        return Ok(done(true, DecisionStep::Path, details));
    }
    let max_degree = g.max_degree();
    details.max_degree = Some(max_degree);
    if max_degree >= k + 2 {
        return Ok(done(false, DecisionStep::Degree, details));
    }
    let t = (1..=n).filter(|&v| g.degree(v) != 2).count();
    details.non_degree2 = Some(t);
    if t >= 4 * k - 1 {
        return Ok(done(false, DecisionStep::Degree2Count, details));
    }
    let bd = blocks(g);
    let max_block = bd.max_block_size();
    details.max_block = Some(max_block);
    if max_block >= k + 3 {
        return Ok(done(false, DecisionStep::Block, details));
    }
    let longest = if is_cycle_graph(g) {
        None
    } else {
        branches(g, &bd)?.into_iter().next()
    };
    match longest {
        Some(branch) if branch.separating => {
            let q = branch.len();
            let limit = if branch.terminal {
                n.checked_sub(k + 3)
            } else {
                n.checked_sub(k + 4)
            };
            let no = limit.is_some_and(|lim| q <= lim);
            details.branch = Some(branch);
            let step = if no {
                DecisionStep::BranchNo
            } else {
                DecisionStep::BranchYes
            };
            Ok(done(!no, step, details))
        }
        other => {
            details.branch = other;
            details.note = Some("no separating longest branch; evaluated exactly".into());
            let verdict = exact_leq(g, k, &mut details)?;
            let mut d = done(verdict, DecisionStep::Brute, details);
            d.flagged = true;
            Ok(d)
        }
    }
}
