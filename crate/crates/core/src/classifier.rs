//! Semigroup properties of `⟨D⟩` decided from the digraph alone.
//!
//! Each verdict records the structural rule that produced it and, where
//! useful, a witness. Rules stated for connected digraphs treat isolated
//! vertices as absent (they are fixed by every element and do not change
//! the semigroup); on other inputs those properties are `not_applicable`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::components::{
    closure, condensation_and_terminals, is_acyclic, nontrivial_components, strong_components,
};
use crate::graph::enumerate::is_isomorphic;
use crate::graph::families::{congruence_free_catalog, zero_simple_catalog};
use crate::graph::shape::{directed_bipartite_obstruction, is_fan, is_path};
use crate::graph::{Digraph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    HTrivial,
    RTrivial,
    LTrivial,
    JTrivial,
    Aperiodic,
    Band,
    CompletelyRegular,
    Inverse,
    Commutative,
    Semilattice,
    Regular,
    HasLeftZero,
    HasRightZero,
    HasZero,
    LeftZeroSemigroup,
    RightZeroSemigroup,
    Simple,
    RectangularBand,
    ZeroSimple,
    CongruenceFree,
    Trivial,
    Group,
}

impl Property {
    pub const ALL: [Property; 22] = [
        Property::HTrivial,
        Property::RTrivial,
        Property::LTrivial,
        Property::JTrivial,
        Property::Aperiodic,
        Property::Band,
        Property::CompletelyRegular,
        Property::Inverse,
        Property::Commutative,
        Property::Semilattice,
        Property::Regular,
        Property::HasLeftZero,
        Property::HasRightZero,
        Property::HasZero,
        Property::LeftZeroSemigroup,
        Property::RightZeroSemigroup,
        Property::Simple,
        Property::RectangularBand,
        Property::ZeroSimple,
        Property::CongruenceFree,
        Property::Trivial,
        Property::Group,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::HTrivial => "h_trivial",
            Property::RTrivial => "r_trivial",
            Property::LTrivial => "l_trivial",
            Property::JTrivial => "j_trivial",
            Property::Aperiodic => "aperiodic",
            Property::Band => "band",
            Property::CompletelyRegular => "completely_regular",
            Property::Inverse => "inverse",
            Property::Commutative => "commutative",
            Property::Semilattice => "semilattice",
            Property::Regular => "regular",
            Property::HasLeftZero => "has_left_zero",
            Property::HasRightZero => "has_right_zero",
            Property::HasZero => "has_zero",
            Property::LeftZeroSemigroup => "left_zero_semigroup",
            Property::RightZeroSemigroup => "right_zero_semigroup",
            Property::Simple => "simple",
            Property::RectangularBand => "rectangular_band",
            Property::ZeroSimple => "zero_simple",
            Property::CongruenceFree => "congruence_free",
            Property::Trivial => "trivial",
            Property::Group => "group",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Property::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown property {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    True,
    False,
    NotApplicable,
}

impl Outcome {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Outcome::True => Some(true),
            Outcome::False => Some(false),
            Outcome::NotApplicable => None,
        }
    }
}

impl From<bool> for Outcome {
    fn from(b: bool) -> Self {
        if b {
            Outcome::True
        } else {
            Outcome::False
        }
    }
}

/// Evidence behind a verdict. Vertex labels refer to the input digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A strong component that breaks the rule.
    StrongComponent { vertices: Vec<usize> },
    /// A vertex with more than one out-neighbour.
    OutDegree { vertex: usize, out: Vec<usize> },
    /// A vertex with both an in-arc and an out-arc inside a component of at
    /// least three vertices.
    NotDirectedBipartite { vertex: usize, component: Vec<usize> },
    /// A non-trivial component that is not a fan.
    NotFan { component: Vec<usize> },
    /// Sinks of the fan components.
    FanSinks { sinks: Vec<usize> },
    Terminals { components: Vec<Vec<usize>> },
    /// The zero is the constant map onto this vertex.
    Zero { image: usize },
    /// Common source of an out-star; its reverse is a fan into this vertex.
    StarSource { vertex: usize },
    Component { vertices: Vec<usize> },
    /// Index (1-based) into the matching catalogue.
    CatalogMatch { index: usize },
    /// Non-trivial weak components, when more than one is present.
    Components { components: Vec<Vec<usize>> },
    ArcCount { arcs: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub verdict: Outcome,
    /// The structural rule the verdict rests on.
    pub proposition: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    fn new(value: bool, rule: &str, witness: Option<Witness>) -> Self {
        Verdict {
            verdict: value.into(),
            proposition: rule.to_string(),
            witness,
        }
    }

    fn not_applicable(reason: &str) -> Self {
        Verdict {
            verdict: Outcome::NotApplicable,
            proposition: reason.to_string(),
            witness: None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        self.verdict.as_bool()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub properties: BTreeMap<Property, Verdict>,
    /// `|⟨D⟩|` when every non-trivial component is a fan.
    pub predicted_size: Option<u128>,
}

impl PropertyReport {
    pub fn get(&self, p: Property) -> &Verdict {
        &self.properties[&p]
    }

    pub fn value(&self, p: Property) -> Option<bool> {
        self.get(p).as_bool()
    }
}

const RULE_H: &str = "every strong component of the closure is a path";
const RULE_R: &str = "digraph is acyclic";
const RULE_L: &str = "out-degree at most 1 and no cycle longer than 2";
const RULE_J: &str = "acyclic with out-degree at most 1";
const RULE_BAND: &str = "every non-trivial component with at least 3 vertices is directed-bipartite";
const RULE_FAN: &str = "every non-trivial component is a fan";
const RULE_REGULAR: &str =
    "acyclic digraph: every non-trivial component with at least 3 vertices is directed-bipartite";
const RULE_LEFT_ZERO: &str = "all terminal components are trivial";
const RULE_RIGHT_ZERO: &str = "exactly one terminal component";
const RULE_ZERO: &str = "exactly one terminal component, and it is trivial";
const RULE_LZS: &str = "the unique non-trivial component is an out-star";
const RULE_RZS: &str = "the unique non-trivial component has 2 vertices";
const RULE_SIMPLE: &str = "left-zero or right-zero semigroup";
const RULE_ZERO_SIMPLE: &str = "the unique non-trivial component is a 0-simple catalogue digraph";
const RULE_CF: &str =
    "the unique non-trivial component is a congruence-free catalogue digraph";
const RULE_TRIVIAL: &str = "exactly one arc";
const NA_EMPTY: &str = "no arcs: the generated semigroup is empty";
const NA_DISCONNECTED: &str = "requires a connected digraph; the oracle decides this case";
const NA_CYCLIC: &str = "regularity of digraphs with cycles is decided by the oracle";

// Non-trivial weak components in the input labels.
struct Parts {
    comps: Vec<(Vec<usize>, Digraph)>,
}

impl Parts {
    fn labels(&self) -> Vec<Vec<usize>> {
        self.comps.iter().map(|(v, _)| v.clone()).collect()
    }

    fn unique(&self) -> Option<&(Vec<usize>, Digraph)> {
        match self.comps.as_slice() {
            [one] => Some(one),
            _ => None,
        }
    }
}

/// H-, R-, L- and J-triviality (plus aperiodicity, which equals
/// H-triviality for finite semigroups).
pub fn greens_triviality(d: &Digraph) -> Vec<(Property, Verdict)> {
    let scc = strong_components(d);
    let closed = closure(d);
    let nontrivial_scc = scc.parts().iter().find(|p| p.len() > 1).cloned();
    let bad_h = scc
        .parts()
        .iter()
        .filter(|p| p.len() > 1)
        .find(|p| !is_path(&Graph::from_symmetric_unchecked(closed.induced(p))))
        .cloned();
    let h = Verdict::new(
        bad_h.is_none(),
        RULE_H,
        bad_h.map(|vertices| Witness::StrongComponent { vertices }),
    );
    let acyclic = nontrivial_scc.is_none();
    let scc_witness = nontrivial_scc.map(|vertices| Witness::StrongComponent { vertices });
    let r = Verdict::new(acyclic, RULE_R, scc_witness.clone());

    let branching = d.vertices().find(|&v| d.out_degree(v) > 1);
    let out_witness = branching.map(|v| Witness::OutDegree {
        vertex: v,
        out: d.out_neighbors(v).to_vec(),
    });
    let long_cycle = scc.parts().iter().find(|p| p.len() > 2).cloned();
    let l = match (&out_witness, long_cycle) {
        (Some(w), _) => Verdict::new(false, RULE_L, Some(w.clone())),
        (None, Some(vertices)) => {
            Verdict::new(false, RULE_L, Some(Witness::StrongComponent { vertices }))
        }
        (None, None) => Verdict::new(true, RULE_L, None),
    };
    let j = match (scc_witness, out_witness) {
        (Some(w), _) | (None, Some(w)) => Verdict::new(false, RULE_J, Some(w)),
        (None, None) => Verdict::new(true, RULE_J, None),
    };
    let mut aperiodic = h.clone();
    aperiodic.proposition = RULE_H.to_string();
    vec![
        (Property::HTrivial, h),
        (Property::RTrivial, r),
        (Property::LTrivial, l),
        (Property::JTrivial, j),
        (Property::Aperiodic, aperiodic),
    ]
}

fn band_obstruction(parts: &Parts) -> Option<Witness> {
    parts.comps.iter().find_map(|(labels, comp)| {
        if comp.n() < 3 {
            return None;
        }
        directed_bipartite_obstruction(comp).map(|v| Witness::NotDirectedBipartite {
            vertex: labels[v - 1],
            component: labels.clone(),
        })
    })
}

fn fan_sinks(parts: &Parts) -> std::result::Result<Vec<usize>, Vec<usize>> {
    parts
        .comps
        .iter()
        .map(|(labels, comp)| is_fan(comp).map(|z| labels[z - 1]).ok_or_else(|| labels.clone()))
        .collect()
}

/// Band, complete regularity, inverse, commutative, semilattice and (for
/// acyclic digraphs) regular.
pub fn regularity_family(d: &Digraph) -> Vec<(Property, Verdict)> {
    regularity_with(d, &Parts {
        comps: nontrivial_components(d),
    })
}

fn regularity_with(d: &Digraph, parts: &Parts) -> Vec<(Property, Verdict)> {
    let obstruction = band_obstruction(parts);
    let band = Verdict::new(obstruction.is_none(), RULE_BAND, obstruction.clone());
    let fan = match fan_sinks(parts) {
        Ok(sinks) => Verdict::new(true, RULE_FAN, Some(Witness::FanSinks { sinks })),
        Err(component) => Verdict::new(false, RULE_FAN, Some(Witness::NotFan { component })),
    };
    let regular = if is_acyclic(d) {
        Verdict::new(obstruction.is_none(), RULE_REGULAR, obstruction)
    } else {
        Verdict::not_applicable(NA_CYCLIC)
    };
    vec![
        (Property::Band, band.clone()),
        (Property::CompletelyRegular, band),
        (Property::Inverse, fan.clone()),
        (Property::Commutative, fan.clone()),
        (Property::Semilattice, fan),
        (Property::Regular, regular),
    ]
}

/// Existence of left zeros, right zeros and a zero, plus the left- and
/// right-zero semigroup tests.
pub fn zero_family(d: &Digraph) -> Vec<(Property, Verdict)> {
    zero_with(&Parts {
        comps: nontrivial_components(d),
    })
}

fn zero_with(parts: &Parts) -> Vec<(Property, Verdict)> {
    let mut out = Vec::new();
    match parts.unique() {
        Some((labels, comp)) => {
            let cond = condensation_and_terminals(comp);
            let terminals: Vec<Vec<usize>> = cond
                .terminals
                .iter()
                .map(|t| t.iter().map(|&v| labels[v - 1]).collect())
                .collect();
            let witness = Some(Witness::Terminals {
                components: terminals.clone(),
            });
            let all_trivial = terminals.iter().all(|t| t.len() == 1);
            out.push((
                Property::HasLeftZero,
                Verdict::new(all_trivial, RULE_LEFT_ZERO, witness.clone()),
            ));
            out.push((
                Property::HasRightZero,
                Verdict::new(terminals.len() == 1, RULE_RIGHT_ZERO, witness.clone()),
            ));
            let zero = match terminals.as_slice() {
                [t] if t.len() == 1 => {
                    Verdict::new(true, RULE_ZERO, Some(Witness::Zero { image: t[0] }))
                }
                _ => Verdict::new(false, RULE_ZERO, witness),
            };
            out.push((Property::HasZero, zero));
        }
        None => {
            for p in [Property::HasLeftZero, Property::HasRightZero, Property::HasZero] {
                out.push((p, Verdict::not_applicable(NA_DISCONNECTED)));
            }
        }
    }
    let several = || {
        Some(Witness::Components {
            components: parts.labels(),
        })
    };
    let lzs = match parts.unique() {
        Some((labels, comp)) => {
            let source = comp.arcs()[0].0;
            if comp.arcs().iter().all(|&(u, _)| u == source) {
                Verdict::new(
                    true,
                    RULE_LZS,
                    Some(Witness::StarSource {
                        vertex: labels[source - 1],
                    }),
                )
            } else {
                Verdict::new(false, RULE_LZS, None)
            }
        }
        None => Verdict::new(false, RULE_LZS, several()),
    };
    let rzs = match parts.unique() {
        Some((labels, comp)) => Verdict::new(
            comp.n() == 2,
            RULE_RZS,
            Some(Witness::Component {
                vertices: labels.clone(),
            }),
        ),
        None => Verdict::new(false, RULE_RZS, several()),
    };
    out.push((Property::LeftZeroSemigroup, lzs));
    out.push((Property::RightZeroSemigroup, rzs));
    out
}

/// Triviality, group, simplicity, rectangular band, 0-simplicity and
/// congruence-freeness.
pub fn simplicity_family(d: &Digraph) -> Vec<(Property, Verdict)> {
    let parts = Parts {
        comps: nontrivial_components(d),
    };
    let zeros = zero_with(&parts);
    simplicity_with(d, &parts, &zeros)
}

fn catalog_match(parts: &Parts, catalog: &[Digraph]) -> Option<usize> {
    let (_, comp) = parts.unique()?;
    if comp.n() > 3 {
        return None;
    }
    catalog
        .iter()
        .position(|c| is_isomorphic(c, comp).expect("catalogue digraphs are small"))
        .map(|i| i + 1)
}

fn simplicity_with(
    d: &Digraph,
    parts: &Parts,
    zeros: &[(Property, Verdict)],
) -> Vec<(Property, Verdict)> {
    let one_arc = d.arc_count() == 1;
    let trivial = Verdict::new(
        one_arc,
        RULE_TRIVIAL,
        Some(Witness::ArcCount {
            arcs: d.arc_count(),
        }),
    );
    let simple = if parts.unique().is_some() {
        let lookup = |p: Property| {
            zeros
                .iter()
                .find(|(q, _)| *q == p)
                .and_then(|(_, v)| v.as_bool())
                .unwrap_or(false)
        };
        let value = lookup(Property::LeftZeroSemigroup) || lookup(Property::RightZeroSemigroup);
        Verdict::new(value, RULE_SIMPLE, None)
    } else {
        Verdict::not_applicable(NA_DISCONNECTED)
    };
    let catalog = |found: Option<usize>, rule: &str| {
        Verdict::new(
            found.is_some(),
            rule,
            found.map(|index| Witness::CatalogMatch { index }),
        )
    };
    vec![
        (Property::Simple, simple.clone()),
        (Property::RectangularBand, simple),
        (
            Property::ZeroSimple,
            catalog(catalog_match(parts, &zero_simple_catalog()), RULE_ZERO_SIMPLE),
        ),
        (
            Property::CongruenceFree,
            catalog(catalog_match(parts, &congruence_free_catalog()), RULE_CF),
        ),
        (Property::Trivial, trivial.clone()),
        (Property::Group, trivial),
    ]
}

/// `|⟨D⟩| = ∏ 2^(d_i - 1) - 1` when the non-trivial components are fans
/// with `d_1, ..., d_r` vertices; `None` otherwise or on overflow.
pub fn predicted_size(d: &Digraph) -> Option<u128> {
    predicted_with(&Parts {
        comps: nontrivial_components(d),
    })
}

fn predicted_with(parts: &Parts) -> Option<u128> {
    if parts.comps.is_empty() || fan_sinks(parts).is_err() {
        return None;
    }
    let exponent: usize = parts.comps.iter().map(|(v, _)| v.len() - 1).sum();
    (exponent < 128).then(|| (1u128 << exponent) - 1)
}

/// Every property verdict for `⟨D⟩`.
pub fn classify(d: &Digraph) -> PropertyReport {
    if d.arc_count() == 0 {
        return PropertyReport {
            properties: Property::ALL
                .into_iter()
                .map(|p| (p, Verdict::not_applicable(NA_EMPTY)))
                .collect(),
            predicted_size: None,
        };
    }
    let parts = Parts {
        comps: nontrivial_components(d),
    };
    let zeros = zero_with(&parts);
    let mut properties = BTreeMap::new();
    properties.extend(greens_triviality(d));
    properties.extend(regularity_with(d, &parts));
    properties.extend(simplicity_with(d, &parts, &zeros));
    properties.extend(zeros);
    PropertyReport {
        properties,
        predicted_size: predicted_with(&parts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn dg(n: usize, arcs: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, arcs.iter().copied()).unwrap()
    }

    fn value(d: &Digraph, p: Property) -> Option<bool> {
        classify(d).value(p)
    }

    #[test]
    fn greens_examples() {
        let two_way = dg(4, &[(1, 2), (2, 1), (2, 3), (3, 2), (3, 4), (4, 3)]);
        assert_eq!(value(&two_way, Property::HTrivial), Some(true));
        assert_eq!(value(&two_way, Property::RTrivial), Some(false));
        let fan = families::fan(5);
        for p in [Property::HTrivial, Property::RTrivial, Property::LTrivial, Property::JTrivial] {
            assert_eq!(value(&fan, p), Some(true), "{p}");
        }
        let c3 = dg(3, &[(1, 2), (2, 3), (3, 1)]);
        for p in [Property::HTrivial, Property::RTrivial, Property::LTrivial, Property::JTrivial] {
            assert_eq!(value(&c3, p), Some(false), "{p}");
        }
    }

    #[test]
    fn regularity_examples() {
        let d = dg(4, &[(1, 3), (2, 3), (1, 4)]);
        assert_eq!(value(&d, Property::Band), Some(true));
        let p3 = dg(3, &[(1, 2), (2, 3)]);
        assert_eq!(value(&p3, Property::Band), Some(false));
        assert_eq!(value(&p3, Property::CompletelyRegular), Some(false));
        let fans = dg(5, &[(1, 2), (3, 5), (4, 5)]);
        assert_eq!(value(&fans, Property::Inverse), Some(true));
        assert_eq!(value(&fans, Property::Semilattice), Some(true));
        assert_eq!(value(&dg(3, &[(1, 2), (2, 1)]), Property::Regular), None);
    }

    #[test]
    fn zero_examples() {
        let r = classify(&families::fan(4));
        assert_eq!(r.value(Property::HasZero), Some(true));
        assert_eq!(r.get(Property::HasZero).witness, Some(Witness::Zero { image: 4 }));
        let star = dg(3, &[(1, 2), (1, 3)]);
        assert_eq!(value(&star, Property::LeftZeroSemigroup), Some(true));
        let two = dg(2, &[(1, 2), (2, 1)]);
        assert_eq!(value(&two, Property::RightZeroSemigroup), Some(true));
        assert_eq!(value(&two, Property::HasLeftZero), Some(false));
        let split = dg(4, &[(1, 2), (3, 4)]);
        assert_eq!(value(&split, Property::HasZero), None);
        assert_eq!(value(&split, Property::Simple), None);
    }

    #[test]
    fn simplicity_examples() {
        assert_eq!(value(&dg(3, &[(1, 2)]), Property::Trivial), Some(true));
        let d5 = dg(3, &[(2, 3), (3, 2), (3, 1), (2, 1)]);
        assert_eq!(value(&d5, Property::ZeroSimple), Some(true));
        assert_eq!(value(&d5, Property::CongruenceFree), Some(true));
        let out_star = dg(3, &[(2, 1), (2, 3)]);
        assert_eq!(value(&out_star, Property::CongruenceFree), Some(true));
        assert_eq!(value(&out_star, Property::ZeroSimple), Some(false));
    }

    #[test]
    fn sizes() {
        assert_eq!(predicted_size(&families::fan(5)), Some(15));
        assert_eq!(predicted_size(&dg(5, &[(1, 2), (3, 5), (4, 5)])), Some(7));
        assert_eq!(predicted_size(&dg(3, &[(1, 2), (2, 3)])), None);
    }

    #[test]
    fn empty_digraph_is_not_applicable() {
        let r = classify(&Digraph::empty(3));
        assert!(r.properties.values().all(|v| v.verdict == Outcome::NotApplicable));
    }

    #[test]
    fn report_round_trips_through_json() {
        let r = classify(&families::fan(4));
        let text = serde_json::to_string(&r).unwrap();
        let back: PropertyReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(text.starts_with("{\"properties\":{\"h_trivial\""));
    }

    #[test]
    fn property_names_parse() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
            assert_eq!(serde_json::to_string(&p).unwrap(), format!("\"{}\"", p.name()));
        }
    }
}
