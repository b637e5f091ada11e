//! Counting digraphs by semigroup property.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::classifier::{classify, Property};
use crate::error::Result;
use crate::graph::enumerate::enumerate_digraphs;
use crate::graph::Digraph;
use crate::oracle::{generate, probe, OracleReport};
use crate::verify::oracle_value;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub property: Property,
    /// Digraphs whose semigroup has the property.
    pub digraphs: usize,
    /// Digraphs the oracle could not settle (element cap).
    pub unknown: usize,
    /// For semilattice-type properties: the number of distinct semigroups
    /// up to isomorphism among the counted digraphs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semigroups: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub n: usize,
    pub up_to_iso: bool,
    /// Digraphs examined, excluding the one with no arcs.
    pub total: usize,
    pub rows: Vec<CensusRow>,
}

// A semilattice generated by `a` elements has at most 2^a - 1 elements, with
// equality exactly when it is free on them; the free semilattice is then
// determined by `a`.
fn free_semilattice_degree(d: &Digraph, oracle: &OracleReport) -> Option<usize> {
    let a = d.arc_count();
    (oracle.semilattice && a < usize::BITS as usize && oracle.size == (1usize << a) - 1)
        .then_some(a)
}

/// Counts digraphs on `n` vertices satisfying each property. Classifier
/// verdicts are used where applicable, the oracle otherwise.
pub fn census(n: usize, up_to_iso: bool, properties: &[Property]) -> Result<Census> {
    let mut rows: Vec<CensusRow> = properties
        .iter()
        .map(|&property| CensusRow {
            property,
            digraphs: 0,
            unknown: 0,
            semigroups: None,
        })
        .collect();
    let mut degrees: Vec<Option<BTreeSet<usize>>> = properties
        .iter()
        .map(|p| {
            matches!(p, Property::Inverse | Property::Semilattice | Property::Commutative)
                .then(BTreeSet::new)
        })
        .collect();
    let mut total = 0;
    for d in enumerate_digraphs(n, up_to_iso)? {
        if d.arc_count() == 0 {
            continue;
        }
        total += 1;
        let report = classify(&d);
        let mut oracle: Option<Option<OracleReport>> = None;
        let mut oracle_for = |d: &Digraph| {
            oracle
                .get_or_insert_with(|| generate(d).ok().map(|s| probe(&s)))
                .clone()
        };
        for (i, row) in rows.iter_mut().enumerate() {
            let value = match report.value(row.property) {
                Some(v) => Some(v),
                None => oracle_for(&d).and_then(|o| oracle_value(&o, row.property)),
            };
            match value {
                Some(true) => {
                    row.digraphs += 1;
                    if let Some(set) = degrees[i].as_mut() {
                        match oracle_for(&d).and_then(|o| free_semilattice_degree(&d, &o)) {
                            Some(k) => {
                                set.insert(k);
                            }
                            None => degrees[i] = None,
                        }
                    }
                }
                Some(false) => {}
                None => row.unknown += 1,
            }
        }
    }
    for (row, set) in rows.iter_mut().zip(degrees) {
        row.semigroups = set.map(|s| s.len());
    }
    Ok(Census {
        n,
        up_to_iso,
        total,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_census() {
        let c = census(4, true, &[Property::Inverse]).unwrap();
        assert_eq!(c.rows[0].semigroups, Some(3));
        assert_eq!(c.rows[0].digraphs, 4);
    }

    #[test]
    fn single_arc_census() {
        let c = census(3, false, &[Property::Trivial]).unwrap();
        assert_eq!(c.rows[0].digraphs, 6);
        assert_eq!(c.total, 63);
    }
}
