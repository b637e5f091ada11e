use serde::{Deserialize, Serialize};

use crate::oracle::congruence::{is_congruence_free, zero_of, MAX_CONGRUENCE_SIZE};
use crate::oracle::green::{green_structure, GreenStructure};
use crate::oracle::semigroup::SemigroupTable;
use crate::oracle::transformation::{packed, Transformation};

/// Properties of `⟨D⟩` read off its multiplication tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub size: usize,
    pub band: bool,
    pub commutative: bool,
    pub semilattice: bool,
    pub regular: bool,
    pub completely_regular: bool,
    pub inverse: bool,
    pub h_trivial: bool,
    pub r_trivial: bool,
    pub l_trivial: bool,
    pub j_trivial: bool,
    pub aperiodic: bool,
    pub left_zeros: Vec<Transformation>,
    pub right_zeros: Vec<Transformation>,
    pub zero: Option<Transformation>,
    pub left_zero_semigroup: bool,
    pub right_zero_semigroup: bool,
    pub rectangular_band: bool,
    pub simple: bool,
    pub zero_simple: bool,
    pub trivial: bool,
    pub group: bool,
    /// `None` when `|S|` exceeds the congruence test's limit.
    pub congruence_free: Option<bool>,
}

impl OracleReport {
    pub fn has_left_zero(&self) -> bool {
        !self.left_zeros.is_empty()
    }

    pub fn has_right_zero(&self) -> bool {
        !self.right_zeros.is_empty()
    }

    pub fn has_zero(&self) -> bool {
        self.zero.is_some()
    }
}

pub fn probe(s: &SemigroupTable) -> OracleReport {
    probe_with(s, &green_structure(s))
}

pub fn probe_with(s: &SemigroupTable, green: &GreenStructure) -> OracleReport {
    let len = s.len();
    let ng = s.generator_count();
    let n = s.degree();

    let band = (0..len).all(|x| green.is_idempotent(x));
    let gens: Vec<u64> = (0..ng).map(|g| s.packed(g)).collect();
    let commutative = gens.iter().enumerate().all(|(i, &a)| {
        gens[i + 1..]
            .iter()
            .all(|&b| packed::mul(a, b, n) == packed::mul(b, a, n))
    });
    let regular = (0..len).all(|x| green.is_regular(x));
    let completely_regular = (0..len).all(|x| green.j.related(x, s.multiply(x, x)));
    let inverse = regular && idempotents_commute(s, green);

    let left_zeros: Vec<usize> = (0..len)
        .filter(|&x| (0..ng).all(|g| s.right(x, g) == x))
        .collect();
    let right_zeros: Vec<usize> = (0..len)
        .filter(|&x| (0..ng).all(|g| s.left(g, x) == x))
        .collect();
    let zero = zero_of(s);

    let simple = green.j.count() == 1;
    let zero_simple = match zero {
        Some(z) => {
            green.j.count() == 2 && (0..len).any(|x| (0..ng).any(|g| s.right(x, g) != z))
        }
        None => false,
    };

    let h_sizes = green.h.sizes();
    let aperiodic = (0..len).all(|x| !green.is_idempotent(x) || h_sizes[green.h.class_of(x)] == 1);

    let congruence_free = if len <= MAX_CONGRUENCE_SIZE {
        is_congruence_free(s, green).ok()
    } else {
        None
    };

    OracleReport {
        size: len,
        band,
        commutative,
        semilattice: band && commutative,
        regular,
        completely_regular,
        inverse,
        h_trivial: green.h.is_trivial(),
        r_trivial: green.r.is_trivial(),
        l_trivial: green.l.is_trivial(),
        j_trivial: green.j.is_trivial(),
        aperiodic,
        left_zero_semigroup: left_zeros.len() == len,
        right_zero_semigroup: right_zeros.len() == len,
        left_zeros: left_zeros.iter().map(|&x| s.element(x)).collect(),
        right_zeros: right_zeros.iter().map(|&x| s.element(x)).collect(),
        zero: zero.map(|z| s.element(z)),
        rectangular_band: simple && band,
        simple,
        zero_simple,
        trivial: len == 1,
        group: green.r.count() == 1 && green.l.count() == 1,
        congruence_free,
    }
}

fn idempotents_commute(s: &SemigroupTable, green: &GreenStructure) -> bool {
    let n = s.degree();
    let idem: Vec<u64> = green.idempotents().iter().map(|&e| s.packed(e)).collect();
    idem.iter().enumerate().all(|(i, &e)| {
        idem[i + 1..]
            .iter()
            .all(|&f| packed::mul(e, f, n) == packed::mul(f, e, n))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{families, Digraph};
    use crate::oracle::semigroup::generate;

    fn report(d: &Digraph) -> OracleReport {
        probe(&generate(d).unwrap())
    }

    #[test]
    fn fan() {
        let r = report(&families::fan(4));
        assert_eq!(r.size, 7);
        assert!(r.semilattice && r.inverse && r.commutative && r.j_trivial);
        assert_eq!(r.zero, Some(Transformation::constant(4, 4).unwrap()));
        assert_eq!(r.congruence_free, Some(false));
    }

    #[test]
    fn out_star_is_left_zero() {
        let r = report(&Digraph::new(3, [(1, 2), (1, 3)]).unwrap());
        assert!(r.left_zero_semigroup && r.rectangular_band && r.simple);
        assert!(!r.right_zero_semigroup);
    }

    #[test]
    fn zero_simple_example() {
        let r = report(&Digraph::new(3, [(2, 3), (3, 2), (3, 1)]).unwrap());
        assert!(r.zero_simple);
        assert!(!r.simple);
        assert_eq!(r.congruence_free, Some(true));
    }

    #[test]
    fn tournament_is_not_aperiodic() {
        let r = report(&Digraph::new(3, [(1, 2), (2, 3), (3, 1)]).unwrap());
        assert_eq!(r.size, 21);
        assert!(!r.aperiodic && !r.h_trivial && !r.r_trivial && !r.l_trivial && !r.j_trivial);
        assert!(r.regular && !r.band);
    }

    #[test]
    fn single_arc() {
        let r = report(&Digraph::new(2, [(1, 2)]).unwrap());
        assert!(r.trivial && r.group && r.band && r.semilattice);
        assert_eq!(r.congruence_free, Some(true));
    }
}
