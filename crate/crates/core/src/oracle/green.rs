use rustc_hash::FxHashMap;

use crate::graph::components::tarjan;
use crate::oracle::semigroup::SemigroupTable;

/// An equivalence on element indices `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classes {
    class_of: Vec<usize>,
    count: usize,
}

impl Classes {
    fn from_raw(raw: Vec<usize>, count: usize) -> Self {
        // renumber by first occurrence so ids do not depend on traversal order
        let mut relabel = vec![usize::MAX; count];
        let mut next = 0;
        let class_of = raw
            .into_iter()
            .map(|r| {
                if relabel[r] == usize::MAX {
                    relabel[r] = next;
                    next += 1;
                }
                relabel[r]
            })
            .collect();
        Classes {
            class_of,
            count: next,
        }
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn is_trivial(&self) -> bool {
        self.count == self.class_of.len()
    }

    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.count];
        for &c in &self.class_of {
            out[c] += 1;
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct GreenStructure {
    pub r: Classes,
    pub l: Classes,
    pub h: Classes,
    pub j: Classes,
    idempotent: Vec<bool>,
    regular: Vec<bool>,
}

impl GreenStructure {
    pub fn is_idempotent(&self, x: usize) -> bool {
        self.idempotent[x]
    }

    /// `x` is regular iff its R-class holds an idempotent.
    pub fn is_regular(&self, x: usize) -> bool {
        self.regular[x]
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.idempotent.len()).filter(|&x| self.idempotent[x]).collect()
    }
}

/// R, L and J from strong components of the right, left and two-sided
/// Cayley graphs; H as the intersection of R and L.
pub fn green_structure(s: &SemigroupTable) -> GreenStructure {
    let len = s.len();
    let ng = s.generator_count();
    let (r, rc) = tarjan(len, |x| (0..ng).map(move |g| s.right(x, g)));
    let (l, lc) = tarjan(len, |x| (0..ng).map(move |g| s.left(g, x)));
    let (j, jc) = tarjan(len, |x| {
        (0..ng)
            .map(move |g| s.right(x, g))
            .chain((0..ng).map(move |g| s.left(g, x)))
    });
    let mut pairs = FxHashMap::default();
    let h: Vec<usize> = (0..len)
        .map(|x| {
            let next = pairs.len();
            *pairs.entry((r[x], l[x])).or_insert(next)
        })
        .collect();
    let hc = pairs.len();
    let r = Classes::from_raw(r, rc);
    let idempotent: Vec<bool> = (0..len).map(|x| s.is_idempotent(x)).collect();
    let mut r_has_idem = vec![false; r.count()];
    for x in 0..len {
        if idempotent[x] {
            r_has_idem[r.class_of(x)] = true;
        }
    }
    let regular = (0..len).map(|x| r_has_idem[r.class_of(x)]).collect();
    GreenStructure {
        r,
        l: Classes::from_raw(l, lc),
        h: Classes::from_raw(h, hc),
        j: Classes::from_raw(j, jc),
        idempotent,
        regular,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{families, Digraph};
    use crate::oracle::semigroup::generate;
    use crate::oracle::transformation::arc_transform;

    #[test]
    fn fan_is_a_semilattice() {
        let s = generate(&families::fan(3)).unwrap();
        let g = green_structure(&s);
        assert_eq!(g.j.count(), 3);
        assert!(g.j.is_trivial());
    }

    #[test]
    fn two_cycle_is_a_right_zero_semigroup() {
        let s = generate(&Digraph::new(2, [(1, 2), (2, 1)]).unwrap()).unwrap();
        let g = green_structure(&s);
        assert_eq!(g.r.sizes(), vec![2]);
        assert_eq!(g.l.count(), 2);
    }

    #[test]
    fn arcs_on_a_cycle_are_r_related() {
        let d = Digraph::new(4, [(1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        let s = generate(&d).unwrap();
        let g = green_structure(&s);
        for (a, b) in [(1, 2), (2, 3), (3, 1)] {
            let x = s.index_of(&arc_transform(a, b, 4).unwrap()).unwrap();
            let y = s.index_of(&arc_transform(b, a, 4).unwrap()).unwrap();
            assert!(g.r.related(x, y));
        }
    }

    #[test]
    fn relations_refine_as_expected() {
        let d = families::cycle(4).into_digraph();
        let s = generate(&d).unwrap();
        let g = green_structure(&s);
        for x in 0..s.len() {
            for y in 0..s.len() {
                if g.h.related(x, y) {
                    assert!(g.r.related(x, y) && g.l.related(x, y));
                }
                if g.r.related(x, y) || g.l.related(x, y) {
                    assert!(g.j.related(x, y));
                }
            }
            if g.is_idempotent(x) {
                assert!(g.is_regular(x));
            }
        }
    }
}
