use crate::error::{Error, Result};
use crate::oracle::green::GreenStructure;
use crate::oracle::semigroup::SemigroupTable;

/// Largest `|S|` for the congruence-freeness test.
pub const MAX_CONGRUENCE_SIZE: usize = 5000;

struct UnionFind {
    parent: Vec<u32>,
    classes: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            classes: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb) as u32;
        self.classes -= 1;
        true
    }
}

/// Number of classes of the principal congruence `θ(a, b)`, stopping early
/// once it reaches `stop_at` classes.
fn principal_classes(s: &SemigroupTable, a: usize, b: usize, stop_at: usize) -> usize {
    let ng = s.generator_count();
    let mut uf = UnionFind::new(s.len());
    let mut queue = vec![(a, b)];
    uf.union(a, b);
    while let Some((x, y)) = queue.pop() {
        for g in 0..ng {
            for (u, v) in [(s.right(x, g), s.right(y, g)), (s.left(g, x), s.left(g, y))] {
                if uf.union(u, v) {
                    if uf.classes <= stop_at {
                        return uf.classes;
                    }
                    queue.push((u, v));
                }
            }
        }
    }
    uf.classes
}

/// Classes of `θ(a, b)`, the smallest congruence relating `a` and `b`.
pub fn principal_congruence(s: &SemigroupTable, a: usize, b: usize) -> Vec<usize> {
    let ng = s.generator_count();
    let mut uf = UnionFind::new(s.len());
    let mut queue = Vec::new();
    if uf.union(a, b) {
        queue.push((a, b));
    }
    while let Some((x, y)) = queue.pop() {
        for g in 0..ng {
            for (u, v) in [(s.right(x, g), s.right(y, g)), (s.left(g, x), s.left(g, y))] {
                if uf.union(u, v) {
                    queue.push((u, v));
                }
            }
        }
    }
    (0..s.len()).map(|x| uf.find(x)).collect()
}

/// The zero element, if any.
pub fn zero_of(s: &SemigroupTable) -> Option<usize> {
    let ng = s.generator_count();
    (0..s.len()).find(|&z| (0..ng).all(|g| s.right(z, g) == z && s.left(g, z) == z))
}

/// Whether the only congruences are equality and the universal relation.
///
/// A proper ideal with at least two elements yields a non-trivial Rees
/// congruence, so only semigroups with a single J-class, or a zero plus one
/// other J-class, reach the pairwise test.
pub fn is_congruence_free(s: &SemigroupTable, green: &GreenStructure) -> Result<bool> {
    let len = s.len();
    if len > MAX_CONGRUENCE_SIZE {
        return Err(Error::TooLarge {
            what: "congruence-freeness test",
            n: len,
            limit: MAX_CONGRUENCE_SIZE,
        });
    }
    if len <= 2 {
        return Ok(true);
    }
    let j = green.j.count();
    if j > 2 || (j == 2 && zero_of(s).is_none()) {
        return Ok(false);
    }
    for a in 0..len {
        for b in a + 1..len {
            if principal_classes(s, a, b, 1) != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{families, Digraph};
    use crate::oracle::green::green_structure;
    use crate::oracle::semigroup::generate;

    fn free(d: &Digraph) -> bool {
        let s = generate(d).unwrap();
        is_congruence_free(&s, &green_structure(&s)).unwrap()
    }

    // every equivalence compatible with both translations, by brute force
    fn free_brute(d: &Digraph) -> bool {
        let s = generate(d).unwrap();
        let len = s.len();
        for a in 0..len {
            for b in a + 1..len {
                let classes = principal_congruence(&s, a, b);
                let first = classes[0];
                if classes.iter().any(|&c| c != first) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn catalogue_is_congruence_free() {
        for d in families::congruence_free_catalog() {
            assert!(free(&d), "{d}");
        }
        assert!(!free(&families::fan(4)));
        assert!(!free(&Digraph::new(3, [(1, 2), (2, 3)]).unwrap()));
    }

    #[test]
    fn shortcut_matches_pairwise_test() {
        for d in crate::graph::enumerate::labeled_digraphs(3).unwrap() {
            if d.arc_count() > 0 {
                assert_eq!(free(&d), free_brute(&d), "{d}");
            }
        }
    }

    #[test]
    fn principal_congruence_is_compatible() {
        let s = generate(&families::fan(4)).unwrap();
        let classes = principal_congruence(&s, 0, 1);
        for x in 0..s.len() {
            for y in 0..s.len() {
                if classes[x] == classes[y] {
                    for g in 0..s.generator_count() {
                        assert_eq!(classes[s.right(x, g)], classes[s.right(y, g)]);
                        assert_eq!(classes[s.left(g, x)], classes[s.left(g, y)]);
                    }
                }
            }
        }
    }
}
