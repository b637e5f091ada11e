use std::fmt;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::oracle::transformation::{packed, Transformation};

/// Upper bound on `|⟨D⟩|` accepted by the enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementCap(pub usize);

impl ElementCap {
    pub const DEFAULT: usize = 1_000_000;
    pub const ENV: &'static str = "ARCSEMI_ELEMENT_CAP";

    /// The cap from `ARCSEMI_ELEMENT_CAP`, or the default when unset or
    /// unparsable.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV)
            .ok()
            .and_then(|s| s.trim().replace('_', "").parse().ok())
            .map(ElementCap)
            .unwrap_or_default()
    }
}

impl Default for ElementCap {
    fn default() -> Self {
        ElementCap(Self::DEFAULT)
    }
}

/// `⟨D⟩` enumerated explicitly, with right and left Cayley tables.
///
/// Elements are numbered in breadth-first order from the generators (which
/// come first, in sorted arc order). `right(x, g)` is `x·g` and `left(g, x)`
/// is `g·x`, where `g` indexes [`generators`](Self::generators).
#[derive(Clone)]
pub struct SemigroupTable {
    n: usize,
    generators: Vec<(usize, usize)>,
    elements: Vec<u64>,
    index: FxHashMap<u64, u32>,
    // (parent element, generator) with parent == u32::MAX for generators
    parent: Vec<(u32, u32)>,
    right: Vec<u32>,
    left: Vec<u32>,
}

pub(crate) fn check_degree(d: &Digraph) -> Result<()> {
    if d.arc_count() == 0 {
        return Err(Error::NoArcs);
    }
    if d.n() > packed::MAX_DEGREE {
        return Err(Error::TooLarge {
            what: "semigroup enumeration",
            n: d.n(),
            limit: packed::MAX_DEGREE,
        });
    }
    Ok(())
}

/// [`generate_with_cap`] with the cap taken from the environment.
pub fn generate(d: &Digraph) -> Result<SemigroupTable> {
    generate_with_cap(d, ElementCap::from_env())
}

pub fn generate_with_cap(d: &Digraph, cap: ElementCap) -> Result<SemigroupTable> {
    check_degree(d)?;
    let n = d.n();
    let generators = d.arcs().to_vec();
    let ng = generators.len();
    let mut elements: Vec<u64> = Vec::new();
    let mut index = FxHashMap::default();
    let mut parent = Vec::new();
    for (g, &(a, b)) in generators.iter().enumerate() {
        let x = packed::arc(a - 1, b - 1, n);
        index.insert(x, elements.len() as u32);
        elements.push(x);
        parent.push((u32::MAX, g as u32));
    }
    let mut right = Vec::with_capacity(elements.len() * ng);
    let mut i = 0;
    while i < elements.len() {
        let x = elements[i];
        for (g, &(a, b)) in generators.iter().enumerate() {
            let y = packed::right_arc(x, a - 1, b - 1, n);
            let next = elements.len() as u32;
            let j = *index.entry(y).or_insert_with(|| {
                elements.push(y);
                parent.push((i as u32, g as u32));
                next
            });
            right.push(j);
        }
        if elements.len() > cap.0 {
            return Err(Error::ElementCap {
                cap: cap.0,
                partial: elements.len(),
            });
        }
        i += 1;
    }
    let mut left = Vec::with_capacity(elements.len() * ng);
    for &x in &elements {
        for &(a, b) in &generators {
            let y = packed::left_arc(a - 1, b - 1, x);
            left.push(index[&y]);
        }
    }
    Ok(SemigroupTable {
        n,
        generators,
        elements,
        index,
        parent,
        right,
        left,
    })
}

impl SemigroupTable {
    /// Degree of the transformations.
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> &[(usize, usize)] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn element(&self, i: usize) -> Transformation {
        packed::unpack(self.elements[i], self.n)
    }

    pub fn elements(&self) -> impl Iterator<Item = Transformation> + '_ {
        self.elements.iter().map(|&x| packed::unpack(x, self.n))
    }

    pub fn index_of(&self, t: &Transformation) -> Option<usize> {
        if t.degree() != self.n {
            return None;
        }
        self.index.get(&packed::pack(t)).map(|&i| i as usize)
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        self.index_of(t).is_some()
    }

    /// `x·g`.
    #[inline]
    pub fn right(&self, x: usize, g: usize) -> usize {
        self.right[x * self.generators.len() + g] as usize
    }

    /// `g·x`.
    #[inline]
    pub fn left(&self, g: usize, x: usize) -> usize {
        self.left[x * self.generators.len() + g] as usize
    }

    /// `x·y`.
    pub fn multiply(&self, x: usize, y: usize) -> usize {
        let z = packed::mul(self.elements[x], self.elements[y], self.n);
        self.index[&z] as usize
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        let e = self.elements[x];
        packed::mul(e, e, self.n) == e
    }

    pub fn rank(&self, x: usize) -> usize {
        packed::rank(self.elements[x], self.n)
    }

    pub fn longest_cycle(&self, x: usize) -> usize {
        packed::longest_cycle(self.elements[x], self.n)
    }

    /// A shortest word over the arcs evaluating to element `x`.
    pub fn word(&self, x: usize) -> Vec<(usize, usize)> {
        let mut word = Vec::new();
        let mut cur = x as u32;
        loop {
            let (p, g) = self.parent[cur as usize];
            word.push(self.generators[g as usize]);
            if p == u32::MAX {
                break;
            }
            cur = p;
        }
        word.reverse();
        word
    }

    pub(crate) fn packed(&self, x: usize) -> u64 {
        self.elements[x]
    }

    /// One line per element: `index<TAB>[images]<TAB>word`, in table order.
    pub fn export_lines(&self) -> Vec<String> {
        (0..self.len())
            .map(|i| {
                let word: Vec<String> = self
                    .word(i)
                    .iter()
                    .map(|(a, b)| format!("({a}→{b})"))
                    .collect();
                format!("{i}\t{}\t{}", self.element(i), word.join(""))
            })
            .collect()
    }
}

impl fmt::Debug for SemigroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SemigroupTable")
            .field("degree", &self.n)
            .field("generators", &self.generators)
            .field("len", &self.len())
            .finish()
    }
}
