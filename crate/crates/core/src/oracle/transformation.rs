use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A self-map of `{1, ..., n}`, acting on the right: `v(αβ) = (vα)β`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    /// `images[v - 1]` is the image of `v`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if let Some(&bad) = images.iter().find(|&&x| x == 0 || x > n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn constant(n: usize, c: usize) -> Result<Self> {
        Self::new(vec![c; n])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    /// Sorted image set.
    pub fn image(&self) -> Vec<usize> {
        let mut im = self.images.clone();
        im.sort_unstable();
        im.dedup();
        im
    }

    /// Kernel classes, each sorted, ordered by least element.
    pub fn kernel(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut slot = vec![usize::MAX; n + 1];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in 1..=n {
            let img = self.apply(v);
            if slot[img] == usize::MAX {
                slot[img] = classes.len();
                classes.push(Vec::new());
            }
            classes[slot[img]].push(v);
        }
        classes
    }

    pub fn rank(&self) -> usize {
        self.image().len()
    }

    pub fn is_idempotent(&self) -> bool {
        self.images.iter().all(|&x| self.apply(x) == x)
    }

    /// Longest cycle of the functional graph; fixed points count as length 1.
    pub fn longest_cycle(&self) -> usize {
        let n = self.degree();
        let mut state = vec![0u8; n + 1]; // 0 new, 1 on current walk, 2 done
        let mut best = 0;
        let mut walk = Vec::new();
        for s in 1..=n {
            let mut v = s;
            while state[v] == 0 {
                state[v] = 1;
                walk.push(v);
                v = self.apply(v);
            }
            if state[v] == 1 {
                let pos = walk.iter().position(|&w| w == v).expect("on walk");
                best = best.max(walk.len() - pos);
            }
            for w in walk.drain(..) {
                state[w] = 2;
            }
        }
        best
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Transformation) -> Result<Transformation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Transformation {
            images: self.images.iter().map(|&x| other.apply(x)).collect(),
        })
    }
}

/// The arc transformation `(a → b)` of degree `n`.
pub fn arc_transform(a: usize, b: usize, n: usize) -> Result<Transformation> {
    if a == b {
        return Err(Error::SameEndpoints(a));
    }
    for v in [a, b] {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    let mut t = Transformation::identity(n);
    t.images[a - 1] = b;
    Ok(t)
}

/// Left-to-right product `αβ`.
pub fn compose(alpha: &Transformation, beta: &Transformation) -> Result<Transformation> {
    alpha.then(beta)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub image: Vec<usize>,
    pub kernel: Vec<Vec<usize>>,
    pub rank: usize,
}

pub fn invariants_of(alpha: &Transformation) -> Invariants {
    let image = alpha.image();
    Invariants {
        rank: image.len(),
        image,
        kernel: alpha.kernel(),
    }
}

pub fn longest_cycle(alpha: &Transformation) -> usize {
    alpha.longest_cycle()
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Transformation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse {
            line: 1,
            message: format!("{m}: {s:?}"),
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("expected [i1, ..., in]"))?;
        let images = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| bad("invalid image")))
                .collect::<Result<Vec<usize>>>()?
        };
        Transformation::new(images)
    }
}

impl TryFrom<Vec<usize>> for Transformation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Transformation::new(v)
    }
}

impl From<Transformation> for Vec<usize> {
    fn from(t: Transformation) -> Self {
        t.images
    }
}

/// Transformations of degree at most 16 packed four bits per point
/// (0-based images), used by the enumeration kernels.
pub(crate) mod packed {
    use super::Transformation;

    pub const MAX_DEGREE: usize = 16;
    const LOW: u64 = 0x1111_1111_1111_1111;
    const HIGH: u64 = 0x8888_8888_8888_8888;
    const SEVEN: u64 = 0x7777_7777_7777_7777;

    #[inline]
    pub fn valid_mask(n: usize) -> u64 {
        if n >= 16 {
            u64::MAX
        } else {
            (1u64 << (4 * n)) - 1
        }
    }

    #[inline]
    pub fn get(x: u64, v: usize) -> usize {
        (x >> (4 * v) & 0xF) as usize
    }

    pub fn identity(n: usize) -> u64 {
        (0..n).fold(0, |acc, v| acc | (v as u64) << (4 * v))
    }

    /// `(a → b)` with 0-based endpoints.
    pub fn arc(a: usize, b: usize, n: usize) -> u64 {
        let id = identity(n);
        id & !(0xF << (4 * a)) | (b as u64) << (4 * a)
    }

    pub fn pack(t: &Transformation) -> u64 {
        t.images()
            .iter()
            .enumerate()
            .fold(0, |acc, (v, &img)| acc | ((img - 1) as u64) << (4 * v))
    }

    pub fn unpack(x: u64, n: usize) -> Transformation {
        Transformation::new((0..n).map(|v| get(x, v) + 1).collect()).expect("packed map is valid")
    }

    /// `xy`, i.e. apply `x` then `y`.
    #[inline]
    pub fn mul(x: u64, y: u64, n: usize) -> u64 {
        let mut z = 0;
        for v in 0..n {
            z |= (get(y, get(x, v)) as u64) << (4 * v);
        }
        z
    }

    /// `x · (a → b)`: every point mapped to `a` is redirected to `b`.
    #[inline]
    pub fn right_arc(x: u64, a: usize, b: usize, n: usize) -> u64 {
        let t = x ^ (LOW * a as u64);
        // high bit of each nibble set where the nibble of t is non-zero
        let nonzero = (((t & SEVEN) + SEVEN) | t) & HIGH;
        let is_a = (!nonzero & HIGH) >> 3;
        let select = (is_a * 0xF) & valid_mask(n);
        x ^ (LOW * (a ^ b) as u64) & select
    }

    /// `(a → b) · x`: only the image of `a` changes, to the image of `b`.
    #[inline]
    pub fn left_arc(a: usize, b: usize, x: u64) -> u64 {
        let img = get(x, b) as u64;
        x & !(0xF << (4 * a)) | img << (4 * a)
    }

    #[inline]
    pub fn image_mask(x: u64, n: usize) -> u32 {
        (0..n).fold(0, |m, v| m | 1 << get(x, v))
    }

    #[inline]
    pub fn rank(x: u64, n: usize) -> usize {
        image_mask(x, n).count_ones() as usize
    }

    pub fn longest_cycle(x: u64, n: usize) -> usize {
        let mut state = [0u8; MAX_DEGREE];
        let mut walk = [0u8; MAX_DEGREE];
        let mut best = 0;
        for s in 0..n {
            let mut len = 0;
            let mut v = s;
            while state[v] == 0 {
                state[v] = 1;
                walk[len] = v as u8;
                len += 1;
                v = get(x, v);
            }
            if state[v] == 1 {
                let pos = walk[..len].iter().position(|&w| w as usize == v).expect("on walk");
                best = best.max(len - pos);
            }
            for &w in &walk[..len] {
                state[w as usize] = 2;
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[usize]) -> Transformation {
        Transformation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn arcs_and_products() {
        assert_eq!(arc_transform(1, 2, 3).unwrap(), t(&[2, 2, 3]));
        assert_eq!(arc_transform(2, 2, 3), Err(Error::SameEndpoints(2)));
        let p = compose(&arc_transform(1, 2, 3).unwrap(), &arc_transform(2, 3, 3).unwrap()).unwrap();
        assert_eq!(p, t(&[3, 3, 3]));
        // β fixing im(α) leaves α unchanged
        let alpha = t(&[2, 2, 3]);
        let beta = t(&[3, 2, 3]);
        assert_eq!(compose(&alpha, &beta).unwrap(), alpha);
        assert_eq!(
            compose(&alpha, &Transformation::identity(2)),
            Err(Error::DegreeMismatch(3, 2))
        );
    }

    #[test]
    fn invariants() {
        let inv = invariants_of(&arc_transform(1, 2, 3).unwrap());
        assert_eq!(inv.image, vec![2, 3]);
        assert_eq!(inv.kernel, vec![vec![1, 2], vec![3]]);
        assert_eq!(inv.rank, 2);
        assert_eq!(t(&[3, 3, 3]).rank(), 1);
    }

    #[test]
    fn cycles() {
        assert_eq!(arc_transform(1, 2, 3).unwrap().longest_cycle(), 1);
        assert_eq!(t(&[2, 3, 1]).longest_cycle(), 3);
        // (3→4)(2→3)(1→2)(4→1) on C_4
        let word = [(3, 4), (2, 3), (1, 2), (4, 1)];
        let alpha = word
            .iter()
            .map(|&(a, b)| arc_transform(a, b, 4).unwrap())
            .reduce(|x, y| compose(&x, &y).unwrap())
            .unwrap();
        assert_eq!(alpha, t(&[2, 3, 1, 1]));
        assert_eq!(alpha.longest_cycle(), 3);
    }

    #[test]
    fn text_form() {
        let a = t(&[2, 2, 3]);
        assert_eq!(a.to_string(), "[2, 2, 3]");
        assert_eq!("[2, 2, 3]".parse::<Transformation>().unwrap(), a);
        assert!("[4, 1, 1]".parse::<Transformation>().is_err());
    }

    #[test]
    fn packed_kernel_matches_plain() {
        let n = 5;
        let maps = [t(&[2, 2, 3, 5, 5]), t(&[1, 1, 1, 4, 2]), t(&[5, 4, 3, 2, 1])];
        for a in &maps {
            let pa = packed::pack(a);
            assert_eq!(packed::unpack(pa, n), *a);
            assert_eq!(packed::rank(pa, n), a.rank());
            assert_eq!(packed::longest_cycle(pa, n), a.longest_cycle());
            for b in &maps {
                let pb = packed::pack(b);
                assert_eq!(packed::unpack(packed::mul(pa, pb, n), n), compose(a, b).unwrap());
            }
            for x in 1..=n {
                for y in 1..=n {
                    if x == y {
                        continue;
                    }
                    let arc = arc_transform(x, y, n).unwrap();
                    let r = packed::right_arc(pa, x - 1, y - 1, n);
                    assert_eq!(packed::unpack(r, n), compose(a, &arc).unwrap());
                    let l = packed::left_arc(x - 1, y - 1, pa);
                    assert_eq!(packed::unpack(l, n), compose(&arc, a).unwrap());
                    assert_eq!(packed::arc(x - 1, y - 1, n), packed::pack(&arc));
                }
            }
        }
    }
}
