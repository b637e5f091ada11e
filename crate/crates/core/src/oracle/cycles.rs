use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::oracle::semigroup::{check_degree, ElementCap};
use crate::oracle::transformation::packed;

/// `l(D)`: the longest cycle of any element of `⟨D⟩`, by enumeration.
pub fn l_brute(d: &Digraph) -> Result<usize> {
    l_brute_with_cap(d, ElementCap::from_env())
}

pub fn l_brute_with_cap(d: &Digraph, cap: ElementCap) -> Result<usize> {
    search(d, cap, 0, usize::MAX)
}

/// Whether `l(D) > k`, enumerating only as much of `⟨D⟩` as needed.
pub fn l_brute_exceeds(d: &Digraph, k: usize, cap: ElementCap) -> Result<bool> {
    Ok(search(d, cap, k, k)? > k)
}

// Elements are expanded by right multiplication, highest rank first. A
// cycle never exceeds the rank and right multiplication never raises it, so
// once the current rank is at most max(best, floor) nothing left can beat
// the answer. Also returns as soon as best > stop_above.
fn search(d: &Digraph, cap: ElementCap, floor: usize, stop_above: usize) -> Result<usize> {
    check_degree(d)?;
    let n = d.n();
    let gens: Vec<(usize, usize)> = d.arcs().iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    let mut buckets: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    let mut seen = FxHashSet::default();
    for &(a, b) in &gens {
        let x = packed::arc(a, b, n);
        seen.insert(x);
        buckets[n - 1].push(x);
    }
    let mut best = 1;
    for r in (1..n).rev() {
        if r <= best.max(floor) {
            break;
        }
        while let Some(x) = buckets[r].pop() {
            best = best.max(packed::longest_cycle(x, n));
            if best > stop_above || best == r {
                return Ok(best);
            }
            for &(a, b) in &gens {
                let y = packed::right_arc(x, a, b, n);
                if seen.insert(y) {
                    buckets[packed::rank(y, n)].push(y);
                }
            }
            if seen.len() > cap.0 {
                return Err(Error::ElementCap {
                    cap: cap.0,
                    partial: seen.len(),
                });
            }
        }
    }
    Ok(best)
}
