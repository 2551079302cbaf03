//! Shared machinery for anything that looks like a finite module: spans,
//! submodule lattices and maps determined by generator images.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

pub(crate) const UNSET: usize = usize::MAX;

pub(crate) trait Linear {
    fn size(&self) -> usize;
    fn zero(&self) -> usize;
    fn plus(&self, a: usize, b: usize) -> usize;
    /// Number of scalars acting. A single scalar means the identity only,
    /// i.e. the structure is treated as an abelian group.
    fn scalars(&self) -> usize;
    fn scale(&self, s: usize, x: usize) -> usize;

    /// The cyclic submodule generated by `x`, sorted.
    fn cyclic(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::new();
        if self.scalars() == 1 {
            let mut cur = self.zero();
            loop {
                out.push(cur);
                cur = self.plus(cur, x);
                if cur == self.zero() {
                    break;
                }
            }
        } else {
            out.extend((0..self.scalars()).map(|s| self.scale(s, x)));
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Additive reduct of a [`Linear`] structure.
pub(crate) struct Additive<'a, T>(pub &'a T);

impl<T: Linear> Linear for Additive<'_, T> {
    fn size(&self) -> usize {
        self.0.size()
    }
    fn zero(&self) -> usize {
        self.0.zero()
    }
    fn plus(&self, a: usize, b: usize) -> usize {
        self.0.plus(a, b)
    }
    fn scalars(&self) -> usize {
        1
    }
    fn scale(&self, _s: usize, x: usize) -> usize {
        x
    }
}

/// `base + cyclic`, for `base` and `cyclic` submodules. Sorted.
pub(crate) fn sum_of<L: Linear>(l: &L, base: &[usize], other: &[usize]) -> Vec<usize> {
    let mut mark = vec![false; l.size()];
    let mut out = Vec::with_capacity(base.len() * other.len());
    for &b in base {
        for &c in other {
            let s = l.plus(b, c);
            if !mark[s] {
                mark[s] = true;
                out.push(s);
            }
        }
    }
    out.sort_unstable();
    out
}

/// The submodule generated by `gens`.
pub(crate) fn span<L: Linear>(l: &L, gens: &[usize]) -> Vec<usize> {
    let mut cur = vec![l.zero()];
    for &g in gens {
        if cur.binary_search(&g).is_err() {
            cur = sum_of(l, &cur, &l.cyclic(g));
        }
    }
    cur
}

/// Greedy generating set of the submodule `elements` (sorted): repeatedly
/// take the smallest element outside the current span.
pub(crate) fn greedy_generators<L: Linear>(l: &L, elements: &[usize]) -> Vec<usize> {
    let mut cur = vec![l.zero()];
    let mut gens = Vec::new();
    for &x in elements {
        if cur.binary_search(&x).is_err() {
            gens.push(x);
            cur = sum_of(l, &cur, &l.cyclic(x));
        }
    }
    gens
}

/// Every submodule, sorted by size and then lexicographically.
pub(crate) fn submodule_lattice<L: Linear>(l: &L) -> Vec<Vec<usize>> {
    let cyclics: Vec<Vec<usize>> = (0..l.size()).map(|x| l.cyclic(x)).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let start = vec![l.zero()];
    seen.insert(start.clone());
    let mut queue = vec![start];
    while let Some(sub) = queue.pop() {
        let mut inside = vec![false; l.size()];
        for &x in &sub {
            inside[x] = true;
        }
        for x in 0..l.size() {
            if inside[x] {
                continue;
            }
            let next = sum_of(l, &sub, &cyclics[x]);
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Scratch buffers for [`extend_map`], reused across many calls.
pub(crate) struct MapScratch {
    pub table: Vec<usize>,
    queue: Vec<usize>,
    steps: Vec<Vec<(usize, usize)>>,
}

impl MapScratch {
    pub fn new(domain_size: usize) -> Self {
        MapScratch {
            table: vec![UNSET; domain_size],
            queue: Vec::new(),
            steps: Vec::new(),
        }
    }
}

/// Tries to extend `gens[i] ↦ images[i]` to a linear map on the span of
/// `gens`. On success `scratch.table` holds the map on the span and `UNSET`
/// elsewhere.
///
/// Every edge `x → x + s·g` of the span is checked, so a conflict-free run
/// means the assignment factors through the span.
pub(crate) fn extend_map<D: Linear, C: Linear>(
    dom: &D,
    gens: &[usize],
    cod: &C,
    images: &[usize],
    scratch: &mut MapScratch,
) -> bool {
    debug_assert_eq!(dom.scalars(), cod.scalars());
    debug_assert_eq!(gens.len(), images.len());
    scratch.table.clear();
    scratch.table.resize(dom.size(), UNSET);
    scratch.queue.clear();
    scratch.steps.clear();
    for (&g, &m) in gens.iter().zip(images) {
        let mut pairs: Vec<(usize, usize)> = (0..dom.scalars()).map(|s| (dom.scale(s, g), cod.scale(s, m))).collect();
        pairs.sort_unstable();
        pairs.dedup();
        // two different images for one multiple of g: not even well defined
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return false;
        }
        scratch.steps.push(pairs);
    }
    scratch.table[dom.zero()] = cod.zero();
    scratch.queue.push(dom.zero());
    let mut head = 0;
    while head < scratch.queue.len() {
        let x = scratch.queue[head];
        head += 1;
        let fx = scratch.table[x];
        for pairs in &scratch.steps {
            for &(sg, sm) in pairs {
                let y = dom.plus(x, sg);
                let v = cod.plus(fx, sm);
                let slot = &mut scratch.table[y];
                if *slot == UNSET {
                    *slot = v;
                    scratch.queue.push(y);
                } else if *slot != v {
                    return false;
                }
            }
        }
    }
    true
}

/// Calls `f` on every assignment picking one entry from each candidate list,
/// in lexicographic order of positions.
pub(crate) fn for_each_assignment<B>(
    candidates: &[Vec<usize>],
    mut f: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    let k = candidates.len();
    let mut digits = vec![0usize; k];
    let mut current: Vec<usize> = candidates.iter().map(|c| c[0]).collect();
    loop {
        if let ControlFlow::Break(b) = f(&current) {
            return Some(b);
        }
        // odometer, last position fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < candidates[pos].len() {
                current[pos] = candidates[pos][digits[pos]];
                break;
            }
            digits[pos] = 0;
            current[pos] = candidates[pos][0];
        }
    }
}

pub(crate) fn additive_order<L: Linear>(l: &L, x: usize) -> usize {
    let mut cur = x;
    let mut n = 1;
    while cur != l.zero() {
        cur = l.plus(cur, x);
        n += 1;
    }
    n
}
