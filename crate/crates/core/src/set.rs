//! Small subsets of a ground set `{0, .., 63}` packed into a machine word.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Maximum ground-set size supported by [`ElementSet`].
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `{0, .., 63}`.
///
/// The total order is lexicographic on the sorted element lists, so that
/// `{0,5} < {1}` and `{0,1} < {0,1,2}`. This is the order used whenever
/// flats are reported "sorted by element sets".
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1u64 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = 0u64;
        for e in it {
            s |= 1u64 << e;
        }
        ElementSet(s)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << e);
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u64 << e))
    }

    pub fn union(self, o: Self) -> Self {
        ElementSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        ElementSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        ElementSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_disjoint(self, o: Self) -> bool {
        self.0 & o.0 == 0
    }

    /// Least element, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image under an element map `e -> map[e]`.
    pub fn map(self, map: &[usize]) -> Self {
        let mut out = 0u64;
        for e in self.iter() {
            out |= 1u64 << map[e];
        }
        ElementSet(out)
    }

    /// All subsets of `self`, in increasing numeric order of their bit patterns.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, cur: 0, done: false }
    }

    /// Compact label: concatenated digits when all elements are below 10,
    /// comma separated otherwise. The empty set prints as `∅`.
    pub fn label(self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        if self.max().unwrap_or(0) < 10 {
            self.iter().map(|e| e.to_string()).collect::<String>()
        } else {
            self.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.0 ^ other.0;
        if d == 0 {
            return Ordering::Equal;
        }
        let m = d.trailing_zeros();
        let above = if m == 63 { 0 } else { u64::MAX << (m + 1) };
        if self.0 >> m & 1 == 1 {
            // `self` has the first differing element; `other` continues with a larger one or stops.
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_elements(iter)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let e = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(e)
        }
    }
}

pub struct Subsets {
    mask: u64,
    cur: u64,
    done: bool,
}

impl Iterator for Subsets {
    type Item = ElementSet;
    fn next(&mut self) -> Option<ElementSet> {
        if self.done {
            return None;
        }
        let out = ElementSet(self.cur);
        if self.cur == self.mask {
            self.done = true;
        } else {
            self.cur = (self.cur.wrapping_sub(self.mask)) & self.mask;
        }
        Some(out)
    }
}

/// All `k`-element subsets of `{0..n-1}` in lexicographic order of element lists.
pub fn k_subsets(n: usize, k: usize) -> Vec<ElementSet> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(ElementSet::from_elements(idx.iter().copied()));
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
