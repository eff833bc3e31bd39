//! Fixed-width vertex sets.
//!
//! Every graph in this crate stores its adjacency as one [`VertexSet`] per
//! vertex, so neighbourhood intersections are a handful of word operations.

use std::fmt;

const WORDS: usize = 4;

/// Largest vertex count any graph in this crate can hold.
pub const MAX_VERTICES: usize = WORDS * 64;

/// A set of vertices drawn from `0..MAX_VERTICES`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet([u64; WORDS]);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet([0; WORDS]);

    /// The set `{0, 1, ..., n-1}`.
    pub fn prefix(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        let mut words = [0u64; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        VertexSet(words)
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.0[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
        out
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
        out
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= !b;
        }
        out
    }

    #[inline]
    pub fn intersection_len(&self, other: &Self) -> usize {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Elements strictly greater than `v`.
    pub fn above(&self, v: usize) -> Self {
        self.difference(&Self::prefix((v + 1).min(MAX_VERTICES)))
    }

    pub fn iter(&self) -> Iter {
        Iter { words: self.0, word: 0 }
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_and_above() {
        assert_eq!(VertexSet::prefix(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::prefix(70).len(), 70);
        assert_eq!(VertexSet::prefix(MAX_VERTICES).len(), MAX_VERTICES);
        let s: VertexSet = [1, 5, 64, 200].into_iter().collect();
        assert_eq!(s.above(5).iter().collect::<Vec<_>>(), vec![64, 200]);
        assert_eq!(s.above(MAX_VERTICES - 1), VertexSet::EMPTY);
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [0, 3, 130].into_iter().collect();
        let b: VertexSet = [3, 4, 130].into_iter().collect();
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![3, 130]);
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![0]);
        assert_eq!(a.intersection_len(&b), 2);
        assert_eq!(b.first(), Some(3));
        assert!(!a.contains(MAX_VERTICES + 3));
    }
}
