//! Packed vertex sets.
//!
//! Adjacency rows and vertex subsets share one representation: a slice of
//! `u64` words where bit `v % 64` of word `v / 64` marks vertex `v`.

use std::fmt;

/// Number of words needed to hold `n` bits.
#[inline]
pub const fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn test(words: &[u64], v: usize) -> bool {
    (words[v >> 6] >> (v & 63)) & 1 == 1
}

#[inline]
pub fn set(words: &mut [u64], v: usize) {
    words[v >> 6] |= 1u64 << (v & 63);
}

#[inline]
pub fn clear(words: &mut [u64], v: usize) {
    words[v >> 6] &= !(1u64 << (v & 63));
}

#[inline]
pub fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub fn count_and(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

#[inline]
pub fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

#[inline]
pub fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Lowest set bit, if any.
#[inline]
pub fn first(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| (i << 6) | w.trailing_zeros() as usize)
}

/// Iterator over the set bits of a word slice, ascending.
#[derive(Clone)]
pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some((self.index << 6) | bit)
    }
}

#[inline]
pub fn ones(words: &[u64]) -> Ones<'_> {
    Ones {
        words,
        index: 0,
        current: words.first().copied().unwrap_or(0),
    }
}

/// An owned set of vertices drawn from `0..capacity`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; words_for(capacity)],
        }
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::new(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let hi = (lo + 64).min(n);
            *w = if hi - lo == 64 {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            };
        }
        s
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        VertexSet { words }
    }

    pub fn from_vertices(capacity: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::new(capacity);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        set(&mut self.words, v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        clear(&mut self.words, v);
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.words.len() * 64 && test(&self.words, v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        count(&self.words)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        is_empty(&self.words)
    }

    pub fn iter(&self) -> Ones<'_> {
        ones(&self.words)
    }

    pub fn first(&self) -> Option<usize> {
        first(&self.words)
    }

    pub fn as_words(&self) -> &[u64] {
        &self.words
    }

    pub fn intersect_with(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a |= b;
        }
    }

    pub fn subtract(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &[u64]) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
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
    fn full_set_respects_capacity() {
        for n in [0, 1, 63, 64, 65, 130] {
            let s = VertexSet::full(n);
            assert_eq!(s.len(), n);
            assert_eq!(s.iter().collect::<Vec<_>>(), (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn ones_crosses_word_boundaries() {
        let s = VertexSet::from_vertices(200, [0, 63, 64, 127, 199]);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 127, 199]);
        assert_eq!(s.first(), Some(0));
        assert!(s.contains(127) && !s.contains(128));
    }
}
