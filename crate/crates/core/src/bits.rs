//! Fixed-universe bitsets used for adjacency rows and vertex sets.

use std::fmt;

const WORD: usize = u64::BITS as usize;

/// A bitset over `0..universe`. Bits beyond the universe are always clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    universe: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn new(universe: usize) -> Self {
        Bits {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    /// All bits in `range` set.
    pub fn with_range(universe: usize, range: std::ops::Range<usize>) -> Self {
        let mut b = Bits::new(universe);
        for i in range {
            b.insert(i);
        }
        b
    }

    pub fn from_iter_in(universe: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Bits::new(universe);
        for i in ids {
            b.insert(i);
        }
        b
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.universe);
        let (w, m) = (i / WORD, 1u64 << (i % WORD));
        let was = self.words[w] & m != 0;
        self.words[w] |= m;
        !was
    }

    #[inline]
    pub fn remove(&mut self, i: usize) -> bool {
        debug_assert!(i < self.universe);
        let (w, m) = (i / WORD, 1u64 << (i % WORD));
        let was = self.words[w] & m != 0;
        self.words[w] &= !m;
        was
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD] & (1u64 << (i % WORD)) != 0
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `|self ∩ other|` without allocating.
    #[inline]
    pub fn and_count(&self, other: &Bits) -> usize {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `|self ∩ a ∩ b|` without allocating.
    #[inline]
    pub fn and2_count(&self, a: &Bits, b: &Bits) -> usize {
        self.words
            .iter()
            .zip(&a.words)
            .zip(&b.words)
            .map(|((x, y), z)| (x & y & z).count_ones() as usize)
            .sum()
    }

    pub fn and(&self, other: &Bits) -> Bits {
        let mut out = self.clone();
        out.and_assign(other);
        out
    }

    #[inline]
    pub fn and_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn or_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference(&self, other: &Bits) -> Bits {
        debug_assert_eq!(self.universe, other.universe);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Set bits in increasing order.
    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    /// The `count` smallest set bits.
    pub fn first_n(&self, count: usize) -> Vec<usize> {
        self.iter().take(count).collect()
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_count() {
        let mut b = Bits::new(130);
        assert!(b.insert(0));
        assert!(b.insert(64));
        assert!(b.insert(129));
        assert!(!b.insert(64));
        assert_eq!(b.count(), 3);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert!(b.remove(64));
        assert!(!b.contains(64));
        assert!(!b.contains(500));
        assert_eq!(b.count(), 2);
    }

    #[test]
    fn intersections() {
        let a = Bits::with_range(100, 10..70);
        let b = Bits::with_range(100, 60..90);
        assert_eq!(a.and_count(&b), 10);
        assert_eq!(
            a.and(&b).iter().collect::<Vec<_>>(),
            (60..70).collect::<Vec<_>>()
        );
        assert_eq!(a.difference(&b).count(), 50);
        let c = Bits::with_range(100, 65..66);
        assert_eq!(a.and2_count(&b, &c), 1);
        assert!(c.is_subset(&a));
        assert!(!a.is_subset(&c));
    }

    #[test]
    fn empty_universe() {
        let b = Bits::new(0);
        assert_eq!(b.count(), 0);
        assert_eq!(b.iter().count(), 0);
    }
}
