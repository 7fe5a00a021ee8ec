use std::fmt;

use crate::bits::Bits;

/// A set of vertex indices over a fixed universe, with cached cardinality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: Bits,
    len: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            bits: Bits::new(universe),
            len: 0,
        }
    }

    /// Panics if an id is outside the universe.
    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::new(universe);
        for i in ids {
            assert!(i < universe, "vertex {i} outside universe {universe}");
            s.insert(i);
        }
        s
    }

    pub fn range(universe: usize, range: std::ops::Range<usize>) -> Self {
        VertexSet::from_ids(universe, range)
    }

    pub(crate) fn from_bits(bits: Bits) -> Self {
        let len = bits.count();
        VertexSet { bits, len }
    }

    pub(crate) fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn universe(&self) -> usize {
        self.bits.universe()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let added = self.bits.insert(v);
        self.len += added as usize;
        added
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let removed = self.bits.remove(v);
        self.len -= removed as usize;
        removed
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn ids(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_bits(self.bits.and(&other.bits))
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.bits.and_count(&other.bits)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_bits(self.bits.difference(&other.bits))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut b = self.bits.clone();
        b.or_assign(&other.bits);
        VertexSet::from_bits(b)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
