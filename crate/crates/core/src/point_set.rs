//! Fixed-width sets of point indices.

use std::cmp::Ordering;
use std::fmt;

/// Largest number of points a space may have.
pub const MAX_POINTS: usize = 64;

/// A set of point indices in `0..64`, stored as a single machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(i: usize) -> Self {
        PointSet(1u64 << i)
    }

    #[inline]
    pub const fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, ..., n-1}`.
    #[inline]
    pub const fn complement(self, n: usize) -> PointSet {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    #[inline]
    pub const fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_proper_subset(self, other: PointSet) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    #[inline]
    pub const fn intersects(self, other: PointSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Whether every member is below `n`.
    #[inline]
    pub const fn within(self, n: usize) -> bool {
        self.is_subset(PointSet::full(n))
    }

    /// Canonical order: ascending cardinality, then lexicographic on the
    /// ascending index lists.
    pub fn canonical_cmp(&self, other: &PointSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Iterates over every subset of `universe`, starting from the empty set.
pub fn subsets_of(universe: PointSet) -> impl Iterator<Item = PointSet> {
    let u = universe.bits();
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == u {
            None
        } else {
            Some(cur.wrapping_sub(u) & u)
        };
        Some(PointSet(cur))
    })
}
