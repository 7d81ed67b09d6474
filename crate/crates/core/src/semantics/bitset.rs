use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

/// A subset of `{0, .., 63}`: worlds of a finite frame, or domain elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitSet(pub u64);

pub type WorldSet = BitSet;

pub const MAX_ELEMENTS: usize = 64;

impl BitSet {
    pub const EMPTY: BitSet = BitSet(0);

    /// `{0, .., n-1}`
    pub fn full(n: usize) -> BitSet {
        debug_assert!(n <= MAX_ELEMENTS);
        if n >= 64 {
            BitSet(u64::MAX)
        } else {
            BitSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> BitSet {
        BitSet(1u64 << i)
    }

    pub fn from_iter_indices(items: impl IntoIterator<Item = usize>) -> BitSet {
        items.into_iter().fold(BitSet::EMPTY, |s, i| s.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    #[must_use]
    pub fn with(self, i: usize) -> BitSet {
        BitSet(self.0 | 1u64 << i)
    }

    #[must_use]
    pub fn without(self, i: usize) -> BitSet {
        BitSet(self.0 & !(1u64 << i))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: BitSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: BitSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement relative to `{0, .., n-1}`.
    #[must_use]
    pub fn complement(self, n: usize) -> BitSet {
        BitSet(!self.0 & BitSet::full(n).0)
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = BitSet> {
        let mask = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == mask { None } else { Some((s.wrapping_sub(mask)) & mask) };
            Some(BitSet(s))
        })
    }
}

impl BitOr for BitSet {
    type Output = BitSet;
    fn bitor(self, rhs: BitSet) -> BitSet {
        BitSet(self.0 | rhs.0)
    }
}

impl BitAnd for BitSet {
    type Output = BitSet;
    fn bitand(self, rhs: BitSet) -> BitSet {
        BitSet(self.0 & rhs.0)
    }
}

impl Sub for BitSet {
    type Output = BitSet;
    fn sub(self, rhs: BitSet) -> BitSet {
        BitSet(self.0 & !rhs.0)
    }
}

/// Complement within all 64 positions; mask the result when a universe is
/// smaller.
impl Not for BitSet {
    type Output = BitSet;
    fn not(self) -> BitSet {
        BitSet(!self.0)
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_powerset() {
        let s = BitSet::from_iter_indices([0, 2, 5]);
        let all: Vec<BitSet> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|x| x.is_subset(s)));
        assert_eq!(BitSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn basic_ops() {
        let a = BitSet::from_iter_indices([1, 3]);
        assert_eq!(a.complement(4), BitSet::from_iter_indices([0, 2]));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(a.first(), Some(1));
        assert_eq!(BitSet::full(64).len(), 64);
    }
}
