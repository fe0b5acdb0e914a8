//! Small fixed-capacity element sets, used for carriers of lattices and rings.
//!
//! Elements are dense indices `0..n` with `n <= 128`, so a set is a `u128`
//! bitmask. All the workbench's carriers (lattices up to direct products of
//! size 36, ideal lattices, ring carriers up to 100) fit comfortably.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

/// Hard cap on carrier sizes; everything in this crate indexes into a `u128`.
pub const MAX_ELEMS: usize = 128;

/// A subset of a carrier `{0, .., n-1}`, stored as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet(pub u128);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn full(n: usize) -> ElemSet {
        assert!(n <= MAX_ELEMS);
        if n == MAX_ELEMS {
            ElemSet(u128::MAX)
        } else {
            ElemSet((1u128 << n) - 1)
        }
    }

    pub fn single(i: usize) -> ElemSet {
        ElemSet(1u128 << i)
    }

    pub fn from_iter(iter: impl IntoIterator<Item = usize>) -> ElemSet {
        let mut s = ElemSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn with(self, i: usize) -> ElemSet {
        ElemSet(self.0 | 1u128 << i)
    }

    pub fn without(self, i: usize) -> ElemSet {
        ElemSet(self.0 & !(1u128 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Least element index, if any.
    pub fn min_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// All subsets of this set, the empty set first, the set itself last.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, cur: 0, done: false }
    }
}

impl BitAnd for ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & rhs.0)
    }
}

impl BitOr for ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 | rhs.0)
    }
}

impl BitXor for ElemSet {
    type Output = ElemSet;
    fn bitxor(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 ^ rhs.0)
    }
}

impl Sub for ElemSet {
    type Output = ElemSet;
    fn sub(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> ElemSet {
        ElemSet::from_iter(iter)
    }
}

pub struct BitIter(u128);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// Iterates subsets of a mask in the standard `(cur - mask) & mask` order.
pub struct Subsets {
    mask: u128,
    cur: u128,
    done: bool,
}

impl Iterator for Subsets {
    type Item = ElemSet;
    fn next(&mut self) -> Option<ElemSet> {
        if self.done {
            return None;
        }
        let out = ElemSet(self.cur);
        if self.cur == self.mask {
            self.done = true;
        } else {
            self.cur = (self.cur.wrapping_sub(self.mask)) & self.mask;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_powerset() {
        let s = ElemSet::from_iter([0, 2, 5]);
        let all: Vec<ElemSet> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], ElemSet::EMPTY);
        assert_eq!(*all.last().unwrap(), s);
        for sub in &all {
            assert!(sub.is_subset(s));
        }
    }

    #[test]
    fn iter_roundtrip() {
        let s = ElemSet::from_iter([1, 3, 4, 7]);
        assert_eq!(s.len(), 4);
        assert_eq!(ElemSet::from_iter(s.iter()), s);
        assert_eq!(s.min_elem(), Some(1));
    }
}
