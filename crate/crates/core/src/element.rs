//! Atoms and bit-set encoded elements of a finite relation algebra.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Hard limit on the number of atoms; an element is a single `u64` word.
pub const MAX_ATOMS: usize = 64;

/// Dense index of an atom inside its owning algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AtomId(pub u8);

impl AtomId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for AtomId {
    fn from(i: usize) -> Self {
        debug_assert!(i < MAX_ATOMS);
        AtomId(i as u8)
    }
}

/// A set of atoms, i.e. an element of the algebra written as a union of atoms.
///
/// The empty set is `0`, the set of all atoms is `1` and subset inclusion is
/// the lattice order.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub fn full(width: usize) -> ElementSet {
        debug_assert!(width <= MAX_ATOMS);
        if width == MAX_ATOMS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << width) - 1)
        }
    }

    #[inline]
    pub fn singleton(a: AtomId) -> ElementSet {
        ElementSet(1u64 << a.0)
    }

    pub fn from_atoms<I: IntoIterator<Item = AtomId>>(atoms: I) -> ElementSet {
        atoms.into_iter().fold(ElementSet::EMPTY, |s, a| s.with(a))
    }

    #[inline]
    pub fn contains(self, a: AtomId) -> bool {
        self.0 >> a.0 & 1 == 1
    }

    #[inline]
    pub fn with(self, a: AtomId) -> ElementSet {
        ElementSet(self.0 | 1u64 << a.0)
    }

    #[inline]
    pub fn without(self, a: AtomId) -> ElementSet {
        ElementSet(self.0 & !(1u64 << a.0))
    }

    #[inline]
    pub fn union(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 & !other.0)
    }

    /// Complement relative to an algebra with `width` atoms.
    #[inline]
    pub fn complement(self, width: usize) -> ElementSet {
        ElementSet(!self.0 & ElementSet::full(width).0)
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// The lowest atom, if any.
    #[inline]
    pub fn first(self) -> Option<AtomId> {
        if self.0 == 0 {
            None
        } else {
            Some(AtomId(self.0.trailing_zeros() as u8))
        }
    }

    /// True when no member lies at or beyond `width`.
    #[inline]
    pub fn fits(self, width: usize) -> bool {
        self.is_subset(ElementSet::full(width))
    }

    /// Members in ascending atom order.
    pub fn iter(self) -> Atoms {
        Atoms(self.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|a| a.0)).finish()
    }
}

impl IntoIterator for ElementSet {
    type Item = AtomId;
    type IntoIter = Atoms;
    fn into_iter(self) -> Atoms {
        self.iter()
    }
}

impl FromIterator<AtomId> for ElementSet {
    fn from_iter<I: IntoIterator<Item = AtomId>>(iter: I) -> Self {
        ElementSet::from_atoms(iter)
    }
}

/// Ascending iterator over the atoms of an [`ElementSet`].
#[derive(Clone, Debug)]
pub struct Atoms(u64);

impl Iterator for Atoms {
    type Item = AtomId;

    #[inline]
    fn next(&mut self) -> Option<AtomId> {
        if self.0 == 0 {
            return None;
        }
        let a = self.0.trailing_zeros() as u8;
        self.0 &= self.0 - 1;
        Some(AtomId(a))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Atoms {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_ascending() {
        let s = ElementSet::from_atoms([AtomId(5), AtomId(0), AtomId(3)]);
        let v: Vec<u8> = s.iter().map(|a| a.0).collect();
        assert_eq!(v, vec![0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.first(), Some(AtomId(0)));
    }

    #[test]
    fn full_width_64() {
        assert_eq!(ElementSet::full(64).len(), 64);
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
        assert!(ElementSet(0b1000).fits(4));
        assert!(!ElementSet(0b10000).fits(4));
    }

    #[test]
    fn complement_stays_in_width() {
        let s = ElementSet(0b0101);
        assert_eq!(s.complement(4), ElementSet(0b1010));
    }
}
