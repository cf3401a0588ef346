//! Fixed-width bitsets used for edge sets and vertex sets.

use std::fmt;

const WORD: usize = 64;

/// A fixed-width set of small non-negative integers.
///
/// All binary operations require both operands to have the same width.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    words: Vec<u64>,
    width: usize,
}

/// Edge set over a graph's canonical edge indices.
pub type EdgeSet = BitSet;

impl BitSet {
    pub fn new(width: usize) -> Self {
        BitSet {
            words: vec![0; width.div_ceil(WORD)],
            width,
        }
    }

    pub fn full(width: usize) -> Self {
        let mut s = Self::new(width);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, items: I) -> Self {
        let mut s = Self::new(width);
        for i in items {
            s.insert(i);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.width % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.width, "bit {i} out of range for width {}", self.width);
        let (w, b) = (i / WORD, i % WORD);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn remove(&mut self, i: usize) -> bool {
        assert!(i < self.width, "bit {i} out of range for width {}", self.width);
        let (w, b) = (i / WORD, i % WORD);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.width && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.width
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !*b;
        }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Size of `self ∩ other`.
    pub fn intersection_len(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Size of `self \ other`.
    pub fn difference_len(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    /// Lowest index not in the set, if any.
    pub fn first_missing(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != u64::MAX {
                let i = wi * WORD + (!w).trailing_zeros() as usize;
                return (i < self.width).then_some(i);
            }
        }
        None
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + b)
                }
            })
        })
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
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn full_respects_width() {
        for width in [0, 1, 63, 64, 65, 130] {
            let s = BitSet::full(width);
            assert_eq!(s.len(), width);
            assert!(s.is_full());
            assert_eq!(s.first_missing(), None);
        }
    }

    #[test]
    fn first_missing_crosses_words() {
        let mut s = BitSet::full(70);
        s.remove(66);
        assert_eq!(s.first_missing(), Some(66));
        let empty = BitSet::new(0);
        assert_eq!(empty.first_missing(), None);
    }

    proptest! {
        #[test]
        fn matches_btreeset(a in proptest::collection::vec(0usize..150, 0..60),
                            b in proptest::collection::vec(0usize..150, 0..60)) {
            let (sa, sb) = (BitSet::from_indices(150, a.clone()), BitSet::from_indices(150, b.clone()));
            let (ta, tb): (BTreeSet<_>, BTreeSet<_>) = (a.into_iter().collect(), b.into_iter().collect());
            prop_assert_eq!(sa.iter().collect::<Vec<_>>(), ta.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.union(&sb).iter().collect::<BTreeSet<_>>(), ta.union(&tb).copied().collect());
            prop_assert_eq!(sa.difference(&sb).len(), ta.difference(&tb).count());
            prop_assert_eq!(sa.intersection_len(&sb), ta.intersection(&tb).count());
            prop_assert_eq!(sa.is_subset(&sb), ta.is_subset(&tb));
            prop_assert_eq!(sa.first_missing(), (0..150).find(|i| !ta.contains(i)));
        }
    }
}
