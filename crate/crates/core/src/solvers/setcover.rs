//! Exact unweighted set cover by branch and bound.
//!
//! Used for the weak cover (sets = per-vertex weak edge sets), distance-k
//! domination (closed balls) and vertex cover (incident edges).

use std::collections::HashMap;

use super::{Counter, SolveError};
use crate::bitset::BitSet;

pub(crate) struct SetCover<'a> {
    sets: &'a [BitSet],
    width: usize,
    /// Sets containing each element.
    owners: Vec<Vec<usize>>,
    /// Largest budget known to fail for a `(covered, allowed)` state.
    failed: HashMap<(BitSet, BitSet), usize>,
    counter: &'a Counter,
}

impl<'a> SetCover<'a> {
    pub(crate) fn new(sets: &'a [BitSet], width: usize, counter: &'a Counter) -> Self {
        let mut owners = vec![Vec::new(); width];
        for (i, s) in sets.iter().enumerate() {
            debug_assert_eq!(s.width(), width);
            for e in s.iter() {
                owners[e].push(i);
            }
        }
        SetCover {
            sets,
            width,
            owners,
            failed: HashMap::new(),
            counter,
        }
    }

    /// Greedy cover: repeatedly the set with the most new elements, lowest index on ties.
    pub(crate) fn greedy(&self) -> Option<Vec<usize>> {
        let mut covered = BitSet::new(self.width);
        let mut chosen = Vec::new();
        while !covered.is_full() {
            let (best, gain) = self
                .sets
                .iter()
                .enumerate()
                .map(|(i, s)| (i, s.difference_len(&covered)))
                .fold((0, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if gain == 0 {
                return None;
            }
            covered.union_with(&self.sets[best]);
            chosen.push(best);
        }
        chosen.sort_unstable();
        Some(chosen)
    }

    /// Lexicographically least minimum cover, searching sizes from `lower`.
    /// `None` when the sets do not cover the universe.
    pub(crate) fn minimum(&mut self, lower: usize) -> Result<Option<Vec<usize>>, SolveError> {
        let Some(upper) = self.greedy() else {
            return Ok(None);
        };
        let all = BitSet::full(self.sets.len());
        let empty = BitSet::new(self.width);
        let mut size = upper.len();
        for t in lower..upper.len() {
            if self.coverable(&empty, &all, t)? {
                size = t;
                break;
            }
        }
        self.lex_least(size).map(Some)
    }

    /// Lexicographically least cover of exactly `size` sets, assuming none smaller exists.
    fn lex_least(&mut self, size: usize) -> Result<Vec<usize>, SolveError> {
        let count = self.sets.len();
        let mut covered = BitSet::new(self.width);
        let mut chosen = Vec::with_capacity(size);
        let mut start = 0;
        for slot in 0..size {
            let remaining = size - slot - 1;
            let mut picked = None;
            for v in start..count {
                let next = covered.union(&self.sets[v]);
                let allowed = BitSet::from_indices(count, v + 1..count);
                if self.coverable(&next, &allowed, remaining)? {
                    picked = Some((v, next));
                    break;
                }
            }
            let (v, next) = picked.expect("a cover of the given size exists");
            chosen.push(v);
            covered = next;
            start = v + 1;
        }
        Ok(chosen)
    }

    /// Can at most `budget` sets from `allowed` complete `covered`?
    pub(crate) fn coverable(&mut self, covered: &BitSet, allowed: &BitSet, budget: usize) -> Result<bool, SolveError> {
        self.counter.tick()?;
        if covered.is_full() {
            return Ok(true);
        }
        if budget == 0 {
            return Ok(false);
        }
        let uncovered = self.width - covered.len();
        let max_gain = allowed
            .iter()
            .map(|c| self.sets[c].difference_len(covered))
            .max()
            .unwrap_or(0);
        if max_gain == 0 || uncovered.div_ceil(max_gain) > budget {
            return Ok(false);
        }

        let key = (covered.clone(), allowed.clone());
        if let Some(&b) = self.failed.get(&key) {
            if budget <= b {
                return Ok(false);
            }
        }

        // branch on the uncovered element with the fewest allowed owners
        let mut pivot = None;
        let mut fewest = usize::MAX;
        for e in 0..self.width {
            if covered.contains(e) {
                continue;
            }
            let c = self.owners[e].iter().filter(|&&s| allowed.contains(s)).count();
            if c < fewest {
                fewest = c;
                pivot = Some(e);
                if c <= 1 {
                    break;
                }
            }
        }
        let pivot = pivot.expect("an uncovered element exists");
        let candidates: Vec<usize> = self.owners[pivot]
            .iter()
            .copied()
            .filter(|&s| allowed.contains(s))
            .collect();

        let mut rest = allowed.clone();
        for c in candidates {
            rest.remove(c);
            let next = covered.union(&self.sets[c]);
            if self.coverable(&next, &rest, budget - 1)? {
                return Ok(true);
            }
        }

        let slot = self.failed.entry(key).or_insert(0);
        *slot = (*slot).max(budget);
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(width: usize, lists: &[&[usize]]) -> Vec<BitSet> {
        lists
            .iter()
            .map(|l| BitSet::from_indices(width, l.iter().copied()))
            .collect()
    }

    #[test]
    fn greedy_trap_is_solved_exactly() {
        // greedy takes the big middle set first and then needs two more
        let s = sets(6, &[&[0, 1, 2], &[3, 4, 5], &[1, 2, 3, 4]]);
        let counter = Counter::new(None);
        let mut sc = SetCover::new(&s, 6, &counter);
        assert_eq!(sc.greedy().unwrap().len(), 3);
        assert_eq!(sc.minimum(0).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn lexicographic_tie_break() {
        let s = sets(2, &[&[0], &[1], &[0, 1], &[0, 1]]);
        let counter = Counter::new(None);
        let mut sc = SetCover::new(&s, 2, &counter);
        assert_eq!(sc.minimum(0).unwrap(), Some(vec![2]));
    }

    #[test]
    fn uncoverable_and_empty_universe() {
        let s = sets(3, &[&[0], &[1]]);
        let counter = Counter::new(None);
        assert_eq!(SetCover::new(&s, 3, &counter).minimum(0).unwrap(), None);
        let s = sets(0, &[&[], &[]]);
        assert_eq!(SetCover::new(&s, 0, &counter).minimum(0).unwrap(), Some(vec![]));
    }

    #[test]
    fn budget_is_enforced() {
        let s = sets(6, &[&[0, 1, 2], &[3, 4, 5], &[1, 2, 3, 4]]);
        let counter = Counter::new(Some(1));
        let err = SetCover::new(&s, 6, &counter).minimum(0).unwrap_err();
        assert_eq!(err, SolveError::NodeBudget { budget: 1 });
    }
}
