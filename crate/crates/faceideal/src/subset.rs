//! Fixed-width bitsets over a declared universe of at most 63 indices.
//!
//! Faces of simplicial complexes and supports of squarefree monomials are
//! both `Subset`s; the interpretation of the bit positions is supplied by
//! the surrounding universe type.

use std::cmp::Ordering;
use std::fmt;

/// Maximum universe size supported by the single-word representation.
pub const MAX_UNIVERSE: usize = 63;

/// A subset of `{0, 1, ..., 62}` stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Subset {
        let mut mask = 0u64;
        for i in indices {
            debug_assert!(i < MAX_UNIVERSE);
            mask |= 1 << i;
        }
        Subset(mask)
    }

    /// The full set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_UNIVERSE);
        Subset(if n == 0 { 0 } else { (1u64 << n) - 1 })
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within the first `n` indices.
    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate over contained indices in increasing order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// Number of elements of `self` strictly below `i`.
    pub fn rank_below(self, i: usize) -> usize {
        (self.0 & ((1u64 << i) - 1)).count_ones() as usize
    }

    /// All subsets of `self` (including the empty set and `self` itself).
    pub fn subsets(self) -> SubsetIter {
        SubsetIter { mask: self.0, current: 0, done: false }
    }

    /// All subsets of `self` of the given cardinality.
    pub fn subsets_of_size(self, k: usize) -> Vec<Subset> {
        let elems: Vec<usize> = self.iter().collect();
        let mut out = Vec::new();
        if k > elems.len() {
            return out;
        }
        let mut cur = Vec::with_capacity(k);
        fn rec(elems: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Subset>) {
            if cur.len() == k {
                out.push(Subset::from_indices(cur.iter().copied()));
                return;
            }
            for i in start..elems.len() {
                cur.push(elems[i]);
                rec(elems, k, i + 1, cur, out);
                cur.pop();
            }
        }
        rec(&elems, k, 0, &mut cur, &mut out);
        out
    }

    /// Lexicographic comparison of the sorted index sequences, so
    /// `{1,2} < {1,3} < {2,3}` and `{1} < {1,2}`.
    pub fn lex_cmp(self, other: Subset) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Canonical order used throughout: cardinality first, then lex.
    pub fn canonical_cmp(self, other: Subset) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.lex_cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct BitIter(u64);

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

/// Iterates all submasks of a mask in increasing numeric order.
pub struct SubsetIter {
    mask: u64,
    current: u64,
    done: bool,
}

impl Iterator for SubsetIter {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        if self.done {
            return None;
        }
        let out = Subset(self.current);
        if self.current == self.mask {
            self.done = true;
        } else {
            self.current = (self.current.wrapping_sub(self.mask)) & self.mask;
        }
        Some(out)
    }
}

/// Drop every set that properly contains another set in the family.
pub fn minimal_sets(mut sets: Vec<Subset>) -> Vec<Subset> {
    sets.sort_by(|a, b| a.canonical_cmp(*b));
    sets.dedup();
    let mut out: Vec<Subset> = Vec::new();
    'next: for s in sets {
        for kept in &out {
            if kept.is_subset_of(s) {
                continue 'next;
            }
        }
        out.push(s);
    }
    out
}

/// Drop every set properly contained in another set in the family,
/// keeping inclusion-maximal sets only.
pub fn maximal_sets(mut sets: Vec<Subset>) -> Vec<Subset> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.lex_cmp(*b)));
    sets.dedup();
    let mut out: Vec<Subset> = Vec::new();
    'next: for s in sets {
        for kept in &out {
            if s.is_subset_of(*kept) {
                continue 'next;
            }
        }
        out.push(s);
    }
    out.sort_by(|a, b| a.canonical_cmp(*b));
    out
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_iteration_covers_power_set() {
        let s = Subset::from_indices([0, 2, 3]);
        let subs: Vec<Subset> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.contains(&Subset::EMPTY));
        assert!(subs.contains(&s));
        for t in &subs {
            assert!(t.is_subset_of(s));
        }
    }

    #[test]
    fn lex_order_matches_sorted_sequences() {
        let a = Subset::from_indices([1, 2]);
        let b = Subset::from_indices([1, 3]);
        let c = Subset::from_indices([2, 3]);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(b.lex_cmp(c), Ordering::Less);
        assert_eq!(Subset::from_indices([1]).lex_cmp(a), Ordering::Less);
    }

    #[test]
    fn minimal_sets_drops_supersets() {
        let fam = vec![
            Subset::from_indices([0, 1]),
            Subset::from_indices([0]),
            Subset::from_indices([2]),
            Subset::from_indices([0, 2]),
        ];
        let min = minimal_sets(fam);
        assert_eq!(min, vec![Subset::from_indices([0]), Subset::from_indices([2])]);
    }

    #[test]
    fn rank_below_counts_smaller_elements() {
        let s = Subset::from_indices([0, 2, 5]);
        assert_eq!(s.rank_below(0), 0);
        assert_eq!(s.rank_below(2), 1);
        assert_eq!(s.rank_below(5), 2);
        assert_eq!(s.rank_below(6), 3);
    }

    #[test]
    fn subsets_of_size_enumerates_combinations() {
        let s = Subset::full(4);
        assert_eq!(s.subsets_of_size(2).len(), 6);
        assert_eq!(s.subsets_of_size(0), vec![Subset::EMPTY]);
        assert_eq!(s.subsets_of_size(5), Vec::<Subset>::new());
    }
}
