//! Graded Betti tables shared by the closed formula and the homology oracle.

use std::collections::BTreeMap;

/// Entries `β_{i,j}` by (homological index, internal degree).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    graded: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new() -> BettiTable {
        BettiTable::default()
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value != 0 {
            *self.graded.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn graded(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.graded
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.graded.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total Betti numbers `β_0..β_p`.
    pub fn totals(&self) -> Vec<u64> {
        let p = match self.projdim() {
            Some(p) => p,
            None => return Vec::new(),
        };
        let mut out = vec![0u64; p + 1];
        for (&(i, _), &v) in &self.graded {
            out[i] += v;
        }
        out
    }

    /// Largest homological index with a nonzero entry.
    pub fn projdim(&self) -> Option<usize> {
        self.graded.keys().map(|&(i, _)| i).max()
    }

    /// True iff every nonzero entry sits in degree `q + i`.
    pub fn is_linear(&self, q: usize) -> bool {
        self.first_nonlinear(q).is_none()
    }

    /// First entry violating linearity for generator degree `q`, if any.
    pub fn first_nonlinear(&self, q: usize) -> Option<(usize, usize)> {
        self.graded
            .iter()
            .find(|(&(i, j), &v)| v != 0 && j != q + i)
            .map(|(&k, _)| k)
    }
}
