//! Simplicial complexes as facet lists on a fixed vertex universe.
//!
//! Facets are kept as an inclusion antichain in canonical (cardinality, lex)
//! order. The void complex (no faces at all) is rejected; the empty complex
//! `{∅}` is the single facet `∅`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{maximal_sets, Subset, MAX_UNIVERSE};
use crate::transversal::minimal_transversals;

/// An ordered list of distinct vertex names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexUniverse {
    labels: Vec<String>,
}

impl VertexUniverse {
    pub fn new<I, S>(labels: I) -> Result<VertexUniverse>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(labels.len(), MAX_UNIVERSE));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(VertexUniverse { labels })
    }

    /// Universe `x1, ..., xn`.
    pub fn standard(n: usize) -> VertexUniverse {
        VertexUniverse::new((1..=n).map(|i| format!("x{i}"))).expect("standard labels are distinct")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn format_face(&self, face: Subset) -> String {
        let names: Vec<&str> = face.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// A simplicial complex given by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    universe: VertexUniverse,
    facets: Vec<Subset>,
}

/// f-vector `(f_{-1}, f_0, ..., f_{d-1})`; `counts[k]` is the number of
/// faces of cardinality `k`, so `counts[0] = 1` always.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    pub counts: Vec<usize>,
}

impl FVector {
    /// `f_i` for `i = -1, ..., d-1`.
    pub fn f(&self, i: i64) -> usize {
        let k = (i + 1) as usize;
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn total_faces(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Outcome of a shelling check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingOutcome {
    /// The order satisfies the shelling condition.
    Valid,
    /// Offending pair of 1-based positions `(later, earlier)`: facet at
    /// `later` has no previous facet realizing the codimension-one
    /// intersection required for the facet at `earlier`.
    Violation { later: usize, earlier: usize },
}

impl ShellingOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, ShellingOutcome::Valid)
    }
}

impl SimplicialComplex {
    /// Build a complex from facet candidates. Nested or duplicate facets are
    /// normalized away (only inclusion-maximal sets are kept). An empty
    /// candidate list is the void complex and is rejected.
    pub fn new(universe: VertexUniverse, facets: Vec<Subset>) -> Result<SimplicialComplex> {
        if facets.is_empty() {
            return Err(Error::VoidComplex);
        }
        let n = universe.size();
        for f in &facets {
            if let Some(i) = f.iter().find(|&i| i >= n) {
                return Err(Error::FacetOutOfRange(i, n));
            }
        }
        let facets = maximal_sets(facets);
        Ok(SimplicialComplex { universe, facets })
    }

    /// Like [`new`](Self::new) but also reports the candidates dropped by
    /// normalization.
    pub fn new_reporting(
        universe: VertexUniverse,
        facets: Vec<Subset>,
    ) -> Result<(SimplicialComplex, Vec<Subset>)> {
        let complex = SimplicialComplex::new(universe, facets.clone())?;
        let mut dropped: Vec<Subset> = Vec::new();
        let mut seen: Vec<Subset> = Vec::new();
        for f in facets {
            if !complex.facets.contains(&f) || seen.contains(&f) {
                dropped.push(f);
            } else {
                seen.push(f);
            }
        }
        Ok((complex, dropped))
    }

    /// The complex `{∅}` on `n` vertices.
    pub fn empty_complex(universe: VertexUniverse) -> SimplicialComplex {
        SimplicialComplex { universe, facets: vec![Subset::EMPTY] }
    }

    /// The full simplex on the whole universe.
    pub fn simplex(universe: VertexUniverse) -> SimplicialComplex {
        let full = Subset::full(universe.size());
        SimplicialComplex { universe, facets: vec![full] }
    }

    pub fn universe(&self) -> &VertexUniverse {
        &self.universe
    }

    pub fn facets(&self) -> &[Subset] {
        &self.facets
    }

    /// Dimension of the complex; `{∅}` has dimension −1.
    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == Subset::full(self.universe.size())
    }

    pub fn is_face(&self, face: Subset) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// All faces (downward closure of the facets), canonical order.
    pub fn faces(&self) -> Vec<Subset> {
        let mut set: BTreeSet<u64> = BTreeSet::new();
        for f in &self.facets {
            for sub in f.subsets() {
                set.insert(sub.0);
            }
        }
        let mut out: Vec<Subset> = set.into_iter().map(Subset).collect();
        out.sort_by(|a, b| a.canonical_cmp(*b));
        out
    }

    pub fn f_vector(&self) -> FVector {
        let d = self.dimension();
        let mut counts = vec![0usize; (d + 2) as usize];
        for face in self.faces() {
            counts[face.len()] += 1;
        }
        FVector { counts }
    }

    /// The family `{ V ∖ F : F a face }`.
    pub fn complement_complex(&self) -> Vec<Subset> {
        let n = self.universe.size();
        let mut out: Vec<Subset> = self.faces().iter().map(|f| f.complement(n)).collect();
        out.sort_by(|a, b| a.canonical_cmp(*b));
        out
    }

    /// Inclusion-minimal subsets of the universe that are not faces.
    ///
    /// `N` is a nonface iff it meets the complement of every facet, so the
    /// minimal nonfaces are the minimal transversals of those complements.
    pub fn minimal_nonfaces(&self) -> Vec<Subset> {
        let n = self.universe.size();
        let complements: Vec<Subset> = self.facets.iter().map(|f| f.complement(n)).collect();
        minimal_transversals(&complements, n)
    }

    /// The complex whose faces are the subsets of the universe containing no
    /// facet of `self`. Fails if some facet is empty (no independent sets).
    pub fn independence_complex(&self) -> Result<SimplicialComplex> {
        let n = self.universe.size();
        for f in &self.facets {
            if f.is_empty() {
                return Err(Error::EmptyFacet(
                    "independence complex undefined when ∅ is a facet".into(),
                ));
            }
        }
        // Maximal independent sets are complements of minimal vertex covers.
        let covers = minimal_transversals(&self.facets, n);
        let facets: Vec<Subset> = covers.iter().map(|c| c.complement(n)).collect();
        SimplicialComplex::new(self.universe.clone(), facets)
    }

    /// Facets of cardinality `d+1` plus any lower-dimensional facets of
    /// `self` that remain maximal.
    pub fn skeleton(&self, d: i64) -> Result<SimplicialComplex> {
        let dim = self.dimension();
        if d < 0 || d > dim {
            return Err(Error::SkeletonOutOfRange(d, dim));
        }
        let target = (d + 1) as usize;
        let mut facets: Vec<Subset> =
            self.faces().into_iter().filter(|f| f.len() == target).collect();
        facets.extend(self.facets.iter().copied().filter(|f| f.len() < target));
        SimplicialComplex::new(self.universe.clone(), facets)
    }

    /// Check the shelling condition for a facet order: for every `i > 1` and
    /// `j < i` there must be `k < i` with `F_j ∩ F_i ⊆ F_k ∩ F_i` and
    /// `|F_k ∩ F_i| = |F_i| − 1`.
    pub fn verify_shelling(&self, order: &[Subset]) -> Result<ShellingOutcome> {
        let mut sorted = order.to_vec();
        sorted.sort_by(|a, b| a.canonical_cmp(*b));
        if sorted != self.facets {
            return Err(Error::NotAFacetPermutation);
        }
        for i in 1..order.len() {
            let fi = order[i];
            for j in 0..i {
                let meet = order[j].intersection(fi);
                let ok = (0..i).any(|k| {
                    let ki = order[k].intersection(fi);
                    meet.is_subset_of(ki) && ki.len() + 1 == fi.len()
                });
                if !ok {
                    return Ok(ShellingOutcome::Violation { later: i + 1, earlier: j + 1 });
                }
            }
        }
        Ok(ShellingOutcome::Valid)
    }

    /// Exhaustive search for some shelling order. Test/oracle use only.
    pub fn find_shelling(&self) -> Option<Vec<Subset>> {
        fn extend(complex: &SimplicialComplex, chosen: &mut Vec<Subset>) -> bool {
            if chosen.len() == complex.facets().len() {
                return true;
            }
            let remaining: Vec<Subset> = complex
                .facets()
                .iter()
                .copied()
                .filter(|f| !chosen.contains(f))
                .collect();
            'cand: for cand in remaining {
                let i = chosen.len();
                if i > 0 {
                    for j in 0..i {
                        let meet = chosen[j].intersection(cand);
                        let ok = (0..i).any(|k| {
                            let ki = chosen[k].intersection(cand);
                            meet.is_subset_of(ki) && ki.len() + 1 == cand.len()
                        });
                        if !ok {
                            continue 'cand;
                        }
                    }
                }
                chosen.push(cand);
                if extend(complex, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let mut chosen = Vec::new();
        if extend(self, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.facets.iter().map(|fc| self.universe.format_face(*fc)).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// Convenience for tests and examples: complex on `x1..xn` with facets given
/// by 1-based vertex indices.
pub fn complex_on(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    let universe = VertexUniverse::standard(n);
    let facets: Vec<Subset> = facets
        .iter()
        .map(|f| Subset::from_indices(f.iter().map(|&v| v - 1)))
        .collect();
    SimplicialComplex::new(universe, facets).expect("valid test complex")
}
