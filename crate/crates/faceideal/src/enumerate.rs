//! Exhaustive and seeded-random instance generators used by property tests
//! and the acceptance suite. Exhaustive enumerations are ordered
//! deterministically; random generators take an explicit ChaCha seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{SimplicialComplex, VertexUniverse};
use crate::ideal::{MonomialIdeal, VariableUniverse};
use crate::poset::Poset;
use crate::subset::{maximal_sets, Subset};
use crate::whisker::WhiskerSpec;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every simplicial complex on `n` labeled vertices: all nonempty
/// antichains of subsets of `[n]`, DFS over masks in increasing order.
/// Counts follow the Dedekind numbers, so keep `n ≤ 5` for exhaustive runs.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    let mut out = Vec::new();
    let mut chosen: Vec<Subset> = Vec::new();
    fn rec(n: usize, next: u64, chosen: &mut Vec<Subset>, out: &mut Vec<SimplicialComplex>) {
        if !chosen.is_empty() {
            out.push(
                SimplicialComplex::new(VertexUniverse::standard(n), chosen.clone())
                    .expect("antichain facets are already normalized"),
            );
        }
        for mask in next..(1u64 << n) {
            let s = Subset(mask);
            if chosen.iter().all(|&c| !c.is_subset_of(s) && !s.is_subset_of(c)) {
                chosen.push(s);
                rec(n, mask + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(n, 0, &mut chosen, &mut out);
    out
}

/// Every strict partial order on `n` labeled elements: one ternary choice
/// per pair (incomparable, `i<j`, `j<i`), kept when already transitive.
/// Keep `n ≤ 5` for exhaustive runs.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut choice = vec![0u8; pairs.len()];
    loop {
        let mut above = vec![Subset::EMPTY; n];
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            match choice[idx] {
                1 => above[i] = above[i].with(j),
                2 => above[j] = above[j].with(i),
                _ => {}
            }
        }
        let transitive = (0..n).all(|a| {
            above[a].iter().all(|b| above[b].is_subset_of(above[a]))
        });
        if transitive {
            let mut relations = Vec::new();
            for a in 0..n {
                for b in above[a].iter() {
                    relations.push((a, b));
                }
            }
            out.push(Poset::from_indices(n, &relations).expect("transitive and acyclic"));
        }
        // odometer over base-3 choices
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return out;
            }
            choice[pos] += 1;
            if choice[pos] < 3 {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

pub fn random_complex(n: usize, rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let count = rng.gen_range(1..=n + 2);
    let mut facets: Vec<Subset> = (0..count)
        .map(|_| Subset(rng.gen_range(0..(1u64 << n))))
        .collect();
    facets = maximal_sets(facets);
    SimplicialComplex::new(VertexUniverse::standard(n), facets)
        .expect("nonempty facet list never yields the void complex")
}

/// Random strict order: orient edges of a random graph along a random
/// permutation, then transitively close.
pub fn random_poset(n: usize, rng: &mut ChaCha8Rng) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut relations = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.4) {
                let (i, j) = (perm[a], perm[b]);
                relations.push((i, j));
            }
        }
    }
    Poset::from_indices(n, &relations).expect("orientation along a permutation is acyclic")
}

/// Random squarefree monomial ideal with variables `x1..xm` and nonunit
/// generators.
pub fn random_ideal(m: usize, rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let universe = VariableUniverse::from_labels((1..=m).map(|i| format!("x{i}")))
        .expect("standard labels are well formed");
    let count = rng.gen_range(1..=m + 2);
    let gens: Vec<Subset> = (0..count)
        .map(|_| Subset(rng.gen_range(1..(1u64 << m))))
        .collect();
    MonomialIdeal::minimize(universe, gens).expect("nonempty generator list")
}

pub fn random_whisker_spec(n: usize, max_k: usize, rng: &mut ChaCha8Rng) -> WhiskerSpec {
    let k: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=max_k)).collect();
    let d: Vec<usize> = k.iter().map(|&ki| rng.gen_range(1..=ki)).collect();
    WhiskerSpec::new(k, d)
}

/// Every whisker spec with `k_i ≤ max_k`, `1 ≤ d_i ≤ k_i`.
pub fn all_whisker_specs(n: usize, max_k: usize) -> Vec<WhiskerSpec> {
    let per_vertex: Vec<(usize, usize)> = (1..=max_k)
        .flat_map(|k| (1..=k).map(move |d| (k, d)))
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let k: Vec<usize> = idx.iter().map(|&c| per_vertex[c].0).collect();
        let d: Vec<usize> = idx.iter().map(|&c| per_vertex[c].1).collect();
        out.push(WhiskerSpec::new(k, d));
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < per_vertex.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_counts_match_dedekind_numbers() {
        // Dedekind numbers minus the empty antichain
        assert_eq!(all_complexes(0).len(), 1); // just {∅}
        assert_eq!(all_complexes(1).len(), 2);
        assert_eq!(all_complexes(2).len(), 5);
        assert_eq!(all_complexes(3).len(), 19);
        assert_eq!(all_complexes(4).len(), 167);
    }

    #[test]
    fn poset_counts_match_oeis() {
        // labeled posets: OEIS A001035
        assert_eq!(all_posets(1).len(), 1);
        assert_eq!(all_posets(2).len(), 3);
        assert_eq!(all_posets(3).len(), 19);
        assert_eq!(all_posets(4).len(), 219);
    }

    #[test]
    fn random_generators_are_deterministic() {
        let mut a = seeded_rng(7);
        let mut b = seeded_rng(7);
        for _ in 0..20 {
            assert_eq!(random_complex(4, &mut a), random_complex(4, &mut b));
            assert_eq!(random_poset(5, &mut a), random_poset(5, &mut b));
            assert_eq!(random_ideal(6, &mut a), random_ideal(6, &mut b));
        }
    }

    #[test]
    fn whisker_spec_enumeration_counts() {
        // per vertex: Σ_{k=1..3} k = 6 choices
        assert_eq!(all_whisker_specs(1, 3).len(), 6);
        assert_eq!(all_whisker_specs(2, 3).len(), 36);
        assert_eq!(all_whisker_specs(3, 2).len(), 27);
    }

    #[test]
    fn random_posets_are_valid() {
        let mut rng = seeded_rng(11);
        for _ in 0..50 {
            let p = random_poset(6, &mut rng);
            for i in 0..6 {
                assert!(!p.less(i, i));
                for j in 0..6 {
                    assert!(!(p.less(i, j) && p.less(j, i)));
                }
            }
        }
    }
}
