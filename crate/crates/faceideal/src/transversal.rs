//! Minimal transversal (hitting set) enumeration for small hypergraphs.
//!
//! The primary path is a branch-and-bound recursion: pick an uncovered edge,
//! branch on its vertices, and prune partial transversals that already
//! contain a vertex made redundant. A separate exhaustive subset scan serves
//! as an independent oracle in tests and cross-checks.

use crate::subset::{minimal_sets, Subset};

/// All inclusion-minimal subsets of `{0..n}` meeting every set in `edges`.
///
/// Edges equal to the empty set make the problem infeasible and yield an
/// empty result. The output is sorted in canonical (cardinality, lex) order.
pub fn minimal_transversals(edges: &[Subset], n: usize) -> Vec<Subset> {
    if edges.iter().any(|e| e.is_empty()) {
        return Vec::new();
    }
    if edges.is_empty() {
        // Every edge is hit vacuously; the unique minimal transversal is empty.
        return vec![Subset::EMPTY];
    }
    let mut found: Vec<Subset> = Vec::new();
    let mut partial = Subset::EMPTY;
    branch(edges, n, &mut partial, &mut found);
    let mut out = minimal_sets(found);
    out.sort_by(|a, b| a.canonical_cmp(*b));
    out
}

fn branch(edges: &[Subset], n: usize, partial: &mut Subset, found: &mut Vec<Subset>) {
    // Smallest uncovered edge gives the tightest branching factor.
    let uncovered = edges
        .iter()
        .filter(|e| e.intersection(*partial).is_empty())
        .min_by_key(|e| e.len());
    let edge = match uncovered {
        None => {
            if is_minimal_transversal(edges, *partial) {
                found.push(*partial);
            }
            return;
        }
        Some(e) => *e,
    };
    for v in edge.iter() {
        debug_assert!(v < n);
        *partial = partial.with(v);
        // Prune: if adding v makes some earlier choice redundant, the same
        // transversal is found on another branch without that choice.
        if no_redundant_vertex(edges, *partial) {
            branch(edges, n, partial, found);
        }
        *partial = partial.without(v);
    }
}

fn is_minimal_transversal(edges: &[Subset], t: Subset) -> bool {
    edges.iter().all(|e| !e.intersection(t).is_empty())
        && t.iter().all(|v| {
            let reduced = t.without(v);
            edges.iter().any(|e| e.intersection(reduced).is_empty())
        })
}

fn no_redundant_vertex(edges: &[Subset], t: Subset) -> bool {
    t.iter().all(|v| {
        let reduced = t.without(v);
        edges.iter().any(|e| e.intersection(reduced).is_empty() && e.contains(v))
    })
}

/// Exhaustive oracle: scan all `2^n` subsets and keep the minimal hitting
/// sets. Only for cross-checks at small `n`.
pub fn minimal_transversals_bruteforce(edges: &[Subset], n: usize) -> Vec<Subset> {
    if edges.iter().any(|e| e.is_empty()) {
        return Vec::new();
    }
    let mut hits: Vec<Subset> = Vec::new();
    for mask in 0..(1u64 << n) {
        let t = Subset(mask);
        if edges.iter().all(|e| !e.intersection(t).is_empty()) {
            hits.push(t);
        }
    }
    let mut out = minimal_sets(hits);
    out.sort_by(|a, b| a.canonical_cmp(*b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(idx: &[usize]) -> Subset {
        Subset::from_indices(idx.iter().copied())
    }

    #[test]
    fn single_edge_gives_singletons() {
        let t = minimal_transversals(&[s(&[0, 1])], 2);
        assert_eq!(t, vec![s(&[0]), s(&[1])]);
    }

    #[test]
    fn triangle_edges() {
        let edges = [s(&[0, 1]), s(&[1, 2]), s(&[0, 2])];
        let t = minimal_transversals(&edges, 3);
        assert_eq!(t, vec![s(&[0, 1]), s(&[0, 2]), s(&[1, 2])]);
    }

    #[test]
    fn empty_edge_is_infeasible() {
        assert!(minimal_transversals(&[Subset::EMPTY, s(&[0])], 2).is_empty());
    }

    #[test]
    fn no_edges_yields_empty_transversal() {
        assert_eq!(minimal_transversals(&[], 3), vec![Subset::EMPTY]);
    }

    #[test]
    fn agrees_with_bruteforce_on_random_families() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let m = rng.gen_range(1..=6);
            let edges: Vec<Subset> = (0..m)
                .map(|_| Subset(rng.gen_range(1..(1u64 << n))))
                .collect();
            assert_eq!(
                minimal_transversals(&edges, n),
                minimal_transversals_bruteforce(&edges, n),
                "edges {edges:?}"
            );
        }
    }
}
