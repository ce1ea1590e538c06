//! Independent ground truth: exact reduced simplicial homology over the
//! rationals and Betti numbers of squarefree ideals via induced-subcomplex
//! homology.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination with exact
//! integer arithmetic; an `i128` fast path falls back to big integers on
//! overflow. Two pivot strategies are exposed so determinism can be checked
//! rather than assumed.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::betti::BettiTable;
use crate::check_limit;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::subset::Subset;

/// Pivot selection rule for the elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotStrategy {
    /// First row with a nonzero entry in the current column.
    FirstNonzero,
    /// Row whose entry has the smallest absolute value (keeps growth low).
    SmallestAbs,
}

/// Reduced Betti numbers; `ranks[k]` is `b̃_{k-1}`, so `ranks[0] = b̃_{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRanks {
    pub ranks: Vec<u64>,
}

impl HomologyRanks {
    /// `b̃_d` for `d ≥ -1`.
    pub fn betti(&self, d: i64) -> u64 {
        let k = d + 1;
        if k < 0 {
            return 0;
        }
        self.ranks.get(k as usize).copied().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Exact rank of an integer matrix, `i128` Bareiss with BigInt fallback.
pub fn matrix_rank(rows: &[Vec<i64>], strategy: PivotStrategy) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    let small: Vec<Vec<i128>> =
        rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_rank_i128(small, strategy) {
        Some(rank) => rank,
        None => {
            let big: Vec<Vec<BigInt>> =
                rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            bareiss_rank_big(big, strategy)
        }
    }
}

fn bareiss_rank_i128(mut a: Vec<Vec<i128>>, strategy: PivotStrategy) -> Option<usize> {
    let rows = a.len();
    let cols = a[0].len();
    let mut prev = 1i128;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let pivot = select_pivot(&a, r, c, strategy, |x| x.unsigned_abs())?;
        let Some(p) = pivot else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t1 = a[r][c].checked_mul(a[i][j])?;
                let t2 = a[i][c].checked_mul(a[r][j])?;
                a[i][j] = t1.checked_sub(t2)? / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r += 1;
    }
    Some(r)
}

fn bareiss_rank_big(mut a: Vec<Vec<BigInt>>, strategy: PivotStrategy) -> usize {
    use num_bigint::Sign;
    let rows = a.len();
    let cols = a[0].len();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut pivot: Option<usize> = None;
        for i in r..rows {
            if a[i][c].sign() != Sign::NoSign {
                match strategy {
                    PivotStrategy::FirstNonzero => {
                        pivot = Some(i);
                        break;
                    }
                    PivotStrategy::SmallestAbs => {
                        if pivot.is_none()
                            || a[i][c].magnitude() < a[pivot.unwrap()][c].magnitude()
                        {
                            pivot = Some(i);
                        }
                    }
                }
            }
        }
        let Some(p) = pivot else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = t / &prev;
            }
            a[i][c] = BigInt::from(0);
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

// Returns Some(None) when the column has no nonzero entry below r.
#[allow(clippy::type_complexity)]
fn select_pivot<F: Fn(i128) -> u128>(
    a: &[Vec<i128>],
    r: usize,
    c: usize,
    strategy: PivotStrategy,
    abs: F,
) -> Option<Option<usize>> {
    let mut pivot: Option<usize> = None;
    for i in r..a.len() {
        if a[i][c] != 0 {
            match strategy {
                PivotStrategy::FirstNonzero => return Some(Some(i)),
                PivotStrategy::SmallestAbs => {
                    if pivot.is_none() || abs(a[i][c]) < abs(a[pivot.unwrap()][c]) {
                        pivot = Some(i);
                    }
                }
            }
        }
    }
    Some(pivot)
}

/// Reduced homology ranks of a complex on at most 16 vertices.
pub fn reduced_homology(complex: &SimplicialComplex) -> Result<HomologyRanks> {
    check_limit("homology vertex count", complex.universe().size(), 16)?;
    Ok(homology_of_faces(&complex.faces(), PivotStrategy::SmallestAbs))
}

/// Same, with an explicit pivot strategy (determinism cross-checks).
pub fn reduced_homology_with(
    complex: &SimplicialComplex,
    strategy: PivotStrategy,
) -> Result<HomologyRanks> {
    check_limit("homology vertex count", complex.universe().size(), 16)?;
    Ok(homology_of_faces(&complex.faces(), strategy))
}

/// Reduced homology from an explicit face list (must be closed under
/// subsets and contain ∅). `ranks[k] = b̃_{k-1}`.
pub fn homology_of_faces(faces: &[Subset], strategy: PivotStrategy) -> HomologyRanks {
    // group by cardinality
    let max_card = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut by_card: Vec<Vec<Subset>> = vec![Vec::new(); max_card + 1];
    for f in faces {
        by_card[f.len()].push(*f);
    }
    for level in &mut by_card {
        level.sort_by(|a, b| a.lex_cmp(*b));
    }
    // boundary ranks: boundary_rank[c] = rank of ∂_c : C_c → C_{c-1}
    let mut boundary_rank = vec![0usize; max_card + 2];
    for c in 1..=max_card {
        boundary_rank[c] = rank_of_boundary(&by_card[c - 1], &by_card[c], strategy);
    }
    let mut ranks = Vec::with_capacity(max_card + 1);
    for c in 0..=max_card {
        let dim = by_card[c].len();
        let b = dim - boundary_rank[c + 1] - if c == 0 { 0 } else { boundary_rank[c] };
        // the augmentation C_0 → 0 contributes nothing; ∂_0 does not exist,
        // but C_0 = span(∅) and ∂_1 maps vertices onto it.
        ranks.push(b as u64);
    }
    HomologyRanks { ranks }
}

fn rank_of_boundary(
    target: &[Subset],
    source: &[Subset],
    strategy: PivotStrategy,
) -> usize {
    if target.is_empty() || source.is_empty() {
        return 0;
    }
    let index: BTreeMap<Subset, usize> =
        target.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut rows = vec![vec![0i64; source.len()]; target.len()];
    for (col, f) in source.iter().enumerate() {
        for v in f.iter() {
            let sub = f.without(v);
            let row = index[&sub];
            let sign = if f.rank_below(v) % 2 == 0 { 1 } else { -1 };
            rows[row][col] = sign;
        }
    }
    matrix_rank(&rows, strategy)
}

/// Graded Betti numbers `β_{i,j}(I)` of a proper squarefree ideal on at
/// most 12 variables: `β_{i,j} = Σ_{|W|=j} b̃_{j-i-2}(Δ_W)` over the
/// Stanley–Reisner complex `Δ` of `I`.
pub fn hochster_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    hochster_betti_with(ideal, PivotStrategy::SmallestAbs)
}

pub fn hochster_betti_with(
    ideal: &MonomialIdeal,
    strategy: PivotStrategy,
) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::ImproperIdeal);
    }
    let m = ideal.universe().size();
    check_limit("Hochster variable count", m, 12)?;
    let gens = ideal.generators();
    let mut table = BettiTable::new();
    for mask in 1..(1u64 << m) {
        let w = Subset(mask);
        let local_gens: Vec<Subset> =
            gens.iter().copied().filter(|g| g.is_subset_of(w)).collect();
        // cone pruning: a vertex of W lying in no generator inside W is a
        // cone apex of Δ_W, so the homology vanishes.
        if w.iter().any(|v| !local_gens.iter().any(|g| g.contains(v))) {
            continue;
        }
        let faces: Vec<Subset> = w
            .subsets()
            .filter(|s| !local_gens.iter().any(|g| g.is_subset_of(*s)))
            .collect();
        let hom = homology_of_faces(&faces, strategy);
        let j = w.len();
        for (k, &b) in hom.ranks.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let d = k as i64 - 1; // homological dimension
            let i = j as i64 - d - 2;
            if i >= 0 {
                table.add(i as usize, j, b);
            }
        }
    }
    Ok(table)
}

/// True iff all graded Betti numbers of `I` sit in degrees `q + i` where
/// `q` is the common generator degree; the witness is the first offender.
pub fn linear_resolution_check(ideal: &MonomialIdeal) -> Result<(bool, Option<(usize, usize)>)> {
    let q = ideal.uniform_degree().ok_or_else(|| {
        let mut degrees: Vec<usize> = ideal.generators().iter().map(|g| g.len()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        Error::MixedDegrees(degrees[0], degrees[degrees.len() - 1])
    })?;
    let table = hochster_betti(ideal)?;
    let witness = table.first_nonlinear(q);
    Ok((witness.is_none(), witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{complex_on, SimplicialComplex, VertexUniverse};
    use crate::face_ideal;
    use crate::ideal::VariableUniverse;

    fn mono(u: &VariableUniverse, labels: &[&str]) -> Subset {
        Subset::from_indices(labels.iter().map(|l| u.index_of(l).unwrap()))
    }

    #[test]
    fn homology_of_circle() {
        let c = complex_on(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let h = reduced_homology(&c).unwrap();
        assert_eq!(h.betti(-1), 0);
        assert_eq!(h.betti(0), 0);
        assert_eq!(h.betti(1), 1);
    }

    #[test]
    fn homology_of_full_simplex_is_trivial() {
        let c = SimplicialComplex::simplex(VertexUniverse::standard(3));
        assert!(reduced_homology(&c).unwrap().is_trivial());
    }

    #[test]
    fn homology_of_two_points() {
        let c = complex_on(2, &[&[1], &[2]]);
        let h = reduced_homology(&c).unwrap();
        assert_eq!(h.betti(0), 1);
        assert_eq!(h.betti(-1), 0);
    }

    #[test]
    fn homology_of_empty_complex() {
        let c = SimplicialComplex::empty_complex(VertexUniverse::standard(2));
        let h = reduced_homology(&c).unwrap();
        assert_eq!(h.betti(-1), 1);
    }

    #[test]
    fn sphere_boundary_of_tetrahedron() {
        let c = SimplicialComplex::simplex(VertexUniverse::standard(4));
        let sk = c.skeleton(2).unwrap();
        let h = reduced_homology(&sk).unwrap();
        assert_eq!(h.betti(0), 0);
        assert_eq!(h.betti(1), 0);
        assert_eq!(h.betti(2), 1);
    }

    #[test]
    fn pivot_strategies_agree() {
        for (n, facets) in [
            (4usize, vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]),
            (5, vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 5]]),
        ] {
            let refs: Vec<&[usize]> = facets.iter().map(|f| f.as_slice()).collect();
            let c = complex_on(n, &refs);
            let a = reduced_homology_with(&c, PivotStrategy::FirstNonzero).unwrap();
            let b = reduced_homology_with(&c, PivotStrategy::SmallestAbs).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn hochster_principal_ideal() {
        let u = VariableUniverse::from_labels(["x1", "x2"]).unwrap();
        let i = MonomialIdeal::minimize(u.clone(), vec![mono(&u, &["x1", "x2"])]).unwrap();
        let t = hochster_betti(&i).unwrap();
        assert_eq!(t.entry(0, 2), 1);
        assert_eq!(t.totals(), vec![1]);
        assert_eq!(t.projdim(), Some(0));
    }

    #[test]
    fn hochster_matches_formula_for_two_points() {
        let c = complex_on(2, &[&[1], &[2]]);
        let j = face_ideal::face_ideal(&c).unwrap().ideal;
        let t = hochster_betti(&j).unwrap();
        assert_eq!(t.totals(), vec![3, 2]);
        assert_eq!(t.entry(0, 2), 3);
        assert_eq!(t.entry(1, 3), 2);
        assert!(t.is_linear(2));
    }

    #[test]
    fn hochster_triangle_edge_ideal() {
        let u = VariableUniverse::from_labels(["x1", "x2", "x3"]).unwrap();
        let i = MonomialIdeal::minimize(
            u.clone(),
            vec![
                mono(&u, &["x1", "x2"]),
                mono(&u, &["x2", "x3"]),
                mono(&u, &["x1", "x3"]),
            ],
        )
        .unwrap();
        let t = hochster_betti(&i).unwrap();
        assert_eq!(t.totals(), vec![3, 2]);
    }

    #[test]
    fn beta_zero_counts_generators() {
        let u = VariableUniverse::from_labels(["a", "b", "c", "d"]).unwrap();
        let i = MonomialIdeal::minimize(
            u.clone(),
            vec![mono(&u, &["a", "b"]), mono(&u, &["c"]), mono(&u, &["b", "d"])],
        )
        .unwrap();
        let t = hochster_betti(&i).unwrap();
        assert_eq!(t.totals()[0] as usize, i.num_generators());
    }

    #[test]
    fn linear_resolution_check_examples() {
        // face ideals are linear
        let c = complex_on(3, &[&[1, 2], &[2, 3]]);
        let j = face_ideal::face_ideal(&c).unwrap().ideal;
        let (ok, witness) = linear_resolution_check(&j).unwrap();
        assert!(ok, "witness {witness:?}");

        // two disjoint edges are not
        let u = VariableUniverse::from_labels(["x1", "x2", "x3", "x4"]).unwrap();
        let i = MonomialIdeal::minimize(
            u.clone(),
            vec![mono(&u, &["x1", "x2"]), mono(&u, &["x3", "x4"])],
        )
        .unwrap();
        let (ok, witness) = linear_resolution_check(&i).unwrap();
        assert!(!ok);
        assert_eq!(witness, Some((1, 4)));

        // principal is linear
        let p = MonomialIdeal::minimize(u.clone(), vec![mono(&u, &["x1", "x2"])]).unwrap();
        assert!(linear_resolution_check(&p).unwrap().0);

        // mixed degrees rejected
        let mixed = MonomialIdeal::minimize(
            u.clone(),
            vec![mono(&u, &["x1"]), mono(&u, &["x2", "x3"])],
        )
        .unwrap();
        assert!(linear_resolution_check(&mixed).is_err());
    }

    #[test]
    fn matrix_rank_small_cases() {
        assert_eq!(matrix_rank(&[vec![1, 2], vec![2, 4]], PivotStrategy::SmallestAbs), 1);
        assert_eq!(matrix_rank(&[vec![1, 0], vec![0, 1]], PivotStrategy::FirstNonzero), 2);
        assert_eq!(matrix_rank(&[], PivotStrategy::FirstNonzero), 0);
        assert_eq!(matrix_rank(&[vec![0, 0]], PivotStrategy::SmallestAbs), 0);
    }
}
