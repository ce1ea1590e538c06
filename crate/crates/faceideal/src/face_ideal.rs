//! The face ideal `J_Δ` of a simplicial complex and the constructions
//! around it: whisker complexes, the duality with `I(W(Γ))`, the closed
//! Betti-number formula, and the generator orders that realize linear
//! quotients.

use std::collections::BTreeMap;

use crate::betti::BettiTable;
use crate::check_limit;
use crate::complex::{SimplicialComplex, VertexUniverse};
use crate::error::{Error, Result};
use crate::ideal::{GeneratorOrder, MonomialIdeal, VariableUniverse};
use crate::subset::Subset;

/// `J_Δ` together with the generator ↔ face correspondence.
#[derive(Clone, Debug)]
pub struct FaceIdealResult {
    pub ideal: MonomialIdeal,
    /// Generator support → the face `F` with `u_F` that support.
    pub face_of: BTreeMap<u64, Subset>,
}

impl FaceIdealResult {
    pub fn face_of(&self, generator: Subset) -> Option<Subset> {
        self.face_of.get(&generator.0).copied()
    }
}

/// Support of `u_F = x_F · y_{F^c}` inside `x_1..x_n, y_1..y_n`.
pub fn face_monomial(face: Subset, n: usize) -> Subset {
    let y_part = face.complement(n);
    Subset(face.0 | (y_part.0 << n))
}

/// The face `F` back from the support of `u_F`.
pub fn monomial_face(monomial: Subset, n: usize) -> Subset {
    Subset(monomial.0 & Subset::full(n).0)
}

/// Build `J_Δ` over `K[x_1..x_n, y_1..y_n]`: one degree-`n` generator per
/// face of `Δ`.
pub fn face_ideal(complex: &SimplicialComplex) -> Result<FaceIdealResult> {
    let n = complex.universe().size();
    check_limit("face ideal vertex count", n, 31)?;
    let universe = VariableUniverse::xy(n)?;
    let mut face_of = BTreeMap::new();
    let mut gens = Vec::new();
    for face in complex.faces() {
        let u = face_monomial(face, n);
        face_of.insert(u.0, face);
        gens.push(u);
    }
    // All generators have degree n and are distinct, so the system is
    // already minimal; minimize only canonicalizes the order.
    let ideal = MonomialIdeal::minimize(universe, gens)?;
    Ok(FaceIdealResult { ideal, face_of })
}

/// Ideal `I_𝒮` for an arbitrary collection of subsets of the vertex set.
pub fn collection_ideal(n: usize, members: &[Subset]) -> Result<MonomialIdeal> {
    check_limit("collection universe size", n, 31)?;
    let universe = VariableUniverse::xy(n)?;
    let gens: Vec<Subset> = members.iter().map(|f| face_monomial(*f, n)).collect();
    MonomialIdeal::minimize(universe, gens)
}

/// `W(Δ)`: the complex on `x_1..x_n, y_1..y_n` whose facets are the facets
/// of `Δ` plus the whiskers `{x_i, y_i}`.
pub fn whisker_complex(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    let n = complex.universe().size();
    let universe = VariableUniverse::xy(n)?.as_vertex_universe();
    let mut facets: Vec<Subset> = complex.facets().to_vec();
    for i in 0..n {
        facets.push(Subset::from_indices([i, n + i]));
    }
    SimplicialComplex::new(universe, facets)
}

/// The complex `Γ` on `y_1..y_n` whose facets are the minimal nonfaces of
/// the copy `Δ'` of `Δ` on the y-variables. Undefined for the full simplex.
pub fn gamma_of(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    if complex.is_full_simplex() {
        return Err(Error::FullSimplex);
    }
    let n = complex.universe().size();
    let universe = VertexUniverse::new((1..=n).map(|i| format!("y{i}")))?;
    let facets = complex.minimal_nonfaces();
    SimplicialComplex::new(universe, facets)
}

/// Outcome of checking `(J_Δ)^∨ = I(W(Γ))` on a concrete complex.
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub lhs: MonomialIdeal,
    pub rhs: MonomialIdeal,
    pub equal: bool,
    /// Set when `Δ` is the full simplex (Γ empty) or some facet of `Γ` is a
    /// single vertex absorbed by its whisker; the generator-set equality is
    /// still checked, on the minimized ideals.
    pub degenerate: bool,
}

/// Compute both sides of the duality theorem and compare generator sets.
///
/// The left side is the Alexander dual of `J_Δ` by transversal enumeration.
/// The right side is the ideal generated by the whiskers `x_i y_i` together
/// with the facets of `Γ` (minimal nonfaces of `Δ'`), minimized.
pub fn verify_duality_theorem(complex: &SimplicialComplex) -> Result<DualityReport> {
    let n = complex.universe().size();
    check_limit("duality vertex count", n, 12)?;
    let lhs = face_ideal(complex)?.ideal.alexander_dual()?;

    let universe = VariableUniverse::xy(n)?;
    let mut rhs_gens: Vec<Subset> = (0..n).map(|i| Subset::from_indices([i, n + i])).collect();
    let mut degenerate = complex.is_full_simplex();
    if !complex.is_full_simplex() {
        for nonface in complex.minimal_nonfaces() {
            if nonface.len() == 1 {
                degenerate = true;
            }
            // shift to the y-block
            rhs_gens.push(Subset(nonface.0 << n));
        }
    }
    let rhs = MonomialIdeal::minimize(universe, rhs_gens)?;
    let equal = lhs == rhs;
    Ok(DualityReport { lhs, rhs, equal, degenerate })
}

/// Total and graded Betti numbers of `J_Δ` from the f-vector:
/// `β_j = Σ_F C(|F|, j)`, all concentrated in degree `n + j`.
pub fn betti_formula(complex: &SimplicialComplex) -> BettiTable {
    let n = complex.universe().size();
    let fv = complex.f_vector();
    let mut table = BettiTable::new();
    for (card, &count) in fv.counts.iter().enumerate() {
        for j in 0..=card {
            table.add(j, n + j, binomial(card, j) * count as u64);
        }
    }
    table
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1u64;
    for i in 0..k {
        out = out * (n - i) as u64 / (i + 1) as u64;
    }
    out
}

/// The order on the generators of `J_Δ` by increasing face cardinality,
/// ties broken lexicographically; it refines `u_G > u_F` for `G ⊂ F`.
pub fn face_order(result: &FaceIdealResult) -> GeneratorOrder {
    let n = result.ideal.universe().size() / 2;
    GeneratorOrder::sorted_by(&result.ideal, |a, b| {
        let fa = monomial_face(a, n);
        let fb = monomial_face(b, n);
        fa.canonical_cmp(fb)
    })
}

/// Result of checking the closure conditions on a collection `𝒮`:
/// (i) closed under pairwise intersection, and (ii) for every `G ⊂ F` in
/// `𝒮` some `x_i ∈ F∖G` has `F∖{x_i} ∈ 𝒮`.
#[derive(Clone, Debug)]
pub enum CollectionOrderOutcome {
    /// Conditions hold; the ideal `I_𝒮` with its cardinality-then-lex
    /// generator order.
    Ordered { ideal: MonomialIdeal, order: GeneratorOrder },
    /// `F ∩ G ∉ 𝒮` for the witnessing pair.
    IntersectionViolation { f: Subset, g: Subset },
    /// No removable element exists for the witnessing pair `G ⊂ F`.
    RemovalViolation { f: Subset, g: Subset },
}

impl CollectionOrderOutcome {
    pub fn is_ordered(&self) -> bool {
        matches!(self, CollectionOrderOutcome::Ordered { .. })
    }
}

/// Exhaustively verify conditions (i)/(ii) on `𝒮` and, when they hold,
/// return the generator order of `I_𝒮` by increasing cardinality.
pub fn collection_order(n: usize, members: &[Subset]) -> Result<CollectionOrderOutcome> {
    if members.is_empty() {
        return Err(Error::Invalid("collection must be nonempty".into()));
    }
    let contains = |s: Subset| members.contains(&s);
    for (a, &f) in members.iter().enumerate() {
        for &g in &members[a..] {
            if !contains(f.intersection(g)) {
                return Ok(CollectionOrderOutcome::IntersectionViolation { f, g });
            }
        }
    }
    for &f in members {
        for &g in members {
            if g.is_subset_of(f) && g != f {
                let ok = f.difference(g).iter().any(|i| contains(f.without(i)));
                if !ok {
                    return Ok(CollectionOrderOutcome::RemovalViolation { f, g });
                }
            }
        }
    }
    let ideal = collection_ideal(n, members)?;
    let order = GeneratorOrder::sorted_by(&ideal, |a, b| {
        monomial_face(a, n).canonical_cmp(monomial_face(b, n))
    });
    Ok(CollectionOrderOutcome::Ordered { ideal, order })
}

/// The variable set `{ y_j : F∖{x_j} ∈ Δ }` that the prefix colon ideal at
/// the step of face `F` must equal.
pub fn expected_colon_variables(complex: &SimplicialComplex, face: Subset) -> Subset {
    let n = complex.universe().size();
    let mut vars = Subset::EMPTY;
    for j in face.iter() {
        if complex.is_face(face.without(j)) {
            vars = vars.with(n + j);
        }
    }
    vars
}

/// Compare two generator orders positionally (used by tests).
pub fn order_faces(result: &FaceIdealResult, order: &GeneratorOrder) -> Vec<Subset> {
    let n = result.ideal.universe().size() / 2;
    order
        .positions()
        .iter()
        .map(|&p| monomial_face(result.ideal.generators()[p], n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complex_on;
    use crate::ideal::QuotientCertificate;

    fn mono(u: &VariableUniverse, labels: &[&str]) -> Subset {
        Subset::from_indices(labels.iter().map(|l| u.index_of(l).unwrap()))
    }

    #[test]
    fn face_monomial_examples() {
        // n=3, F={x1,x3} → x1x3y2
        let f = Subset::from_indices([0, 2]);
        let u = face_monomial(f, 3);
        let universe = VariableUniverse::xy(3).unwrap();
        assert_eq!(u, mono(&universe, &["x1", "x3", "y2"]));
        assert_eq!(monomial_face(u, 3), f);
    }

    #[test]
    fn face_ideal_of_empty_complex() {
        let c = SimplicialComplex::empty_complex(VertexUniverse::standard(2));
        let r = face_ideal(&c).unwrap();
        let u = r.ideal.universe().clone();
        assert_eq!(r.ideal.generators(), &[mono(&u, &["y1", "y2"])]);
    }

    #[test]
    fn face_ideal_two_points() {
        let c = complex_on(2, &[&[1], &[2]]);
        let r = face_ideal(&c).unwrap();
        let u = r.ideal.universe().clone();
        assert_eq!(r.ideal.num_generators(), 3);
        assert!(r.ideal.generators().contains(&mono(&u, &["y1", "y2"])));
        assert!(r.ideal.generators().contains(&mono(&u, &["x1", "y2"])));
        assert!(r.ideal.generators().contains(&mono(&u, &["x2", "y1"])));
        assert_eq!(r.face_of(mono(&u, &["x1", "y2"])), Some(Subset::from_indices([0])));
    }

    #[test]
    fn face_ideal_degree_and_count() {
        let c = complex_on(4, &[&[1, 2, 3], &[3, 4]]);
        let r = face_ideal(&c).unwrap();
        assert_eq!(r.ideal.uniform_degree(), Some(4));
        assert_eq!(r.ideal.num_generators(), c.faces().len());
    }

    #[test]
    fn whisker_complex_examples() {
        let c = complex_on(2, &[&[1, 2]]);
        let w = whisker_complex(&c).unwrap();
        assert_eq!(w.facets().len(), 3);

        let c = SimplicialComplex::empty_complex(VertexUniverse::standard(1));
        let w = whisker_complex(&c).unwrap();
        assert_eq!(w.facets(), &[Subset::from_indices([0, 1])]);

        let c = complex_on(3, &[&[1, 2], &[2, 3]]);
        let w = whisker_complex(&c).unwrap();
        assert_eq!(w.facets().len(), 5);
    }

    #[test]
    fn gamma_examples() {
        let c = complex_on(2, &[&[1], &[2]]);
        let g = gamma_of(&c).unwrap();
        assert_eq!(g.facets(), &[Subset::from_indices([0, 1])]);
        assert_eq!(g.universe().labels(), &["y1".to_string(), "y2".to_string()]);

        let c = complex_on(3, &[&[1, 2], &[2, 3]]);
        let g = gamma_of(&c).unwrap();
        assert_eq!(g.facets(), &[Subset::from_indices([0, 2])]);

        let c = SimplicialComplex::empty_complex(VertexUniverse::standard(2));
        let g = gamma_of(&c).unwrap();
        assert_eq!(g.facets(), &[Subset::from_indices([0]), Subset::from_indices([1])]);

        let full = SimplicialComplex::simplex(VertexUniverse::standard(2));
        assert!(matches!(gamma_of(&full), Err(Error::FullSimplex)));
    }

    #[test]
    fn duality_two_points() {
        let c = complex_on(2, &[&[1], &[2]]);
        let rep = verify_duality_theorem(&c).unwrap();
        assert!(rep.equal);
        assert!(!rep.degenerate);
        let u = rep.lhs.universe().clone();
        assert_eq!(
            rep.lhs.generators(),
            &[
                mono(&u, &["x1", "y1"]),
                mono(&u, &["x2", "y2"]),
                mono(&u, &["y1", "y2"])
            ]
        );
    }

    #[test]
    fn duality_empty_complexes() {
        // n=1: J = (y1), dual = (y1); the whisker x1y1 is absorbed by the
        // singleton nonface y1, so the case is degenerate but still equal.
        let c = SimplicialComplex::empty_complex(VertexUniverse::standard(1));
        let rep = verify_duality_theorem(&c).unwrap();
        assert!(rep.equal);
        assert!(rep.degenerate);
        let u = rep.lhs.universe().clone();
        assert_eq!(rep.lhs.generators(), &[mono(&u, &["y1"])]);

        // degenerate: minimal nonfaces are singletons, whiskers absorbed
        let c = SimplicialComplex::empty_complex(VertexUniverse::standard(2));
        let rep = verify_duality_theorem(&c).unwrap();
        assert!(rep.equal, "lhs {} rhs {}", rep.lhs, rep.rhs);
        assert!(rep.degenerate);
        let u = rep.lhs.universe().clone();
        assert_eq!(rep.lhs.generators(), &[mono(&u, &["y1"]), mono(&u, &["y2"])]);
    }

    #[test]
    fn duality_full_simplex_flagged() {
        let c = SimplicialComplex::simplex(VertexUniverse::standard(3));
        let rep = verify_duality_theorem(&c).unwrap();
        assert!(rep.degenerate);
        assert!(rep.equal);
        let u = rep.lhs.universe().clone();
        assert_eq!(
            rep.lhs.generators(),
            &[
                mono(&u, &["x1", "y1"]),
                mono(&u, &["x2", "y2"]),
                mono(&u, &["x3", "y3"])
            ]
        );
    }

    #[test]
    fn betti_formula_examples() {
        let c = complex_on(2, &[&[1], &[2]]);
        let t = betti_formula(&c);
        assert_eq!(t.totals(), vec![3, 2]);
        assert_eq!(t.projdim(), Some(1));
        assert!(t.is_linear(2));

        let c = SimplicialComplex::empty_complex(VertexUniverse::standard(2));
        let t = betti_formula(&c);
        assert_eq!(t.totals(), vec![1]);
        assert_eq!(t.projdim(), Some(0));

        let c = complex_on(3, &[&[1, 2], &[2, 3]]);
        let t = betti_formula(&c);
        assert_eq!(t.totals(), vec![6, 7, 2]);
        assert_eq!(t.projdim(), Some(2));
        assert_eq!(t.projdim().unwrap() as i64, c.dimension() + 1);
    }

    #[test]
    fn face_order_simplex_on_two() {
        let c = SimplicialComplex::simplex(VertexUniverse::standard(2));
        let r = face_ideal(&c).unwrap();
        let order = face_order(&r);
        let faces = order_faces(&r, &order);
        assert_eq!(
            faces,
            vec![
                Subset::EMPTY,
                Subset::from_indices([0]),
                Subset::from_indices([1]),
                Subset::from_indices([0, 1])
            ]
        );
    }

    #[test]
    fn face_order_gives_linear_quotients_small() {
        for (n, facets) in [
            (3usize, vec![vec![1, 2], vec![2, 3]]),
            (4, vec![vec![1, 2, 3], vec![3, 4]]),
            (5, vec![vec![1, 2], vec![3, 4, 5]]),
        ] {
            let refs: Vec<&[usize]> = facets.iter().map(|f| f.as_slice()).collect();
            let c = complex_on(n, &refs);
            let r = face_ideal(&c).unwrap();
            let order = face_order(&r);
            match r.ideal.check_linear_quotients(&order).unwrap() {
                QuotientCertificate::Certificate(steps) => {
                    // each step's variable set is exactly { y_j : F∖{x_j} ∈ Δ }
                    let faces = order_faces(&r, &order);
                    for step in steps {
                        let f = faces[step.t - 1];
                        assert_eq!(step.variables, expected_colon_variables(&c, f));
                    }
                }
                other => panic!("expected certificate: {other:?}"),
            }
        }
    }

    #[test]
    fn collection_order_examples() {
        // poset ideals of the chain p1<p2
        let members =
            vec![Subset::EMPTY, Subset::from_indices([0]), Subset::from_indices([0, 1])];
        match collection_order(2, &members).unwrap() {
            CollectionOrderOutcome::Ordered { ideal, order } => {
                assert_eq!(ideal.num_generators(), 3);
                assert_eq!(order.len(), 3);
                let first = order.generator_at(&ideal, 1);
                assert_eq!(monomial_face(first, 2), Subset::EMPTY);
            }
            other => panic!("{other:?}"),
        }

        // {{1},{2}} misses the empty intersection
        let members = vec![Subset::from_indices([0]), Subset::from_indices([1])];
        assert!(matches!(
            collection_order(2, &members).unwrap(),
            CollectionOrderOutcome::IntersectionViolation { .. }
        ));

        // faces of a complex always qualify
        let c = complex_on(3, &[&[1, 2], &[2, 3]]);
        assert!(collection_order(3, &c.faces()).unwrap().is_ordered());
    }
}
