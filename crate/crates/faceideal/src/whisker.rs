//! Higher-dimensional whisker complexes: each vertex of a base complex gets
//! a block of whisker vertices, and every (d_i+1)-subset of a block becomes
//! a facet. Minimal vertex covers factor through the blocks, the cover
//! ideal has linear quotients under an explicit order, and that order
//! transports to a shelling of the independence complex.

use std::cmp::Ordering;

use crate::check_limit;
use crate::complex::{ShellingOutcome, SimplicialComplex, VertexUniverse};
use crate::error::{Error, Result};
use crate::face_ideal::binomial;
use crate::ideal::{GeneratorOrder, MonomialIdeal, QuotientCertificate, VarKind, VariableUniverse};
use crate::subset::Subset;
use crate::transversal::minimal_transversals;

/// Per-vertex whisker counts `k_i ≥ 1` and facet dimensions `1 ≤ d_i ≤ k_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiskerSpec {
    pub k: Vec<usize>,
    pub d: Vec<usize>,
}

impl WhiskerSpec {
    pub fn new(k: Vec<usize>, d: Vec<usize>) -> WhiskerSpec {
        WhiskerSpec { k, d }
    }

    /// `k_i = d_i = 1` for all vertices: the ordinary whisker construction.
    pub fn ones(n: usize) -> WhiskerSpec {
        WhiskerSpec { k: vec![1; n], d: vec![1; n] }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.k.len() != n || self.d.len() != n {
            return Err(Error::BadWhiskerSpec(format!(
                "expected {n} entries, got k: {}, d: {}",
                self.k.len(),
                self.d.len()
            )));
        }
        for i in 0..n {
            if self.k[i] < 1 {
                return Err(Error::BadWhiskerSpec(format!("k_{} must be ≥ 1", i + 1)));
            }
            if self.d[i] < 1 || self.d[i] > self.k[i] {
                return Err(Error::BadWhiskerSpec(format!(
                    "need 1 ≤ d_{} ≤ k_{}, got d = {}, k = {}",
                    i + 1,
                    i + 1,
                    self.d[i],
                    self.k[i]
                )));
            }
        }
        let total = n + self.k.iter().sum::<usize>();
        if total > 62 {
            return Err(Error::BadWhiskerSpec(format!(
                "total vertex count {total} exceeds 62"
            )));
        }
        Ok(())
    }
}

/// A base complex together with its whiskered extension. Vertex layout:
/// base vertices `0..n`, then block `i`'s whiskers contiguously from
/// `block_start[i]`.
#[derive(Clone, Debug)]
pub struct HDWhiskerComplex {
    base: SimplicialComplex,
    spec: WhiskerSpec,
    complex: SimplicialComplex,
    block_start: Vec<usize>,
}

/// A minimal vertex cover split per the block structure: `base_cover` is
/// the set of base vertices whose `x_i` is included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCover {
    pub vertices: Subset,
    pub base_cover: Subset,
}

pub fn build_hd_whisker(base: &SimplicialComplex, spec: &WhiskerSpec) -> Result<HDWhiskerComplex> {
    let n = base.universe().size();
    spec.validate(n)?;
    let mut labels: Vec<String> = base.universe().labels().to_vec();
    let mut block_start = Vec::with_capacity(n);
    for i in 0..n {
        block_start.push(labels.len());
        for j in 1..=spec.k[i] {
            labels.push(format!("{}^({})", base.universe().label(i), j));
        }
    }
    let universe = VertexUniverse::new(labels)?;
    let mut facets: Vec<Subset> = base.facets().to_vec();
    for i in 0..n {
        let block = block_of(i, &block_start, &spec.k);
        facets.extend(block.subsets_of_size(spec.d[i] + 1));
    }
    let complex = SimplicialComplex::new(universe, facets)?;
    Ok(HDWhiskerComplex { base: base.clone(), spec: spec.clone(), complex, block_start })
}

fn block_of(i: usize, block_start: &[usize], k: &[usize]) -> Subset {
    let mut b = Subset::singleton(i);
    for j in 0..k[i] {
        b = b.with(block_start[i] + j);
    }
    b
}

impl HDWhiskerComplex {
    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn spec(&self) -> &WhiskerSpec {
        &self.spec
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn num_base_vertices(&self) -> usize {
        self.base.universe().size()
    }

    pub fn num_vertices(&self) -> usize {
        self.complex.universe().size()
    }

    /// Block of vertex `i`: `{x_i, x_i^{(1)}, …, x_i^{(k_i)}}`.
    pub fn block(&self, i: usize) -> Subset {
        block_of(i, &self.block_start, &self.spec.k)
    }

    fn whisker_part(&self, i: usize) -> Subset {
        self.block(i).without(i)
    }

    /// Facets of the whiskered complex that lie inside the base. Singleton
    /// base facets are absorbed into their whisker block and drop out.
    fn surviving_base_facets(&self) -> Vec<Subset> {
        let base_mask = Subset::full(self.num_base_vertices());
        self.complex
            .facets()
            .iter()
            .copied()
            .filter(|f| f.is_subset_of(base_mask))
            .collect()
    }

    /// All minimal vertex covers, via the block characterization: pick a
    /// base-vertex set `S` covering the surviving base facets, then per
    /// block take `x_i` plus `k_i − d_i` whiskers when `i ∈ S`, else
    /// `k_i − d_i + 1` whiskers. The result is cross-checked against
    /// brute-force minimal transversal enumeration; disagreement is a hard
    /// error, never papered over.
    pub fn minimal_covers(&self) -> Result<Vec<BlockCover>> {
        let n = self.num_base_vertices();
        let base_facets = self.surviving_base_facets();
        let valid_s: Vec<Subset> = (0..(1u64 << n))
            .map(Subset)
            .filter(|s| base_facets.iter().all(|f| !f.intersection(*s).is_empty()))
            .collect();
        let mut count: usize = 0;
        for &s in &valid_s {
            let mut prod: usize = 1;
            for i in 0..n {
                let pick = self.spec.k[i] - self.spec.d[i] + usize::from(!s.contains(i));
                prod = prod.saturating_mul(binomial(self.spec.k[i], pick) as usize);
            }
            count = count.saturating_add(prod);
        }
        check_limit("minimal cover count", count, 1_000_000)?;

        let mut covers = Vec::with_capacity(count);
        for &s in &valid_s {
            let mut partial = vec![s];
            for i in 0..n {
                let pick = self.spec.k[i] - self.spec.d[i] + usize::from(!s.contains(i));
                let choices = self.whisker_part(i).subsets_of_size(pick);
                partial = partial
                    .iter()
                    .flat_map(|&p| choices.iter().map(move |&c| p.union(c)))
                    .collect();
            }
            covers.extend(partial.into_iter().map(|v| BlockCover { vertices: v, base_cover: s }));
        }

        let mut ours: Vec<Subset> = covers.iter().map(|c| c.vertices).collect();
        ours.sort();
        let mut brute = minimal_transversals(self.complex.facets(), self.num_vertices());
        brute.sort();
        if ours != brute {
            return Err(Error::Invalid(format!(
                "block characterization disagrees with brute-force covers: \
                 characterization gives {} covers, brute force {}",
                ours.len(),
                brute.len()
            )));
        }
        Ok(covers)
    }

    /// Compare cover monomials, greater first: base parts by descending
    /// degree then lex with `x_1 > … > x_n`, ties broken by lex on the
    /// whisker parts with `x_1^{(1)} > … > x_n^{(k_n)}`.
    pub fn cover_cmp(&self, a: Subset, b: Subset) -> Ordering {
        let base_mask = Subset::full(self.num_base_vertices());
        let (ab, bb) = (a.intersection(base_mask), b.intersection(base_mask));
        bb.len()
            .cmp(&ab.len())
            .then_with(|| ab.lex_cmp(bb))
            .then_with(|| a.difference(base_mask).lex_cmp(b.difference(base_mask)))
    }

    /// The ideal generated by one monomial per minimal cover, with the
    /// strict total order above.
    pub fn cover_ideal_order(&self) -> Result<(MonomialIdeal, GeneratorOrder)> {
        let covers = self.minimal_covers()?;
        let n = self.num_base_vertices();
        let labels = self.complex.universe().labels().to_vec();
        let mut kinds: Vec<VarKind> = (1..=n).map(VarKind::X).collect();
        for i in 0..n {
            for j in 1..=self.spec.k[i] {
                kinds.push(VarKind::Whisker(i + 1, j));
            }
        }
        let universe = VariableUniverse::with_kinds(labels, kinds)?;
        let gens: Vec<Subset> = covers.iter().map(|c| c.vertices).collect();
        let ideal = MonomialIdeal::minimize(universe, gens)?;
        let order = GeneratorOrder::sorted_by(&ideal, |a, b| self.cover_cmp(a, b));
        Ok((ideal, order))
    }
}

/// Joint certificate that the cover ideal has linear quotients under the
/// block order and that the induced facet order shells the independence
/// complex.
#[derive(Clone, Debug)]
pub struct GeneralizedReport {
    pub quotients: QuotientCertificate,
    /// `None` when the quotient check already failed.
    pub shelling: Option<ShellingOutcome>,
    /// Facets of the independence complex match complements of minimal
    /// covers, both directions.
    pub complement_bijection: bool,
}

impl GeneralizedReport {
    pub fn all_ok(&self) -> bool {
        self.quotients.is_certificate()
            && self.shelling.as_ref().is_some_and(|s| s.is_valid())
            && self.complement_bijection
    }
}

pub fn verify_generalized_theorem(w: &HDWhiskerComplex) -> Result<GeneralizedReport> {
    let (ideal, order) = w.cover_ideal_order()?;
    let quotients = ideal.check_linear_quotients(&order)?;

    let m = w.num_vertices();
    let independence = w.complex().independence_complex()?;
    let mut from_covers: Vec<Subset> =
        ideal.generators().iter().map(|g| g.complement(m)).collect();
    let mut indep_facets = independence.facets().to_vec();
    from_covers.sort();
    indep_facets.sort();
    let complement_bijection = from_covers == indep_facets;

    let shelling = if quotients.is_certificate() {
        let facet_order: Vec<Subset> = (1..=order.len())
            .map(|t| order.generator_at(&ideal, t).complement(m))
            .collect();
        Some(independence.verify_shelling(&facet_order)?)
    } else {
        None
    };
    Ok(GeneralizedReport { quotients, shelling, complement_bijection })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complex_on;
    use crate::face_ideal::whisker_complex;

    fn edge() -> SimplicialComplex {
        complex_on(2, &[&[1, 2]])
    }

    #[test]
    fn spec_bounds_enforced() {
        assert!(WhiskerSpec::new(vec![1], vec![2]).validate(1).is_err());
        assert!(WhiskerSpec::new(vec![0], vec![0]).validate(1).is_err());
        assert!(WhiskerSpec::new(vec![1, 1], vec![1]).validate(2).is_err());
        assert!(WhiskerSpec::new(vec![62], vec![1]).validate(1).is_err());
        assert!(WhiskerSpec::ones(3).validate(3).is_ok());
    }

    #[test]
    fn ones_spec_reproduces_whisker_complex() {
        for base in [
            edge(),
            complex_on(3, &[&[1, 2], &[2, 3]]),
            complex_on(3, &[&[1, 2, 3]]),
            complex_on(2, &[&[1], &[2]]),
        ] {
            let w = build_hd_whisker(&base, &WhiskerSpec::ones(base.universe().size())).unwrap();
            let plain = whisker_complex(&base).unwrap();
            let mut a = w.complex().facets().to_vec();
            let mut b = plain.facets().to_vec();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn edge_with_double_whisker_facets() {
        // k=(2,1), d=(1,1): the edge, three 2-subsets of block 1, one of block 2
        let w = build_hd_whisker(&edge(), &WhiskerSpec::new(vec![2, 1], vec![1, 1])).unwrap();
        assert_eq!(w.complex().facets().len(), 5);
        assert_eq!(w.block(0), Subset::from_indices([0, 2, 3]));
        assert_eq!(w.block(1), Subset::from_indices([1, 4]));
        assert_eq!(w.complex().universe().label(2), "x1^(1)");
        assert_eq!(w.complex().universe().label(4), "x2^(1)");
    }

    #[test]
    fn triangle_full_blocks() {
        // k=d=(2,2,2): each block contributes its single 3-subset
        let tri = complex_on(3, &[&[1, 2, 3]]);
        let w = build_hd_whisker(&tri, &WhiskerSpec::new(vec![2; 3], vec![2; 3])).unwrap();
        assert_eq!(w.complex().facets().len(), 4);
        for f in w.complex().facets() {
            assert_eq!(f.len(), 3);
        }
    }

    #[test]
    fn edge_double_whisker_covers() {
        let w = build_hd_whisker(&edge(), &WhiskerSpec::new(vec![2, 1], vec![1, 1])).unwrap();
        let covers = w.minimal_covers().unwrap();
        assert_eq!(covers.len(), 5);
        for c in &covers {
            assert_eq!(c.vertices.len(), 3); // Σ(k_i − d_i) + n
        }
    }

    #[test]
    fn singleton_facet_absorbed_into_block() {
        // a lone vertex: both the vertex and its whisker are minimal covers
        let point = complex_on(1, &[&[1]]);
        let w = build_hd_whisker(&point, &WhiskerSpec::ones(1)).unwrap();
        let mut verts: Vec<Subset> =
            w.minimal_covers().unwrap().iter().map(|c| c.vertices).collect();
        verts.sort();
        assert_eq!(verts, vec![Subset::singleton(0), Subset::singleton(1)]);
    }

    #[test]
    fn cover_order_matches_stated_comparator() {
        let w = build_hd_whisker(&edge(), &WhiskerSpec::new(vec![2, 1], vec![1, 1])).unwrap();
        let (ideal, order) = w.cover_ideal_order().unwrap();
        let u = ideal.universe().clone();
        let listed: Vec<String> = (1..=order.len())
            .map(|t| u.format_monomial(order.generator_at(&ideal, t)))
            .collect();
        // base deg-lex puts {x1,x2} first, then {x1}, then {x2};
        // whisker lex breaks ties by x1^(1) > x1^(2)
        assert_eq!(
            listed,
            vec![
                "x1*x2*x1^(1)",
                "x1*x2*x1^(2)",
                "x1*x1^(1)*x2^(1)",
                "x1*x1^(2)*x2^(1)",
                "x2*x1^(1)*x1^(2)",
            ]
        );
        assert_eq!(ideal.uniform_degree(), Some(3));
    }

    #[test]
    fn generalized_theorem_on_small_cases() {
        for (base, k, d) in [
            (edge(), vec![2, 1], vec![1, 1]),
            (edge(), vec![1, 1], vec![1, 1]),
            (complex_on(3, &[&[1, 2], &[2, 3]]), vec![2, 1, 2], vec![1, 1, 2]),
            (complex_on(3, &[&[1, 2, 3]]), vec![2, 2, 2], vec![1, 2, 1]),
            (complex_on(2, &[&[1], &[2]]), vec![3, 2], vec![2, 1]),
        ] {
            let w = build_hd_whisker(&base, &WhiskerSpec::new(k, d)).unwrap();
            let report = verify_generalized_theorem(&w).unwrap();
            assert!(report.all_ok(), "{report:?}");
        }
    }

    #[test]
    fn cover_count_limit_enforced() {
        // 6 blocks of C(8,4)=70 choices each overflow the enumeration cap
        let base = complex_on(6, &[&[1, 2, 3, 4, 5, 6]]);
        let w = build_hd_whisker(&base, &WhiskerSpec::new(vec![8; 6], vec![4; 6])).unwrap();
        assert!(matches!(w.minimal_covers(), Err(Error::SizeLimit { .. })));
    }
}
