//! Squarefree monomial ideals over a named variable universe.
//!
//! Generators are stored as a canonical minimal system (pairwise
//! non-divisible, sorted by degree then lex). Theorem-specific generator
//! orders are explicit permutations and never mutate storage.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::complex::{SimplicialComplex, VertexUniverse};
use crate::error::{Error, Result};
use crate::subset::{minimal_sets, Subset, MAX_UNIVERSE};
use crate::transversal::minimal_transversals;

/// Structured role of a variable, when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarKind {
    /// `x_i` (0-based block index).
    X(usize),
    /// `y_i`.
    Y(usize),
    /// `x_i^{(j)}`, the j-th whisker vertex of block i (both 0-based).
    Whisker(usize, usize),
    Other,
}

/// Ordered list of distinct variable names with structured kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableUniverse {
    labels: Vec<String>,
    kinds: Vec<VarKind>,
}

impl VariableUniverse {
    /// The ring `K[x_1..x_n, y_1..y_n]` with variables in that order.
    pub fn xy(n: usize) -> Result<VariableUniverse> {
        if 2 * n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(2 * n, MAX_UNIVERSE));
        }
        let mut labels = Vec::with_capacity(2 * n);
        let mut kinds = Vec::with_capacity(2 * n);
        for i in 0..n {
            labels.push(format!("x{}", i + 1));
            kinds.push(VarKind::X(i));
        }
        for i in 0..n {
            labels.push(format!("y{}", i + 1));
            kinds.push(VarKind::Y(i));
        }
        Ok(VariableUniverse { labels, kinds })
    }

    /// Universe from raw labels; kinds are inferred from the shapes
    /// `x<i>`, `y<i>` and `x<i>^(<j>)` and default to `Other`.
    pub fn from_labels<I, S>(labels: I) -> Result<VariableUniverse>
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
        let kinds = labels.iter().map(|l| infer_kind(l)).collect();
        Ok(VariableUniverse { labels, kinds })
    }

    pub fn with_kinds(labels: Vec<String>, kinds: Vec<VarKind>) -> Result<VariableUniverse> {
        let u = VariableUniverse::from_labels(labels)?;
        if u.labels.len() != kinds.len() {
            return Err(Error::Invalid("kinds/labels length mismatch".into()));
        }
        Ok(VariableUniverse { labels: u.labels, kinds })
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

    pub fn kind(&self, i: usize) -> &VarKind {
        &self.kinds[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// The same names viewed as a vertex universe (for Stanley–Reisner and
    /// whisker complexes living on the variables).
    pub fn as_vertex_universe(&self) -> VertexUniverse {
        VertexUniverse::new(self.labels.clone()).expect("labels already validated")
    }

    pub fn format_monomial(&self, m: Subset) -> String {
        if m.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<&str> = m.iter().map(|i| self.label(i)).collect();
        parts.join("*")
    }
}

fn infer_kind(label: &str) -> VarKind {
    if let Some((head, tail)) = label.split_once("^(") {
        if let Some(j) = tail.strip_suffix(')').and_then(|s| s.parse::<usize>().ok()) {
            if let Some(i) = head.strip_prefix('x').and_then(|s| s.parse::<usize>().ok()) {
                if i >= 1 && j >= 1 {
                    return VarKind::Whisker(i - 1, j - 1);
                }
            }
        }
        return VarKind::Other;
    }
    if let Some(i) = label.strip_prefix('x').and_then(|s| s.parse::<usize>().ok()) {
        if i >= 1 {
            return VarKind::X(i - 1);
        }
    }
    if let Some(i) = label.strip_prefix('y').and_then(|s| s.parse::<usize>().ok()) {
        if i >= 1 {
            return VarKind::Y(i - 1);
        }
    }
    VarKind::Other
}

/// A squarefree monomial ideal with a canonical minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    universe: VariableUniverse,
    generators: Vec<Subset>,
}

/// An explicit permutation of the generators of some ideal; `order[0]` is
/// the first generator in the theorem-specific order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorOrder {
    positions: Vec<usize>,
}

impl GeneratorOrder {
    pub fn new(ideal: &MonomialIdeal, positions: Vec<usize>) -> Result<GeneratorOrder> {
        let m = ideal.num_generators();
        let mut seen = vec![false; m];
        if positions.len() != m {
            return Err(Error::NotAGeneratorPermutation);
        }
        for &p in &positions {
            if p >= m || seen[p] {
                return Err(Error::NotAGeneratorPermutation);
            }
            seen[p] = true;
        }
        Ok(GeneratorOrder { positions })
    }

    pub fn identity(ideal: &MonomialIdeal) -> GeneratorOrder {
        GeneratorOrder { positions: (0..ideal.num_generators()).collect() }
    }

    /// Build the order that sorts the generators by the given comparator.
    pub fn sorted_by<F>(ideal: &MonomialIdeal, mut cmp: F) -> GeneratorOrder
    where
        F: FnMut(Subset, Subset) -> Ordering,
    {
        let mut positions: Vec<usize> = (0..ideal.num_generators()).collect();
        positions.sort_by(|&a, &b| cmp(ideal.generators[a], ideal.generators[b]));
        GeneratorOrder { positions }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Generator at position `t` (1-based) of the order.
    pub fn generator_at(&self, ideal: &MonomialIdeal, t: usize) -> Subset {
        ideal.generators[self.positions[t - 1]]
    }
}

/// One accepted step of a linear-quotients run: at position `t` the prefix
/// colon ideal is generated by the recorded variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonStep {
    pub t: usize,
    pub variables: Subset,
}

/// Result of a linear-quotients check over a generator order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientCertificate {
    /// All prefix colon ideals are generated by variables; one step per
    /// position `t = 2..m`.
    Certificate(Vec<ColonStep>),
    /// First failing position and the offending non-variable minimal
    /// generator of the prefix colon ideal there.
    Violation { t: usize, generator: Subset },
}

impl QuotientCertificate {
    pub fn is_certificate(&self) -> bool {
        matches!(self, QuotientCertificate::Certificate(_))
    }
}

impl MonomialIdeal {
    /// Minimize a generating set: drop every monomial divisible by another,
    /// dedup, and store in canonical (degree, lex) order.
    ///
    /// An empty list is rejected, as is a list containing the constant
    /// monomial `1` together with other generators. The unit ideal `(1)` by
    /// itself is representable but rejected by theorem pipelines.
    pub fn minimize(universe: VariableUniverse, gens: Vec<Subset>) -> Result<MonomialIdeal> {
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        let n = universe.size();
        for g in &gens {
            if let Some(i) = g.iter().find(|&i| i >= n) {
                return Err(Error::FacetOutOfRange(i, n));
            }
        }
        let has_unit = gens.iter().any(|g| g.is_empty());
        if has_unit && gens.iter().any(|g| !g.is_empty()) {
            return Err(Error::ImproperIdeal);
        }
        let mut generators = minimal_sets(gens);
        generators.sort_by(|a, b| a.canonical_cmp(*b));
        Ok(MonomialIdeal { universe, generators })
    }

    pub fn universe(&self) -> &VariableUniverse {
        &self.universe
    }

    pub fn generators(&self) -> &[Subset] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_empty()
    }

    /// Common generator degree, if the ideal is generated in one degree.
    pub fn uniform_degree(&self) -> Option<usize> {
        let d = self.generators.first()?.len();
        self.generators.iter().all(|g| g.len() == d).then_some(d)
    }

    pub fn contains_monomial(&self, m: Subset) -> bool {
        self.generators.iter().any(|g| g.is_subset_of(m))
    }

    /// `u : v = u / gcd(u, v)` for squarefree monomials: support difference.
    pub fn colon_monomial(u: Subset, v: Subset) -> Subset {
        u.difference(v)
    }

    /// Minimal generators of `(u_1, ..., u_{t-1}) : u_t` along `order`
    /// (`t` is 1-based, `2 ≤ t ≤ m`).
    pub fn prefix_colon(&self, order: &GeneratorOrder, t: usize) -> Result<MonomialIdeal> {
        let m = self.num_generators();
        if t < 2 || t > m {
            return Err(Error::GeneratorIndexOutOfRange(t, m));
        }
        let target = order.generator_at(self, t);
        let colons: Vec<Subset> = (1..t)
            .map(|s| Self::colon_monomial(order.generator_at(self, s), target))
            .collect();
        if colons.iter().any(|c| c.is_empty()) {
            // A prefix generator divides the t-th one: impossible in a
            // minimal system, so flag it loudly.
            return Err(Error::Invalid(format!(
                "prefix generator divides generator at position {t}; system not minimal"
            )));
        }
        MonomialIdeal::minimize(self.universe.clone(), colons)
    }

    /// Check linear quotients along `order`: every minimal generator of
    /// every prefix colon ideal must be a single variable.
    pub fn check_linear_quotients(&self, order: &GeneratorOrder) -> Result<QuotientCertificate> {
        let m = self.num_generators();
        if order.len() != m {
            return Err(Error::NotAGeneratorPermutation);
        }
        let mut steps = Vec::with_capacity(m.saturating_sub(1));
        for t in 2..=m {
            let colon = self.prefix_colon(order, t)?;
            let mut vars = Subset::EMPTY;
            for g in colon.generators() {
                if g.len() != 1 {
                    return Ok(QuotientCertificate::Violation { t, generator: *g });
                }
                vars = vars.union(*g);
            }
            steps.push(ColonStep { t, variables: vars });
        }
        Ok(QuotientCertificate::Certificate(steps))
    }

    /// Alexander dual: one generator per inclusion-minimal transversal of
    /// the hypergraph of generator supports.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        if self.is_unit() {
            return Err(Error::ImproperIdeal);
        }
        let transversals = minimal_transversals(&self.generators, self.universe.size());
        MonomialIdeal::minimize(self.universe.clone(), transversals)
    }

    /// The complex on the variable universe whose faces are the supports not
    /// containing any generator support, so that `I = I_Δ` of the output.
    pub fn stanley_reisner_complex(&self) -> Result<SimplicialComplex> {
        if self.is_unit() {
            return Err(Error::ImproperIdeal);
        }
        let n = self.universe.size();
        let covers = minimal_transversals(&self.generators, n);
        let facets: Vec<Subset> = covers.iter().map(|c| c.complement(n)).collect();
        SimplicialComplex::new(self.universe.as_vertex_universe(), facets)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.generators.iter().map(|g| self.universe.format_monomial(*g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}
