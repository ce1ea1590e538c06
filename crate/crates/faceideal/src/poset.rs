//! Finite posets and their chain/antichain/poset-ideal families, the chain
//! and antichain ideals, comparability graphs, and the duality and
//! projective-dimension statements specialized to them.

use crate::betti::BettiTable;
use crate::check_limit;
use crate::complex::{SimplicialComplex, VertexUniverse};
use crate::error::{Error, Result};
use crate::face_ideal::{self, FaceIdealResult};
use crate::homology;
use crate::ideal::{MonomialIdeal, VariableUniverse};
use crate::subset::{maximal_sets, Subset};

/// A finite poset: labeled elements and a transitively closed strict order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    /// `above[i]` = set of j with `p_i < p_j`.
    above: Vec<Subset>,
}

/// Which defining predicate a subset family satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Chains,
    Antichains,
    PosetIdeals,
}

/// An exhaustively enumerated family of subsets of the ground set.
#[derive(Clone, Debug)]
pub struct PosetFamily {
    pub kind: FamilyKind,
    pub members: Vec<Subset>,
}

impl Poset {
    /// Build from relations `a < b` (covers or general); the strict order is
    /// the transitive closure, and cycles are rejected.
    pub fn new<S: AsRef<str>>(labels: Vec<String>, relations: &[(S, S)]) -> Result<Poset> {
        if labels.is_empty() {
            return Err(Error::EmptyPoset);
        }
        let universe = VertexUniverse::new(labels.clone())?;
        let n = labels.len();
        let mut above = vec![Subset::EMPTY; n];
        for (a, b) in relations {
            let i = universe.index_of(a.as_ref())?;
            let j = universe.index_of(b.as_ref())?;
            if i == j {
                return Err(Error::CyclicPoset(format!("{} < {}", a.as_ref(), b.as_ref())));
            }
            above[i] = above[i].with(j);
        }
        // Warshall closure
        for k in 0..n {
            for i in 0..n {
                if above[i].contains(k) {
                    above[i] = above[i].union(above[k]);
                }
            }
        }
        for i in 0..n {
            if above[i].contains(i) {
                return Err(Error::CyclicPoset(format!("{} lies on a cycle", labels[i])));
            }
        }
        Ok(Poset { labels, above })
    }

    pub fn from_indices(n: usize, relations: &[(usize, usize)]) -> Result<Poset> {
        let labels: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
        let named: Vec<(String, String)> = relations
            .iter()
            .map(|&(a, b)| (labels[a].clone(), labels[b].clone()))
            .collect();
        Poset::new(labels, &named)
    }

    /// Total order `p1 < p2 < ... < pn`.
    pub fn chain(n: usize) -> Poset {
        let rel: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_indices(n, &rel).expect("chain is acyclic")
    }

    /// Antichain on `n` elements.
    pub fn antichain(n: usize) -> Poset {
        Poset::from_indices(n, &[]).expect("antichain is acyclic")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.less(i, j) || self.less(j, i)
    }

    pub fn is_chain_set(&self, s: Subset) -> bool {
        let elems: Vec<usize> = s.iter().collect();
        elems
            .iter()
            .enumerate()
            .all(|(a, &i)| elems[a + 1..].iter().all(|&j| self.comparable(i, j)))
    }

    pub fn is_antichain_set(&self, s: Subset) -> bool {
        let elems: Vec<usize> = s.iter().collect();
        elems
            .iter()
            .enumerate()
            .all(|(a, &i)| elems[a + 1..].iter().all(|&j| !self.comparable(i, j)))
    }

    pub fn is_poset_ideal(&self, s: Subset) -> bool {
        s.iter().all(|i| {
            (0..self.size()).all(|j| !self.less(j, i) || s.contains(j))
        })
    }

    fn family(&self, kind: FamilyKind) -> Result<PosetFamily> {
        check_limit("poset size", self.size(), 20)?;
        let n = self.size();
        let members: Vec<Subset> = (0..(1u64 << n))
            .map(Subset)
            .filter(|&s| match kind {
                FamilyKind::Chains => self.is_chain_set(s),
                FamilyKind::Antichains => self.is_antichain_set(s),
                FamilyKind::PosetIdeals => self.is_poset_ideal(s),
            })
            .collect();
        Ok(PosetFamily { kind, members })
    }

    pub fn chains(&self) -> Result<PosetFamily> {
        self.family(FamilyKind::Chains)
    }

    pub fn antichains(&self) -> Result<PosetFamily> {
        self.family(FamilyKind::Antichains)
    }

    pub fn poset_ideals(&self) -> Result<PosetFamily> {
        self.family(FamilyKind::PosetIdeals)
    }

    /// The complex whose facets are the maximal chains.
    pub fn chain_complex(&self) -> Result<SimplicialComplex> {
        let members = self.chains()?.members;
        let universe = VertexUniverse::new(self.labels.clone())?;
        SimplicialComplex::new(universe, maximal_sets(members))
    }

    /// The complex whose facets are the maximal antichains.
    pub fn antichain_complex(&self) -> Result<SimplicialComplex> {
        let members = self.antichains()?.members;
        let universe = VertexUniverse::new(self.labels.clone())?;
        SimplicialComplex::new(universe, maximal_sets(members))
    }

    /// `I_C(P)`: the face ideal of the chain complex.
    pub fn chain_ideal(&self) -> Result<FaceIdealResult> {
        check_limit("poset size", self.size(), 31)?;
        face_ideal::face_ideal(&self.chain_complex()?)
    }

    /// `I_A(P)`: the face ideal of the antichain complex.
    pub fn antichain_ideal(&self) -> Result<FaceIdealResult> {
        check_limit("poset size", self.size(), 31)?;
        face_ideal::face_ideal(&self.antichain_complex()?)
    }

    fn graph(&self, comparability: bool) -> Result<SimplicialComplex> {
        let n = self.size();
        let universe = VertexUniverse::new(self.labels.clone())?;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.comparable(i, j) == comparability {
                    edges.push(Subset::from_indices([i, j]));
                }
            }
        }
        if edges.is_empty() {
            return Ok(SimplicialComplex::empty_complex(universe));
        }
        SimplicialComplex::new(universe, edges)
    }

    /// Graph on `[n]` whose edges are the comparable pairs (as a
    /// 1-dimensional facet complex; `{∅}` when edgeless).
    pub fn comparability_graph(&self) -> Result<SimplicialComplex> {
        self.graph(true)
    }

    /// Graph on `[n]` whose edges are the incomparable pairs.
    pub fn incomparability_graph(&self) -> Result<SimplicialComplex> {
        self.graph(false)
    }

    /// Maximal cardinality of an antichain.
    pub fn dilworth_number(&self) -> Result<usize> {
        Ok(self.antichains()?.members.iter().map(|a| a.len()).max().unwrap_or(0))
    }

    /// Longest-chain cardinality minus one.
    pub fn rank(&self) -> Result<i64> {
        Ok(self.chains()?.members.iter().map(|c| c.len() as i64 - 1).max().unwrap_or(-1))
    }

    /// Least number of chains partitioning the ground set, by subset DP.
    /// Independent cross-check for Dilworth's theorem; `n ≤ 7` scale.
    pub fn min_chain_cover(&self) -> Result<usize> {
        check_limit("poset size for chain-cover search", self.size(), 12)?;
        let n = self.size();
        let full = Subset::full(n);
        let mut best = vec![usize::MAX; 1 << n];
        best[0] = 0;
        for mask in 1u64..(1u64 << n) {
            let s = Subset(mask);
            // branch on the lowest element to avoid symmetric covers
            let low = s.min_element().expect("nonempty");
            let rest = s.without(low);
            for sub in rest.subsets() {
                let chain = sub.with(low);
                if self.is_chain_set(chain) {
                    let prev = best[s.difference(chain).0 as usize];
                    if prev != usize::MAX {
                        best[mask as usize] = best[mask as usize].min(prev + 1);
                    }
                }
            }
        }
        Ok(best[full.0 as usize])
    }
}

/// Edge ideal of the whisker graph of a graph on the y-copies of the
/// elements: generators `x_i y_i` for all `i` plus `y_i y_j` per edge.
pub fn whisker_graph_edge_ideal(graph: &SimplicialComplex) -> Result<MonomialIdeal> {
    let n = graph.universe().size();
    let universe = VariableUniverse::xy(n)?;
    let mut gens: Vec<Subset> = (0..n).map(|i| Subset::from_indices([i, n + i])).collect();
    for e in graph.facets() {
        if e.is_empty() {
            continue; // edgeless graph stored as {∅}
        }
        gens.push(Subset(e.0 << n));
    }
    MonomialIdeal::minimize(universe, gens)
}

/// Both parts of the chain/antichain duality: (a) the dual of the chain
/// ideal against the whiskered incomparability graph, (b) the dual of the
/// antichain ideal against the whiskered comparability graph.
#[derive(Clone, Debug)]
pub struct ChainTheoremReport {
    pub part_a: DualSideReport,
    pub part_b: DualSideReport,
}

#[derive(Clone, Debug)]
pub struct DualSideReport {
    pub lhs: MonomialIdeal,
    pub rhs: MonomialIdeal,
    pub equal: bool,
    /// The relevant graph has no edges; the dual degenerates to the
    /// whisker pairs alone.
    pub degenerate: bool,
}

pub fn verify_chain_theorem(poset: &Poset) -> Result<ChainTheoremReport> {
    check_limit("poset size for chain-theorem check", poset.size(), 10)?;
    let part_a = {
        let lhs = poset.chain_ideal()?.ideal.alexander_dual()?;
        let graph = poset.incomparability_graph()?;
        let degenerate = graph.dimension() < 1;
        let rhs = whisker_graph_edge_ideal(&graph)?;
        DualSideReport { equal: lhs == rhs, lhs, rhs, degenerate }
    };
    let part_b = {
        let lhs = poset.antichain_ideal()?.ideal.alexander_dual()?;
        let graph = poset.comparability_graph()?;
        let degenerate = graph.dimension() < 1;
        let rhs = whisker_graph_edge_ideal(&graph)?;
        DualSideReport { equal: lhs == rhs, lhs, rhs, degenerate }
    };
    Ok(ChainTheoremReport { part_a, part_b })
}

/// Oracle comparison of the projective-dimension formulas:
/// `projdim I_C(P) = rank P + 1` and `projdim I_A(P) = ` Dilworth number,
/// plus linearity of both resolutions.
#[derive(Clone, Debug)]
pub struct ProjdimReport {
    pub rank: i64,
    pub dilworth: usize,
    pub chain_table: BettiTable,
    pub antichain_table: BettiTable,
    pub chain_ok: bool,
    pub antichain_ok: bool,
    pub chain_linear: bool,
    pub antichain_linear: bool,
}

impl ProjdimReport {
    pub fn all_ok(&self) -> bool {
        self.chain_ok && self.antichain_ok && self.chain_linear && self.antichain_linear
    }
}

pub fn verify_projdim_corollary(poset: &Poset) -> Result<ProjdimReport> {
    check_limit("poset size for projdim oracle", poset.size(), 6)?;
    let n = poset.size();
    let rank = poset.rank()?;
    let dilworth = poset.dilworth_number()?;
    let chain = poset.chain_ideal()?.ideal;
    let antichain = poset.antichain_ideal()?.ideal;
    let chain_table = homology::hochster_betti(&chain)?;
    let antichain_table = homology::hochster_betti(&antichain)?;
    let chain_ok = chain_table.projdim() == Some((rank + 1) as usize);
    let antichain_ok = antichain_table.projdim() == Some(dilworth);
    let chain_linear = chain_table.is_linear(n);
    let antichain_linear = antichain_table.is_linear(n);
    Ok(ProjdimReport {
        rank,
        dilworth,
        chain_table,
        antichain_table,
        chain_ok,
        antichain_ok,
        chain_linear,
        antichain_linear,
    })
}
