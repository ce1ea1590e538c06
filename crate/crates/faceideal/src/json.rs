//! JSON interchange: complexes, ideals, posets, whisker specs, and Betti
//! tables. Labels are the only cross-file references; unknown labels are
//! errors at conversion time, not at parse time.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::complex::{SimplicialComplex, VertexUniverse};
use crate::error::Result;
use crate::ideal::{MonomialIdeal, VariableUniverse};
use crate::poset::Poset;
use crate::subset::Subset;
use crate::whisker::WhiskerSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub variables: Vec<String>,
    pub generators: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub relations: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhiskerSpecJson {
    pub k: Vec<usize>,
    pub d: Vec<usize>,
}

/// `{"graded": {"i,j": value}, "total": [..], "projdim": p}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub graded: BTreeMap<String, u64>,
    pub total: Vec<u64>,
    pub projdim: Option<usize>,
}

fn labels_of(universe_labels: &[String], set: Subset) -> Vec<String> {
    set.iter().map(|i| universe_labels[i].clone()).collect()
}

fn set_of(labels: &[String], universe_index: impl Fn(&str) -> Result<usize>) -> Result<Subset> {
    let mut s = Subset::EMPTY;
    for l in labels {
        s = s.with(universe_index(l)?);
    }
    Ok(s)
}

impl ComplexJson {
    pub fn from_complex(c: &SimplicialComplex) -> ComplexJson {
        ComplexJson {
            vertices: c.universe().labels().to_vec(),
            facets: c.facets().iter().map(|f| labels_of(c.universe().labels(), *f)).collect(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let universe = VertexUniverse::new(self.vertices.clone())?;
        let facets = self
            .facets
            .iter()
            .map(|f| set_of(f, |l| universe.index_of(l)))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(universe, facets)
    }
}

impl IdealJson {
    pub fn from_ideal(i: &MonomialIdeal) -> IdealJson {
        IdealJson {
            variables: i.universe().labels().to_vec(),
            generators: i
                .generators()
                .iter()
                .map(|g| labels_of(i.universe().labels(), *g))
                .collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let universe = VariableUniverse::from_labels(self.variables.clone())?;
        let gens = self
            .generators
            .iter()
            .map(|g| set_of(g, |l| universe.index_of(l)))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimize(universe, gens)
    }
}

impl PosetJson {
    pub fn from_poset(p: &Poset) -> PosetJson {
        let labels = p.labels();
        let mut relations = Vec::new();
        for i in 0..p.size() {
            for j in 0..p.size() {
                if p.less(i, j) {
                    relations.push((labels[i].clone(), labels[j].clone()));
                }
            }
        }
        PosetJson { elements: labels.to_vec(), relations }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        Poset::new(self.elements.clone(), &self.relations)
    }
}

impl WhiskerSpecJson {
    pub fn from_spec(s: &WhiskerSpec) -> WhiskerSpecJson {
        WhiskerSpecJson { k: s.k.clone(), d: s.d.clone() }
    }

    pub fn to_spec(&self) -> WhiskerSpec {
        WhiskerSpec::new(self.k.clone(), self.d.clone())
    }
}

impl BettiJson {
    pub fn from_table(t: &BettiTable) -> BettiJson {
        BettiJson {
            graded: t.graded().iter().map(|(&(i, j), &v)| (format!("{i},{j}"), v)).collect(),
            total: t.totals(),
            projdim: t.projdim(),
        }
    }
}

/// Parse a list of faces given as label lists, against a known universe.
pub fn faces_from_labels(universe: &VertexUniverse, faces: &[Vec<String>]) -> Result<Vec<Subset>> {
    faces.iter().map(|f| set_of(f, |l| universe.index_of(l))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complex_on;
    use crate::face_ideal::face_ideal;

    #[test]
    fn complex_round_trip() {
        let c = complex_on(3, &[&[1, 2], &[3]]);
        let json = ComplexJson::from_complex(&c);
        let text = serde_json::to_string(&json).unwrap();
        let back: ComplexJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_complex().unwrap(), c);
    }

    #[test]
    fn ideal_round_trip() {
        let c = complex_on(3, &[&[1, 2], &[2, 3]]);
        let ideal = face_ideal(&c).unwrap().ideal;
        let json = IdealJson::from_ideal(&ideal);
        let text = serde_json::to_string(&json).unwrap();
        let back: IdealJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_ideal().unwrap(), ideal);
    }

    #[test]
    fn poset_round_trip() {
        let p = Poset::from_indices(4, &[(0, 1), (1, 2)]).unwrap();
        let json = PosetJson::from_poset(&p);
        let text = serde_json::to_string(&json).unwrap();
        let back: PosetJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_poset().unwrap(), p);
    }

    #[test]
    fn unknown_labels_rejected() {
        let json = ComplexJson {
            vertices: vec!["a".into()],
            facets: vec![vec!["b".into()]],
        };
        assert!(json.to_complex().is_err());
    }

    #[test]
    fn betti_json_shape() {
        let c = complex_on(2, &[&[1], &[2]]);
        let table = crate::face_ideal::betti_formula(&c);
        let json = BettiJson::from_table(&table);
        assert_eq!(json.total, vec![3, 2]);
        assert_eq!(json.projdim, Some(1));
        assert_eq!(json.graded.get("0,2"), Some(&3));
    }
}
