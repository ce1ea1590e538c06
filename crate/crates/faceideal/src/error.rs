use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("universe too large: {0} vertices (limit {1})")]
    UniverseTooLarge(usize, usize),
    #[error("duplicate label: {0}")]
    DuplicateLabel(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("void complex: a simplicial complex must have at least one face")]
    VoidComplex,
    #[error("facet index {0} out of universe of size {1}")]
    FacetOutOfRange(usize, usize),
    #[error("empty facet not allowed here: {0}")]
    EmptyFacet(String),
    #[error("skeleton dimension {0} out of range for complex of dimension {1}")]
    SkeletonOutOfRange(i64, i64),
    #[error("order is not a permutation of the facets")]
    NotAFacetPermutation,
    #[error("order is not a permutation of the generators")]
    NotAGeneratorPermutation,
    #[error("ideal has no generators")]
    EmptyIdeal,
    #[error("improper ideal: contains the unit monomial 1")]
    ImproperIdeal,
    #[error("generator index {0} out of range (m = {1})")]
    GeneratorIndexOutOfRange(usize, usize),
    #[error("size limit exceeded: {what} = {got}, limit {limit} (override with FACEIDEAL_MAX_N)")]
    SizeLimit { what: &'static str, got: usize, limit: usize },
    #[error("the full simplex has no minimal nonfaces; gamma is undefined")]
    FullSimplex,
    #[error("poset relation is cyclic: {0}")]
    CyclicPoset(String),
    #[error("poset must have at least one element")]
    EmptyPoset,
    #[error("whisker spec invalid: {0}")]
    BadWhiskerSpec(String),
    #[error("mixed generator degrees: found degrees {0} and {1}")]
    MixedDegrees(usize, usize),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
