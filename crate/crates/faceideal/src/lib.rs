//! Exact combinatorics of face ideals of simplicial complexes: whisker
//! complexes, Alexander duality, linear quotients and shellability,
//! explicit graded free resolutions, chain/antichain ideals of posets,
//! and higher-dimensional whisker complexes — all verified against
//! brute-force oracles at small scale.

pub mod betti;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod face_ideal;
pub mod homology;
pub mod ideal;
pub mod json;
pub mod poset;
pub mod resolution;
pub mod subset;
pub mod transversal;
pub mod whisker;

pub use error::{Error, Result};

/// Read a size limit, honoring the `FACEIDEAL_MAX_N` override.
pub fn size_limit(default: usize) -> usize {
    std::env::var("FACEIDEAL_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

/// Enforce a named size limit.
pub fn check_limit(what: &'static str, got: usize, default: usize) -> Result<()> {
    let limit = size_limit(default);
    if got > limit {
        Err(Error::SizeLimit { what, got, limit })
    } else {
        Ok(())
    }
}
