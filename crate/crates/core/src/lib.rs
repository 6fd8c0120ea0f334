//! Exact machinery for 2-intersecting families of permutations and perfect
//! matchings: degree, certificates, isotypic decomposition and maximum-clique
//! verification of the small cases.

pub mod boolfn;
pub mod cert;
pub mod clique;
pub mod domains;
pub mod error;
pub mod linalg;
pub mod repr;
pub mod sample;

pub use domains::{Domain, Element, Kind, Pair, PerfectMatching, Permutation, Space};
pub use error::{Error, Result};
