//! Exact spectral-radius extremal analysis for graphs of given order and rank.
//!
//! The library is built around vertex multiplication (blow-ups): every graph
//! whose adjacency matrix has rank k is a blow-up of a reduced graph on k or
//! fewer vertices, so extremal questions over "order n, rank r" reduce to
//! finite searches over composition vectors of a small catalog of bases.
//! Spectral radii are certified through exact integer linear algebra
//! (fraction-free rank, integer characteristic polynomials, Sturm root
//! isolation) and cross-checked by floating-point power iteration.

pub mod catalog;
pub mod error;
pub mod exact;
pub mod graph;
pub mod graph6;
pub mod report;
pub mod search;
pub mod spectral;

pub use catalog::{catalog, complete_multipartite, turan, ReducedGraphId};
pub use error::{Error, Result};
pub use exact::matrix::IntMatrix;
pub use exact::poly::IntPolynomial;
pub use exact::roots::{
    compare_largest_real_roots, largest_real_root, largest_real_root_bracket, RootBracket,
};
pub use graph::{CompositionVector, Graph};
pub use graph6::{parse_graph6, to_graph6};
pub use search::{
    alpha, compositions, enumerate_connected, f_composition, f_radius, g10_extremal_form,
    g1_extremal_form, g7_extremal_form, lemma_comparisons, min_radius_bounds, min_rank5_extremal,
    search_family, search_family_with, theorem2_k, verify_theorem1, verify_theorem2,
    Certification, ExtremalVerdict, KChoice, Objective, SearchOptions, SearchResult,
};
pub use spectral::{
    edge_count_bound, is_equitable, quotient_matrix, quotient_radius, rayleigh_quotient,
    spectral_radius, turan_radius_closed_form, Partition, QuotientMatrix, SpectralResult,
};

/// Version string reported by machine-readable outputs.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
