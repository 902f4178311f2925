//! Recognition of well-covered graphs through clique covers.
//!
//! A graph is well-covered when all of its maximal independent sets have
//! the same cardinality. For graphs covered by alpha(G) cliques the
//! property reduces to a per-clique domination test, with an equivalent
//! formulation in terms of zero-divisor linear forms in the edge ring.
//! Purity of a simplicial complex reduces to well-coveredness of its
//! non-comparability graph. Every fast path here is cross-validated
//! against an exhaustive oracle at desk scale.

pub mod cover;
pub mod edge_ring;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod graph;
pub mod matching;
pub mod simplicial;
pub mod wellcovered;

pub use cover::{BasicCliqueCover, CliqueCover};
pub use error::{Error, Result};
pub use graph::{Graph, OracleVerdict, VertexSet};
pub use simplicial::SimplicialComplex;
pub use wellcovered::Verdict;
