//! Mixed extensions of small graphs, exact adjacency spectra, and a
//! constructive classification of graphs with at most three adjacency
//! eigenvalues outside `{0, -1}`.

pub mod canon;
pub mod catalog;
pub mod classify;
pub mod dioph;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod induced;
pub mod linalg;
pub mod mixext;
pub mod poly;
pub mod reduction;
pub mod spectrum;
pub mod verify;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Graph, MAX_ORDER};
pub use graph6::{parse_graph6, write_graph6};
pub use mixext::{expand, quotient_matrix, ExtensionType};
pub use spectrum::{spectral_summary, SpectralSummary};
