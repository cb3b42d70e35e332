//! Exact spectral analysis of cubic graphs: constructors for the classic
//! cubic vertex-transitive families, an exact integer-rank kernel that
//! decides eigenvalue multiplicities over the rationals, the ±1-eigenvector
//! sign-partition machinery, rotation systems with vertex truncation, and
//! classification predicates checked against the exact oracle.
//!
//! Floating point is used only for display and as a cross-check: every
//! "is this eigenvalue simple" decision goes through fraction-free integer
//! elimination, never through a float tolerance.

pub mod classify;
pub mod cosine;
pub mod families;
pub mod graph;
pub mod linalg;
pub mod maps;
pub mod spectra;
pub mod structure;
pub mod textfmt;

pub use graph::{GraphError, Multigraph};
pub use linalg::{IntMatrix, RationalVector};
pub use maps::Map;
pub use spectra::SpectrumReport;
pub use structure::SignPartition;
