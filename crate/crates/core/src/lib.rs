//! Exact flow and chromatic polynomials of small multigraphs, certified
//! real-root analysis, and structural audits.

pub mod audit;
pub mod error;
pub mod flow;
pub mod graph;
pub mod poly;
pub mod search;

pub use num_bigint;
pub use num_rational;
