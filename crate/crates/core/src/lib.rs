//! Connected fair division of graphs: cutset obstructions to EF1, exact
//! EF1 oracles, picking algorithms, existence spectra and clique reductions.

pub mod allocation;
pub mod budget;
pub mod cli;
pub mod cutset;
pub mod fixtures;
pub mod graph;
pub mod obstruction;
pub mod picking;
pub mod reduction;
pub mod spectrum;
pub mod valuation;
pub mod vertex_set;

pub use allocation::{check_ef1, find_ef1_allocation, Allocation};
pub use budget::{Budget, Outcome};
pub use cutset::{CutsetCertificate, SearchOptions};
pub use graph::Graph;
pub use valuation::{Rational, Valuation};
pub use vertex_set::VertexSet;
