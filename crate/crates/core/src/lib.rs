//! Exact, desk-scale algorithms for graph parameters tied to treewidth, and
//! verifiers for the certificates that witness them.
//!
//! Every exponential oracle is gated by a [`Budget`]; exceeding it yields
//! [`Error::Budget`], never a wrong answer. All fractional quantities are
//! exact rationals.

mod bits;
pub mod budget;
pub mod certificates;
pub mod decomp;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod linkage;
pub mod lp;
pub mod minors;
pub mod model;
pub mod paths;
pub mod products;
pub mod rational;
pub mod report;
pub mod separators;

pub use budget::Budget;
pub use certificates::{Bramble, HittingSet, Tangle};
pub use decomp::{BranchDecomposition, TreeDecomposition};
pub use error::{Defect, Error, Result};
pub use families::FamilySpec;
pub use graph::{cartesian_with_k2, components, is_connected_subset, Graph, VertexSet};
pub use io::Certificate;
pub use minors::{GridLikeMinorCert, WeightedBramble};
pub use model::Model;
pub use rational::Rational;
pub use report::ParameterReport;
pub use separators::SeparatorCert;
pub use paths::{disjoint_paths, DisjointPaths};
