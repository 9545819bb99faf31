//! Tree and branch decompositions: validation, normalisation, conversions,
//! chordal structure, and exact width oracles.

mod branch;
mod chordal;
mod td;
pub(crate) mod tree;
mod treewidth;

pub use branch::{bd_to_td, exact_branchwidth, td_to_bd, validate_bd, BranchDecomposition, Leaf};
pub use chordal::{chordal_completion, is_k_tree, is_perfect_elimination_ordering, peo};
pub use td::{normalize_td, validate_td, TreeDecomposition};
pub use treewidth::{elimination_td, exact_treewidth};
