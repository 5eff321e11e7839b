//! Exact-arithmetic engine for chromatic symmetric functions in the
//! star basis, driven by the deletion-near-contraction relation.
//!
//! The crate provides:
//! - simple graphs with the DNC edge operations and canonical forms,
//! - integer partitions under the lexicographic order,
//! - the memoized star-expansion engine and a power-sum brute-force oracle,
//! - closed-form coefficient formulas for hooks, paths, cycles, pans,
//!   leading partitions/coefficients, cuttlefish, and bicyclic graphs,
//! - structural inference from an expansion alone, and
//! - exhaustive unicyclic enumeration with CSF-collision search.

pub mod canon;
pub mod enumerate;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod infer;
pub mod io;
pub mod partition;
pub mod psum;
pub mod star;
pub mod words;

#[cfg(test)]
pub(crate) mod fixtures;

pub use canon::{canonical_form, canonical_labeling, CanonicalCode};
pub use graph::{EdgeRef, Graph, GraphError, UnicyclicDecomposition, VertexClassification};
pub use partition::{partitions_of, Partition, PartitionError};
pub use star::{star_expand, EdgePolicy, StarEngine, StarExpansion};
