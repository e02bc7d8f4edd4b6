//! Clique partitions of simple graphs and their set representations.
//!
//! * [`graph`]: graphs on `0..n`, cliques, enumeration and canonical forms.
//! * [`format`]: graph6 and edge-list text formats.
//! * [`decomposition`]: greedy maximal-clique decompositions and the
//!   inductive edge/triangle partition with at most `⌊n²/4⌋` cliques.
//! * [`representation`]: the correspondence between partitions and set
//!   representations, and augmentation to pairwise distinct sets.
//! * [`oracle`]: exact small-graph searches and exhaustive bound sweeps.
//! * [`artifact`]: JSON and DOT output.

pub mod artifact;
pub mod decomposition;
pub mod error;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod representation;

pub use decomposition::{
    erdos_partition, greedy_decomposition, validate_greedy, validate_partition, CliquePartition,
    GreedyDecomposition, GreedyStrategy,
};
pub use error::{Error, GraphError, ParseError, Result};
pub use graph::{enumerate_labeled_graphs, quarter_square, Clique, Graph};
pub use representation::{
    augment_to_distinct, distinctness, partition_from_representation, representation_from_greedy,
    representation_from_partition, validate_representation, SetRepresentation,
};
