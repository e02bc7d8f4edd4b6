//! Clique partitions: the greedy maximal-clique decomposition, the
//! inductive edge/triangle partition, and validators for both.

mod erdos;
mod greedy;
mod partition;

pub use erdos::erdos_partition;
pub use greedy::{
    greedy_decomposition, validate_greedy, GreedyDecomposition, GreedyStrategy, GreedyViolation,
};
pub use partition::{validate_partition, CliquePartition, PartitionViolation};
