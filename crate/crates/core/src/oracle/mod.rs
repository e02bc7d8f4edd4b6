//! Brute-force ground truth for small graphs: exact clique partition and
//! intersection numbers, exhaustive bound sweeps, and structural checks on
//! partitions and greedy decompositions.

mod bounds;
mod checks;
mod search;

pub use bounds::{
    bound_check_masks, default_strategies, exhaustive_bound_check, strategies_with_seeds,
    BoundCheck, BoundReport, BoundViolation, DEFAULT_SEEDS, MAX_SWEEP_VERTICES, MIN_SWEEP_VERTICES,
};
pub use checks::{
    check_duplicate_sets, check_edge_clique_bound, DuplicatePairViolation, EdgeCliqueBoundViolation,
};
pub use search::{
    for_each_clique_partition, for_each_edge_partition, min_clique_partition,
    min_distinct_representation, MAX_CP_VERTICES, MAX_ENUMERATED_PARTITION_VERTICES,
    MAX_OMEGA_VERTICES,
};
