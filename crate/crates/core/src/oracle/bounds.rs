//! Exhaustive checks of the `⌊n²/4⌋` bounds over every labelled graph on
//! `n` vertices.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decomposition::{
    erdos_partition, greedy_decomposition, validate_greedy, validate_partition, GreedyStrategy,
};
use crate::error::GraphError;
use crate::graph::{labeled_graph_count, quarter_square, Graph, MAX_ENUMERATION_VERTICES};
use crate::representation::{
    augment_to_distinct, distinctness, representation_from_greedy, representation_from_partition,
};

pub const MIN_SWEEP_VERTICES: usize = 4;
pub const MAX_SWEEP_VERTICES: usize = MAX_ENUMERATION_VERTICES;

/// Seeds used alongside the lexicographic strategy by default.
pub const DEFAULT_SEEDS: [u64; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

/// Graphs per parallel work unit.
const CHUNK: u64 = 1 << 10;

pub fn default_strategies() -> Vec<GreedyStrategy> {
    strategies_with_seeds(&DEFAULT_SEEDS)
}

/// Lexicographic followed by one seeded strategy per seed.
pub fn strategies_with_seeds(seeds: &[u64]) -> Vec<GreedyStrategy> {
    std::iter::once(GreedyStrategy::Lexicographic)
        .chain(
            seeds
                .iter()
                .map(|&seed| GreedyStrategy::SeededRandom { seed }),
        )
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundCheck {
    /// Non-trivial cliques of a greedy decomposition.
    GreedyCliques,
    /// Greedy cliques including the trailing trivial cliques.
    GreedyTotal,
    /// Ground size of the augmented greedy representation.
    AugmentedElements,
    AugmentedNotDistinct,
    InvalidGreedy,
    ErdosCount,
    ErdosCliqueSize,
    ErdosNotDistinct,
    InvalidErdos,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundViolation {
    /// Edge bitmask of the offending graph.
    pub graph: u64,
    /// `None` for checks on the edge/triangle partition.
    pub strategy: Option<GreedyStrategy>,
    pub check: BoundCheck,
    pub observed: usize,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub graphs_checked: u64,
    pub bound: usize,
    pub strategies: Vec<GreedyStrategy>,
    /// Longest greedy sequence seen, trivial cliques included.
    pub max_cliques_seen: usize,
    pub max_nontrivial_cliques_seen: usize,
    pub max_elements_seen: usize,
    pub max_erdos_cliques_seen: usize,
    pub violations: Vec<BoundViolation>,
}

impl BoundReport {
    fn empty(n: usize, strategies: &[GreedyStrategy]) -> Self {
        Self {
            n,
            graphs_checked: 0,
            bound: quarter_square(n),
            strategies: strategies.to_vec(),
            max_cliques_seen: 0,
            max_nontrivial_cliques_seen: 0,
            max_elements_seen: 0,
            max_erdos_cliques_seen: 0,
            violations: Vec::new(),
        }
    }

    /// Folds `other` (covering later graphs) into `self`.
    fn merge(mut self, other: BoundReport) -> Self {
        self.graphs_checked += other.graphs_checked;
        self.max_cliques_seen = self.max_cliques_seen.max(other.max_cliques_seen);
        self.max_nontrivial_cliques_seen = self
            .max_nontrivial_cliques_seen
            .max(other.max_nontrivial_cliques_seen);
        self.max_elements_seen = self.max_elements_seen.max(other.max_elements_seen);
        self.max_erdos_cliques_seen = self
            .max_erdos_cliques_seen
            .max(other.max_erdos_cliques_seen);
        self.violations.extend(other.violations);
        self
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn check_one(&mut self, mask: u64, strategies: &[GreedyStrategy]) {
        let g = Graph::from_edge_mask(self.n, mask).expect("sweep sizes fit a bitmask");
        let bound = self.bound;
        let flag = |out: &mut Vec<BoundViolation>, strategy, check, observed, limit| {
            out.push(BoundViolation {
                graph: mask,
                strategy,
                check,
                observed,
                bound: limit,
            })
        };

        for &s in strategies {
            let d = greedy_decomposition(&g, s);
            let broken = validate_greedy(&g, &d);
            if !broken.is_empty() {
                flag(
                    &mut self.violations,
                    Some(s),
                    BoundCheck::InvalidGreedy,
                    broken.len(),
                    0,
                );
                continue;
            }
            let nontrivial = d.nontrivial_count();
            self.max_cliques_seen = self.max_cliques_seen.max(d.len());
            self.max_nontrivial_cliques_seen = self.max_nontrivial_cliques_seen.max(nontrivial);
            if nontrivial > bound {
                flag(
                    &mut self.violations,
                    Some(s),
                    BoundCheck::GreedyCliques,
                    nontrivial,
                    bound,
                );
            }
            if d.len() > bound {
                flag(
                    &mut self.violations,
                    Some(s),
                    BoundCheck::GreedyTotal,
                    d.len(),
                    bound,
                );
            }
            let r = representation_from_greedy(&g, &d).expect("validated above");
            let augmented = augment_to_distinct(&r);
            self.max_elements_seen = self.max_elements_seen.max(augmented.ground_size());
            if augmented.ground_size() > bound {
                flag(
                    &mut self.violations,
                    Some(s),
                    BoundCheck::AugmentedElements,
                    augmented.ground_size(),
                    bound,
                );
            }
            if !distinctness(&augmented).is_family {
                flag(
                    &mut self.violations,
                    Some(s),
                    BoundCheck::AugmentedNotDistinct,
                    1,
                    0,
                );
            }
        }

        let p = erdos_partition(&g);
        let broken = validate_partition(&g, &p);
        if !broken.is_empty() {
            flag(
                &mut self.violations,
                None,
                BoundCheck::InvalidErdos,
                broken.len(),
                0,
            );
            return;
        }
        self.max_erdos_cliques_seen = self.max_erdos_cliques_seen.max(p.len());
        if p.len() > bound {
            flag(
                &mut self.violations,
                None,
                BoundCheck::ErdosCount,
                p.len(),
                bound,
            );
        }
        if p.max_clique_size() > 3 {
            flag(
                &mut self.violations,
                None,
                BoundCheck::ErdosCliqueSize,
                p.max_clique_size(),
                3,
            );
        }
        let r = representation_from_partition(&g, &p).expect("validated above");
        if !distinctness(&r).is_family {
            flag(
                &mut self.violations,
                None,
                BoundCheck::ErdosNotDistinct,
                1,
                0,
            );
        }
    }
}

fn check_sweep_size(n: usize) -> Result<(), GraphError> {
    if n < MIN_SWEEP_VERTICES {
        return Err(GraphError::TooSmall {
            what: "bound sweep",
            n,
            min: MIN_SWEEP_VERTICES,
        });
    }
    if n > MAX_SWEEP_VERTICES {
        return Err(GraphError::TooLarge {
            what: "bound sweep",
            n,
            max: MAX_SWEEP_VERTICES,
        });
    }
    Ok(())
}

/// Runs every check on the graphs with the given edge bitmasks, in order.
pub fn bound_check_masks(
    n: usize,
    masks: &[u64],
    strategies: &[GreedyStrategy],
) -> Result<BoundReport, GraphError> {
    check_sweep_size(n)?;
    let limit = labeled_graph_count(n);
    if let Some(&bad) = masks.iter().find(|&&m| m >= limit) {
        return Err(GraphError::MaskOutOfRange { mask: bad, n });
    }
    let parts: Vec<BoundReport> = masks
        .par_chunks(CHUNK as usize)
        .map(|chunk| {
            let mut report = BoundReport::empty(n, strategies);
            for &mask in chunk {
                report.check_one(mask, strategies);
                report.graphs_checked += 1;
            }
            report
        })
        .collect();
    Ok(parts
        .into_iter()
        .fold(BoundReport::empty(n, strategies), BoundReport::merge))
}

/// Runs every check on all `2^(n(n-1)/2)` labelled graphs on `n` vertices,
/// `4 <= n <= 7`. Work is split into bitmask ranges across the rayon pool;
/// the report does not depend on the number of workers.
pub fn exhaustive_bound_check(
    n: usize,
    strategies: &[GreedyStrategy],
) -> Result<BoundReport, GraphError> {
    check_sweep_size(n)?;
    let total = labeled_graph_count(n);
    let parts: Vec<BoundReport> = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut report = BoundReport::empty(n, strategies);
            for mask in c * CHUNK..((c + 1) * CHUNK).min(total) {
                report.check_one(mask, strategies);
                report.graphs_checked += 1;
            }
            report
        })
        .collect();
    Ok(parts
        .into_iter()
        .fold(BoundReport::empty(n, strategies), BoundReport::merge))
}
