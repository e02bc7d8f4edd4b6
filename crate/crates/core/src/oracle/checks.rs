use serde::Serialize;

use crate::decomposition::{CliquePartition, GreedyDecomposition};
use crate::error::Result;
use crate::graph::Graph;
use crate::representation::{
    distinctness, representation_from_greedy, representation_from_partition,
};

/// Counterexample to: if `u` and `v` have identical incidence sets, the one
/// clique holding both is maximal in the host and neither vertex lies in
/// any other clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DuplicatePairViolation {
    /// Identical sets but no (or more than one) clique holds both.
    SharedCliqueCount { u: usize, v: usize, count: usize },
    NotMaximal {
        u: usize,
        v: usize,
        clique: Vec<usize>,
        witness: usize,
    },
    ExtraClique {
        u: usize,
        v: usize,
        vertex: usize,
        cliques: usize,
    },
}

pub fn check_duplicate_sets(g: &Graph, p: &CliquePartition) -> Result<Vec<DuplicatePairViolation>> {
    let r = representation_from_partition(g, p)?;
    let containing = |v: usize| p.cliques().iter().filter(move |c| c.contains(v));
    let mut out = Vec::new();
    for class in distinctness(&r).duplicate_classes() {
        for (i, &u) in class.iter().enumerate() {
            for &v in &class[i + 1..] {
                let shared: Vec<_> = containing(u).filter(|c| c.contains(v)).collect();
                if shared.len() != 1 {
                    out.push(DuplicatePairViolation::SharedCliqueCount {
                        u,
                        v,
                        count: shared.len(),
                    });
                    continue;
                }
                let clique = shared[0];
                if let Some(witness) = g.extension_witness(clique.vertices()) {
                    out.push(DuplicatePairViolation::NotMaximal {
                        u,
                        v,
                        clique: clique.vertices().to_vec(),
                        witness,
                    });
                }
                for vertex in [u, v] {
                    let cliques = containing(vertex).count();
                    if cliques != 1 {
                        out.push(DuplicatePairViolation::ExtraClique {
                            u,
                            v,
                            vertex,
                            cliques,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCliqueBoundViolation {
    pub position: usize,
    pub x: usize,
    pub y: usize,
    /// Number of other sequence members meeting `{x, y}`.
    pub touching: usize,
    pub bound: usize,
}

/// For every 2-clique `{x, y}` of the greedy sequence with `x` or `y` of
/// degree above one, counts the other members containing `x` or `y` and
/// checks the count is at most `n - 2`.
pub fn check_edge_clique_bound(
    g: &Graph,
    d: &GreedyDecomposition,
) -> Result<Vec<EdgeCliqueBoundViolation>> {
    representation_from_greedy(g, d)?;
    let bound = g.n().saturating_sub(2);
    let mut out = Vec::new();
    for (position, c) in d.sequence().iter().enumerate() {
        let &[x, y] = c.vertices() else { continue };
        if g.deg(x).max(g.deg(y)) <= 1 {
            continue;
        }
        let touching = d
            .sequence()
            .iter()
            .enumerate()
            .filter(|&(i, q)| i != position && (q.contains(x) || q.contains(y)))
            .count();
        if touching > bound {
            out.push(EdgeCliqueBoundViolation {
                position,
                x,
                y,
                touching,
                bound,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{greedy_decomposition, GreedyStrategy};
    use crate::graph::Clique;

    #[test]
    fn triangle_duplicates_are_certified() {
        let p = CliquePartition::new(3, [Clique::new(vec![0, 1, 2]).unwrap()]);
        assert!(check_duplicate_sets(&Graph::complete(3), &p)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn k22_has_no_duplicates() {
        let g = Graph::complete_bipartite(2, 2);
        let p = greedy_decomposition(&g, GreedyStrategy::Lexicographic).to_partition();
        assert!(check_duplicate_sets(&g, &p).unwrap().is_empty());
    }

    #[test]
    fn invalid_partition_rejected() {
        let p = CliquePartition::new(3, [Clique::pair(0, 1)]);
        assert!(check_duplicate_sets(&Graph::complete(3), &p).is_err());
    }

    #[test]
    fn edge_clique_examples() {
        let g = Graph::path(3);
        let d = GreedyDecomposition::new(3, vec![Clique::pair(0, 1), Clique::pair(1, 2)]);
        assert!(check_edge_clique_bound(&g, &d).unwrap().is_empty());

        let k4 = Graph::complete(4);
        let d = greedy_decomposition(&k4, GreedyStrategy::Lexicographic);
        assert!(check_edge_clique_bound(&k4, &d).unwrap().is_empty());

        let bad = GreedyDecomposition::new(3, vec![Clique::pair(0, 1)]);
        assert!(check_edge_clique_bound(&g, &bad).is_err());
    }

    #[test]
    fn edge_clique_skips_isolated_edges() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = greedy_decomposition(&g, GreedyStrategy::Lexicographic);
        assert!(check_edge_clique_bound(&g, &d).unwrap().is_empty());
    }
}
