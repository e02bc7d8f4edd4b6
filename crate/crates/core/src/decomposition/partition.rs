use serde::Serialize;

use crate::graph::{Clique, Graph};

/// An unordered collection of cliques, stored sorted. Validity against a
/// host graph is checked by [`validate_partition`]; duplicates are kept so
/// that validation can report them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliquePartition {
    n: usize,
    cliques: Vec<Clique>,
}

impl CliquePartition {
    pub fn new(n: usize, cliques: impl IntoIterator<Item = Clique>) -> Self {
        let mut cliques: Vec<Clique> = cliques.into_iter().collect();
        cliques.sort();
        Self { n, cliques }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn nontrivial_count(&self) -> usize {
        self.cliques.iter().filter(|c| !c.is_trivial()).count()
    }

    pub fn max_clique_size(&self) -> usize {
        self.cliques.iter().map(Clique::len).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PartitionViolation {
    VertexCountMismatch {
        expected: usize,
        found: usize,
    },
    VertexOutOfRange {
        clique: usize,
        vertex: usize,
    },
    /// Members `u`, `v` of clique number `clique` are not adjacent.
    NotAClique {
        clique: usize,
        u: usize,
        v: usize,
    },
    DuplicateClique {
        clique: usize,
    },
    /// `covered` cliques contain the pair; an edge needs exactly one, a
    /// non-edge none.
    PairCoverage {
        u: usize,
        v: usize,
        adjacent: bool,
        covered: usize,
    },
    UncoveredIsolatedVertex {
        vertex: usize,
    },
}

/// Checks `p` against `g`. An empty result means `p` is a clique partition
/// of `g`: every edge in exactly one clique, every isolated vertex in a
/// trivial clique, no repeated cliques.
pub fn validate_partition(g: &Graph, p: &CliquePartition) -> Vec<PartitionViolation> {
    let mut out = Vec::new();
    if p.n() != g.n() {
        out.push(PartitionViolation::VertexCountMismatch {
            expected: g.n(),
            found: p.n(),
        });
    }
    let n = g.n();
    let mut covered = vec![0usize; n * n];
    let mut has_trivial = vec![false; n];

    for (i, c) in p.cliques().iter().enumerate() {
        if let Some(&v) = c.vertices().iter().find(|&&v| v >= n) {
            out.push(PartitionViolation::VertexOutOfRange {
                clique: i,
                vertex: v,
            });
            continue;
        }
        if i > 0 && p.cliques()[i - 1] == *c {
            out.push(PartitionViolation::DuplicateClique { clique: i });
        }
        if c.is_trivial() {
            has_trivial[c.vertices()[0]] = true;
        }
        for (u, v) in c.pairs() {
            if !g.has_edge(u, v) {
                out.push(PartitionViolation::NotAClique { clique: i, u, v });
            }
            covered[u * n + v] += 1;
        }
    }

    for v in 1..n {
        for u in 0..v {
            let adjacent = g.has_edge(u, v);
            let count = covered[u * n + v];
            if count != usize::from(adjacent) {
                out.push(PartitionViolation::PairCoverage {
                    u,
                    v,
                    adjacent,
                    covered: count,
                });
            }
        }
    }
    for v in g.vertices() {
        if g.is_isolated(v) && !has_trivial[v] {
            out.push(PartitionViolation::UncoveredIsolatedVertex { vertex: v });
        }
    }
    out
}
