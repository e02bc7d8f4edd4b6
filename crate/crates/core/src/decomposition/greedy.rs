use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::CliquePartition;
use crate::graph::{Clique, Graph};

/// Which maximal clique a greedy step removes.
///
/// Both strategies run the same procedure over a vertex order: seed at the
/// first vertex (in that order) with a residual edge, pair it with its first
/// residual neighbour, then keep adding the first vertex adjacent to every
/// member. `Lexicographic` uses `0, 1, ..., n-1`; `SeededRandom` uses a
/// permutation drawn from a ChaCha8 stream seeded with `seed`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GreedyStrategy {
    Lexicographic,
    SeededRandom { seed: u64 },
}

impl GreedyStrategy {
    /// Vertex order used by the strategy, as a list of vertices.
    pub fn vertex_order(&self, n: usize) -> Vec<usize> {
        let mut order: Vec<usize> = (0..n).collect();
        if let GreedyStrategy::SeededRandom { seed } = *self {
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        order
    }
}

impl fmt::Display for GreedyStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GreedyStrategy::Lexicographic => write!(f, "lex"),
            GreedyStrategy::SeededRandom { seed } => write!(f, "random:{seed}"),
        }
    }
}

impl FromStr for GreedyStrategy {
    type Err = String;

    /// Accepts `lex` or `random:<seed>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" | "lexicographic" => Ok(GreedyStrategy::Lexicographic),
            _ => s
                .strip_prefix("random:")
                .and_then(|seed| seed.parse().ok())
                .map(|seed| GreedyStrategy::SeededRandom { seed })
                .ok_or_else(|| {
                    format!("unknown strategy {s:?}, expected \"lex\" or \"random:<seed>\"")
                }),
        }
    }
}

/// An ordered clique sequence in which each clique is maximal in the graph
/// left after deleting the edges of all earlier ones. Trivial cliques for
/// vertices isolated in the host come last, in vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GreedyDecomposition {
    n: usize,
    sequence: Vec<Clique>,
}

impl GreedyDecomposition {
    pub fn new(n: usize, sequence: Vec<Clique>) -> Self {
        Self { n, sequence }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sequence(&self) -> &[Clique] {
        &self.sequence
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn nontrivial_count(&self) -> usize {
        self.sequence.iter().filter(|c| !c.is_trivial()).count()
    }

    /// Forgets the order.
    pub fn to_partition(&self) -> CliquePartition {
        CliquePartition::new(self.n, self.sequence.iter().cloned())
    }
}

pub fn greedy_decomposition(g: &Graph, strategy: GreedyStrategy) -> GreedyDecomposition {
    let order = strategy.vertex_order(g.n());
    let mut residual = g.clone();
    let mut sequence = Vec::new();

    while let Some(&seed) = order.iter().find(|&&v| residual.deg(v) > 0) {
        let mut members = vec![seed];
        // Candidates only shrink as members grow, so one pass in order picks
        // the first eligible vertex at every step.
        for &w in &order {
            if w != seed && members.iter().all(|&m| residual.has_edge(m, w)) {
                members.push(w);
            }
        }
        let clique = Clique::new(members).expect("members are distinct and non-empty");
        for (u, v) in clique.pairs() {
            residual.set_edge(u, v, false);
        }
        sequence.push(clique);
    }

    sequence.extend(
        g.vertices()
            .filter(|&v| g.is_isolated(v))
            .map(Clique::trivial),
    );
    GreedyDecomposition::new(g.n(), sequence)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GreedyViolation {
    VertexCountMismatch {
        expected: usize,
        found: usize,
    },
    VertexOutOfRange {
        position: usize,
        vertex: usize,
    },
    NotAClique {
        position: usize,
        u: usize,
        v: usize,
    },
    /// The edge `{u, v}` was already removed by an earlier clique.
    DoubleCovered {
        position: usize,
        u: usize,
        v: usize,
    },
    /// `witness` is adjacent, in the residual graph, to every member.
    NotMaximal {
        position: usize,
        witness: usize,
    },
    UncoveredEdge {
        u: usize,
        v: usize,
    },
    UncoveredIsolatedVertex {
        vertex: usize,
    },
}

/// Replays `d` against `g`, checking each clique in its residual graph.
pub fn validate_greedy(g: &Graph, d: &GreedyDecomposition) -> Vec<GreedyViolation> {
    let mut out = Vec::new();
    if d.n() != g.n() {
        out.push(GreedyViolation::VertexCountMismatch {
            expected: g.n(),
            found: d.n(),
        });
    }
    let mut residual = g.clone();
    let mut trivial_seen = vec![false; g.n()];

    for (position, c) in d.sequence().iter().enumerate() {
        if let Some(&v) = c.vertices().iter().find(|&&v| v >= g.n()) {
            out.push(GreedyViolation::VertexOutOfRange {
                position,
                vertex: v,
            });
            continue;
        }
        let mut sound = true;
        for (u, v) in c.pairs() {
            if !g.has_edge(u, v) {
                out.push(GreedyViolation::NotAClique { position, u, v });
                sound = false;
            } else if !residual.has_edge(u, v) {
                out.push(GreedyViolation::DoubleCovered { position, u, v });
                sound = false;
            }
        }
        if sound {
            if let Some(witness) = residual.extension_witness(c.vertices()) {
                out.push(GreedyViolation::NotMaximal { position, witness });
            }
        }
        if c.is_trivial() {
            trivial_seen[c.vertices()[0]] = true;
        }
        for (u, v) in c.pairs() {
            if g.has_edge(u, v) {
                residual.set_edge(u, v, false);
            }
        }
    }

    out.extend(
        residual
            .edges()
            .map(|(u, v)| GreedyViolation::UncoveredEdge { u, v }),
    );
    out.extend(
        g.vertices()
            .filter(|&v| g.is_isolated(v) && !trivial_seen[v])
            .map(|vertex| GreedyViolation::UncoveredIsolatedVertex { vertex }),
    );
    out
}
