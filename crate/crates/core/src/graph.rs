//! Simple undirected graphs on dense vertex labels `0..n`, plus cliques.
//!
//! Edge bitmasks index the pair `{i, j}` (`i < j`) at bit `j*(j-1)/2 + i`,
//! i.e. the column-major upper triangle that graph6 also uses. Enumeration,
//! canonical forms and sweep reports all speak this encoding.

use std::fmt;

use itertools::Itertools;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Largest vertex count whose edge set fits a `u64` bitmask.
pub const MAX_MASK_VERTICES: usize = 11;
/// Largest vertex count accepted by [`enumerate_labeled_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 7;
/// Largest vertex count accepted by [`Graph::canonical_form`].
pub const MAX_CANONICAL_VERTICES: usize = 8;

/// Bit position of the pair `{u, v}` in an edge bitmask.
#[inline]
pub fn pair_index(u: usize, v: usize) -> usize {
    let (i, j) = if u < v { (u, v) } else { (v, u) };
    debug_assert!(i != j);
    j * (j - 1) / 2 + i
}

/// Number of unordered vertex pairs, `n(n-1)/2`.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `⌊n²/4⌋`, the extremal clique count for `n` vertices.
#[inline]
pub fn quarter_square(n: usize) -> usize {
    n * n / 4
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Row-major adjacency matrix, symmetric with an empty diagonal.
    adj: Vec<bool>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            for u in 0..v {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::path(n);
        g.set_edge(0, n - 1, true);
        g
    }

    /// Builds a graph from an explicit edge list, rejecting loops,
    /// repeated edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Decodes an edge bitmask (see the module docs for the bit layout).
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        if n > MAX_MASK_VERTICES {
            return Err(GraphError::TooLarge {
                what: "edge bitmask",
                n,
                max: MAX_MASK_VERTICES,
            });
        }
        let mut g = Self::empty(n);
        for v in 1..n {
            for u in 0..v {
                if mask >> pair_index(u, v) & 1 == 1 {
                    g.set_edge(u, v, true);
                }
            }
        }
        Ok(g)
    }

    pub fn edge_mask(&self) -> Result<u64, GraphError> {
        if self.n > MAX_MASK_VERTICES {
            return Err(GraphError::TooLarge {
                what: "edge bitmask",
                n: self.n,
                max: MAX_MASK_VERTICES,
            });
        }
        Ok(self
            .edges()
            .fold(0u64, |m, (u, v)| m | 1 << pair_index(u, v)))
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(p) {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// `false` for `u == v`. Panics if either vertex is out of range.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u * self.n + v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| self.adj[u * self.n + v])
                .map(move |v| (u, v))
        })
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter().enumerate().filter(|(_, &b)| b).map(|(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.adj[v * self.n..(v + 1) * self.n]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.deg(v) == 0
    }

    /// True when every pair of distinct members is adjacent. Out-of-range
    /// members make the set a non-clique.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().all(|&v| v < self.n)
            && vertices
                .iter()
                .tuple_combinations()
                .all(|(&u, &v)| u != v && self.has_edge(u, v))
    }

    /// True when no vertex outside `clique` is adjacent to all of it.
    pub fn is_maximal_clique(&self, clique: &[usize]) -> bool {
        self.extension_witness(clique).is_none()
    }

    /// Smallest vertex outside `clique` adjacent to every member, if any.
    pub fn extension_witness(&self, clique: &[usize]) -> Option<usize> {
        (0..self.n).find(|&w| !clique.contains(&w) && clique.iter().all(|&u| self.has_edge(u, w)))
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in increasing
    /// order of the originals. The returned map sends new labels to old.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut map: Vec<usize> = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        for &v in &map {
            self.check_vertex(v)?;
        }
        let mut sub = Graph::empty(map.len());
        for (i, &a) in map.iter().enumerate() {
            for (j, &b) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    sub.set_edge(i, j, true);
                }
            }
        }
        Ok((sub, map))
    }

    /// Same vertex set with `edges` deleted. Every listed edge must exist.
    pub fn remove_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in edges {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if u == v || !g.has_edge(u, v) {
                return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v, false);
        }
        Ok(g)
    }

    /// Applies the relabelling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        g
    }

    /// Minimum edge bitmask over all `n!` relabellings. Two graphs are
    /// isomorphic iff their canonical forms (and vertex counts) agree.
    pub fn canonical_form(&self) -> Result<u64, GraphError> {
        if self.n > MAX_CANONICAL_VERTICES {
            return Err(GraphError::TooLarge {
                what: "canonical_form",
                n: self.n,
                max: MAX_CANONICAL_VERTICES,
            });
        }
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let best = (0..self.n)
            .permutations(self.n)
            .map(|perm| {
                edges
                    .iter()
                    .fold(0u64, |m, &(u, v)| m | 1 << pair_index(perm[u], perm[v]))
            })
            .min()
            .unwrap_or(0);
        Ok(best)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        self.adj[u * self.n + v] = present;
        self.adj[v * self.n + u] = present;
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// All `2^(n(n-1)/2)` labelled graphs on `n` vertices, by ascending edge
/// bitmask.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(GraphError::TooLarge {
            what: "enumerate_labeled_graphs",
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    Ok((0..labeled_graph_count(n))
        .map(move |mask| Graph::from_edge_mask(n, mask).expect("n is within the bitmask limit")))
}

/// `2^(n(n-1)/2)`; only meaningful for `n <= MAX_MASK_VERTICES`.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << pair_count(n)
}

/// A non-empty, sorted set of vertices. Whether it is actually a clique is
/// a property relative to some host graph; see [`Graph::is_clique`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Clique(Vec<usize>);

impl Clique {
    pub fn new(mut vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyClique);
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::RepeatedVertex(w[0]));
        }
        Ok(Self(vertices))
    }

    pub fn trivial(v: usize) -> Self {
        Self(vec![v])
    }

    pub fn pair(u: usize, v: usize) -> Self {
        assert_ne!(u, v);
        Self(vec![u.min(v), u.max(v)])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Never true; cliques are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Pairs `(u, v)`, `u < v`, of members.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied().tuple_combinations()
    }

    pub fn edge_count(&self) -> usize {
        pair_count(self.0.len())
    }
}

impl TryFrom<Vec<usize>> for Clique {
    type Error = GraphError;

    fn try_from(value: Vec<usize>) -> Result<Self, Self::Error> {
        Clique::new(value)
    }
}

impl From<Clique> for Vec<usize> {
    fn from(c: Clique) -> Self {
        c.0
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}
