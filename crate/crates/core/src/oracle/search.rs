//! Exact searches over clique partitions, for small graphs only.
//!
//! Every partition of the edge set into cliques is reached exactly once by
//! always branching on the lexicographically smallest uncovered edge and
//! trying each residual clique that contains it.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use crate::decomposition::CliquePartition;
use crate::error::GraphError;
use crate::graph::{quarter_square, Clique, Graph};
use crate::representation::{representation_from_partition, SetRepresentation};

/// Vertex cap for [`min_clique_partition`].
pub const MAX_CP_VERTICES: usize = 10;
/// Vertex cap for [`min_distinct_representation`].
pub const MAX_OMEGA_VERTICES: usize = 6;
/// Vertex cap for [`for_each_clique_partition`].
pub const MAX_ENUMERATED_PARTITION_VERTICES: usize = 6;

/// All cliques of `residual` containing the edge `{u, v}`, largest first.
fn cliques_through(residual: &Graph, u: usize, v: usize) -> Vec<Clique> {
    let common: Vec<usize> = residual
        .neighbors(u)
        .filter(|&w| w != v && residual.has_edge(v, w))
        .collect();
    let mut out = Vec::new();
    let mut current = vec![u, v];
    extend_cliques(residual, &common, 0, &mut current, &mut out);
    out.sort_by(|a, b| {
        Reverse(a.len())
            .cmp(&Reverse(b.len()))
            .then_with(|| a.cmp(b))
    });
    out
}

fn extend_cliques(
    g: &Graph,
    candidates: &[usize],
    from: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Clique>,
) {
    out.push(Clique::new(current.clone()).expect("distinct members"));
    for i in from..candidates.len() {
        let w = candidates[i];
        if current.iter().all(|&m| g.has_edge(m, w)) {
            current.push(w);
            extend_cliques(g, candidates, i + 1, current, out);
            current.pop();
        }
    }
}

/// Calls `visit(stack, complete)` at every node of the search tree.
/// `complete` is true once all edges are covered. At inner nodes a `false`
/// return prunes the subtree.
fn explore<F>(residual: &mut Graph, stack: &mut Vec<Clique>, visit: &mut F)
where
    F: FnMut(&[Clique], bool) -> bool,
{
    let Some((u, v)) = residual.edges().next() else {
        visit(stack, true);
        return;
    };
    if !visit(stack, false) {
        return;
    }
    for clique in cliques_through(residual, u, v) {
        for (a, b) in clique.pairs() {
            residual.set_edge(a, b, false);
        }
        stack.push(clique);
        explore(residual, stack, visit);
        let clique = stack.pop().expect("pushed above");
        for (a, b) in clique.pairs() {
            residual.set_edge(a, b, true);
        }
    }
}

fn isolated_trivials(g: &Graph) -> Vec<Clique> {
    g.vertices()
        .filter(|&v| g.is_isolated(v))
        .map(Clique::trivial)
        .collect()
}

/// Visits every partition of the edges of `g` into cliques, as a list of
/// non-trivial cliques.
pub fn for_each_edge_partition<F: FnMut(&[Clique])>(g: &Graph, mut visit: F) {
    let mut residual = g.clone();
    explore(&mut residual, &mut Vec::new(), &mut |stack, complete| {
        if complete {
            visit(stack);
        }
        true
    });
}

/// Visits every clique partition of `g`: each edge partition plus the
/// mandatory trivial cliques on isolated vertices. With
/// `optional_trivials`, also every choice of extra trivial cliques on
/// non-isolated vertices.
pub fn for_each_clique_partition<F: FnMut(&CliquePartition)>(
    g: &Graph,
    optional_trivials: bool,
    mut visit: F,
) -> Result<(), GraphError> {
    if g.n() > MAX_ENUMERATED_PARTITION_VERTICES {
        return Err(GraphError::TooLarge {
            what: "clique partition enumeration",
            n: g.n(),
            max: MAX_ENUMERATED_PARTITION_VERTICES,
        });
    }
    let mandatory = isolated_trivials(g);
    let optional: Vec<usize> = if optional_trivials {
        g.vertices().filter(|&v| !g.is_isolated(v)).collect()
    } else {
        Vec::new()
    };
    for_each_edge_partition(g, |edges| {
        for choice in 0u32..1 << optional.len() {
            let extra = (0..optional.len())
                .filter(|&i| choice >> i & 1 == 1)
                .map(|i| Clique::trivial(optional[i]));
            let all = edges
                .iter()
                .cloned()
                .chain(mandatory.iter().cloned())
                .chain(extra);
            visit(&CliquePartition::new(g.n(), all));
        }
    });
    Ok(())
}

/// Clique partition number and a minimum partition. Isolated vertices
/// count one trivial clique each.
pub fn min_clique_partition(g: &Graph) -> Result<(usize, CliquePartition), GraphError> {
    if g.n() > MAX_CP_VERTICES {
        return Err(GraphError::TooLarge {
            what: "min_clique_partition",
            n: g.n(),
            max: MAX_CP_VERTICES,
        });
    }
    let isolated = isolated_trivials(g);
    let mut best = g.edge_count() + isolated.len();
    let mut witness: Vec<Clique> = g.edges().map(|(u, v)| Clique::pair(u, v)).collect();

    let mut residual = g.clone();
    explore(&mut residual, &mut Vec::new(), &mut |stack, complete| {
        let used = stack.len() + isolated.len();
        if complete {
            if used < best {
                best = used;
                witness = stack.to_vec();
            }
            true
        } else {
            used + 1 < best
        }
    });
    witness.extend(isolated);
    Ok((best, CliquePartition::new(g.n(), witness)))
}

/// Best distinct-family completion of an edge partition: the edge
/// cliques, trivial cliques on isolated vertices, and one trivial clique
/// on every non-lowest member of each class of identical incidence sets.
fn distinct_completion(n: usize, edge_cliques: &[Clique], isolated: &[Clique]) -> Vec<Clique> {
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, c) in edge_cliques.iter().chain(isolated).enumerate() {
        for &v in c.vertices() {
            sets[v].push(k);
        }
    }
    let mut classes: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for (v, s) in sets.iter().enumerate() {
        classes.entry(s.as_slice()).or_default().push(v);
    }
    let mut out: Vec<Clique> = edge_cliques.iter().chain(isolated).cloned().collect();
    for members in classes.values() {
        out.extend(members[1..].iter().map(|&v| Clique::trivial(v)));
    }
    out
}

/// Minimum total below `cap`, if any.
fn omega_search(g: &Graph, cap: usize) -> Option<Vec<Clique>> {
    let isolated = isolated_trivials(g);
    let mut best = cap;
    let mut witness = None;
    let mut residual = g.clone();
    explore(&mut residual, &mut Vec::new(), &mut |stack, complete| {
        let used = stack.len() + isolated.len();
        if complete {
            if used < best {
                let cliques = distinct_completion(g.n(), stack, &isolated);
                if cliques.len() < best {
                    best = cliques.len();
                    witness = Some(cliques);
                }
            }
            true
        } else {
            used + 1 < best
        }
    });
    witness
}

/// Intersection number `ω(g)`: the smallest ground set over
/// representations by pairwise distinct non-empty sets, with a witness.
///
/// Any such representation maps back to an edge partition plus some trivial
/// cliques, and at most one trivial clique per vertex is ever useful, so
/// searching edge partitions and completing each one optimally is exact.
pub fn min_distinct_representation(g: &Graph) -> Result<(usize, SetRepresentation), GraphError> {
    if g.n() > MAX_OMEGA_VERTICES {
        return Err(GraphError::TooLarge {
            what: "min_distinct_representation",
            n: g.n(),
            max: MAX_OMEGA_VERTICES,
        });
    }
    let fallback = g.edge_count() + g.n() + 1;
    let capped = (g.n() >= 4)
        .then(|| omega_search(g, quarter_square(g.n()) + 1))
        .flatten();
    let cliques = capped
        .or_else(|| omega_search(g, fallback))
        .expect("all edges plus a trivial clique per vertex is always distinct");
    let partition = CliquePartition::new(g.n(), cliques);
    let r = representation_from_partition(g, &partition).expect("search yields valid partitions");
    Ok((r.ground_size(), r))
}
