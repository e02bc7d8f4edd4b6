//! Partition into edges and triangles with at most `⌊n²/4⌋` cliques and
//! pairwise distinct clique-incidence sets, built by induction on `n`.
//!
//! Inductive step on `n >= 5` vertices, with `half = ⌊n/2⌋`:
//!
//! * some vertex `v` has degree `<= half`: partition `G - v`, then add each
//!   edge at `v` as a 2-clique (or `{v}` if `v` is isolated);
//! * otherwise let `x` have minimum degree `t = half + r`. The neighbourhood
//!   of `x` contains a matching of size `r`; partition `G - x` minus the
//!   matching, then add a triangle `x` + matched pair for each matching
//!   edge and a 2-clique for every unmatched neighbour.
//!
//! Graphs on at most four vertices are solved by exhaustive search.

use std::sync::OnceLock;

use itertools::Itertools;

use super::CliquePartition;
use crate::graph::{pair_count, Clique, Graph};

const BASE_MAX_VERTICES: usize = 4;

pub fn erdos_partition(g: &Graph) -> CliquePartition {
    let labels: Vec<usize> = g.vertices().collect();
    CliquePartition::new(g.n(), partition_rec(g, &labels))
}

fn partition_rec(g: &Graph, labels: &[usize]) -> Vec<Clique> {
    let n = g.n();
    if n <= BASE_MAX_VERTICES {
        let mask = g.edge_mask().expect("small graph");
        return base_solution(n, mask)
            .iter()
            .map(|c| Clique::new(c.vertices().iter().map(|&v| labels[v]).collect()).unwrap())
            .collect();
    }

    let half = n / 2;
    let x = g.vertices().min_by_key(|&v| (g.deg(v), v)).expect("n >= 5");
    let t = g.deg(x);
    let rest: Vec<usize> = g.vertices().filter(|&v| v != x).collect();

    if t <= half {
        let (sub, map) = g.induced_subgraph(&rest).expect("in range");
        let sub_labels: Vec<usize> = map.iter().map(|&i| labels[i]).collect();
        let mut out = partition_rec(&sub, &sub_labels);
        if t == 0 {
            out.push(Clique::trivial(labels[x]));
        } else {
            out.extend(g.neighbors(x).map(|y| Clique::pair(labels[x], labels[y])));
        }
        return out;
    }

    let r = t - half;
    let neighborhood: Vec<usize> = g.neighbors(x).collect();
    let matching = neighborhood_matching(g, &neighborhood, r);
    assert_eq!(
        matching.len(),
        r,
        "neighbourhood of vertex {x} (degree {t}, n = {n}) has no matching of size {r}; \
         minimum degree exceeds n/2 so this cannot happen"
    );

    let reduced = g.remove_edges(&matching).expect("matching edges exist");
    let (sub, map) = reduced.induced_subgraph(&rest).expect("in range");
    let sub_labels: Vec<usize> = map.iter().map(|&i| labels[i]).collect();
    let mut out = partition_rec(&sub, &sub_labels);

    let mut matched = vec![false; n];
    for &(a, b) in &matching {
        matched[a] = true;
        matched[b] = true;
        out.push(Clique::new(vec![labels[x], labels[a], labels[b]]).unwrap());
    }
    out.extend(
        neighborhood
            .iter()
            .filter(|&&y| !matched[y])
            .map(|&y| Clique::pair(labels[x], labels[y])),
    );
    out
}

/// Greedy matching inside `neighborhood`, lowest index first, stopping at
/// `target` edges. Any maximal matching there has at least `target` edges
/// when the minimum degree is `⌊n/2⌋ + target`.
fn neighborhood_matching(g: &Graph, neighborhood: &[usize], target: usize) -> Vec<(usize, usize)> {
    let mut matched = vec![false; g.n()];
    let mut out = Vec::with_capacity(target);
    for &a in neighborhood {
        if out.len() == target {
            break;
        }
        if matched[a] {
            continue;
        }
        if let Some(&b) = neighborhood
            .iter()
            .find(|&&b| b != a && !matched[b] && g.has_edge(a, b))
        {
            matched[a] = true;
            matched[b] = true;
            out.push((a.min(b), a.max(b)));
        }
    }
    out
}

/// Minimum partition of a graph on `n <= 4` vertices into edges, triangles
/// and trivial cliques with distinct incidence sets. Memoised per
/// `(n, edge mask)`.
fn base_solution(n: usize, mask: u64) -> &'static [Clique] {
    static TABLE: OnceLock<Vec<Vec<Vec<Clique>>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        (0..=BASE_MAX_VERTICES)
            .map(|n| {
                (0..1u64 << pair_count(n))
                    .map(|m| solve_base(&Graph::from_edge_mask(n, m).unwrap()))
                    .collect()
            })
            .collect()
    });
    &table[n][mask as usize]
}

fn solve_base(g: &Graph) -> Vec<Clique> {
    let n = g.n();
    let mut candidates: Vec<Clique> = Vec::new();
    for size in [3, 2] {
        for c in (0..n).combinations(size) {
            if g.is_clique(&c) {
                candidates.push(Clique::new(c).unwrap());
            }
        }
    }
    candidates.extend((0..n).map(Clique::trivial));

    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best: Option<(u32, u64)> = None;
    for subset in 0u64..1 << candidates.len() {
        let size = subset.count_ones();
        if best.is_some_and(|(b, _)| size >= b) {
            continue;
        }
        let chosen = || (0..candidates.len()).filter(move |&i| subset >> i & 1 == 1);
        let covers_once = edges.iter().all(|&(u, v)| {
            chosen()
                .filter(|&i| candidates[i].contains(u) && candidates[i].contains(v))
                .count()
                == 1
        });
        if !covers_once {
            continue;
        }
        let incidence: Vec<u64> = (0..n)
            .map(|v| {
                chosen()
                    .filter(|&i| candidates[i].contains(v))
                    .fold(0u64, |acc, i| acc | 1 << i)
            })
            .collect();
        // Every vertex must sit in some clique; for isolated vertices only a
        // trivial one can do it.
        if incidence.contains(&0) || !incidence.iter().all_unique() {
            continue;
        }
        best = Some((size, subset));
    }
    let (_, subset) = best.expect("all edges plus all trivial cliques always qualify");
    (0..candidates.len())
        .filter(|&i| subset >> i & 1 == 1)
        .map(|i| candidates[i].clone())
        .collect()
}
