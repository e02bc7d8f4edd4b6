//! Set representations: each vertex gets a set of element ids so that two
//! sets share exactly one element when the vertices are adjacent and none
//! otherwise.
//!
//! A clique partition and a representation determine each other: element
//! `k` stands for clique `k`, and a vertex's set lists the cliques it lies
//! in. Identical sets can be split apart by giving all but one vertex of a
//! duplicate class a fresh element of its own.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::decomposition::{
    validate_greedy, validate_partition, CliquePartition, GreedyDecomposition,
};
use crate::error::{Error, ParseError, Result};
use crate::graph::{Clique, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRepresentation")]
pub struct SetRepresentation {
    n: usize,
    ground_size: usize,
    /// Sorted, duplicate-free element ids per vertex.
    sets: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawRepresentation {
    n: usize,
    ground_size: usize,
    sets: Vec<Vec<usize>>,
}

impl TryFrom<RawRepresentation> for SetRepresentation {
    type Error = ParseError;

    fn try_from(raw: RawRepresentation) -> Result<Self, Self::Error> {
        if raw.sets.len() != raw.n {
            return Err(ParseError::Artifact(format!(
                "\"n\" is {} but {} sets are listed",
                raw.n,
                raw.sets.len()
            )));
        }
        let mut sets = raw.sets;
        for (v, s) in sets.iter_mut().enumerate() {
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(ParseError::Artifact(format!(
                    "set of vertex {v} repeats an element"
                )));
            }
        }
        Ok(Self {
            n: raw.n,
            ground_size: raw.ground_size,
            sets,
        })
    }
}

impl SetRepresentation {
    /// Builds a representation whose ground size is one past the largest id
    /// in use. Inner sets are sorted and deduplicated.
    pub fn from_sets(sets: Vec<Vec<usize>>) -> Self {
        let ground_size = sets.iter().flatten().max().map_or(0, |&m| m + 1);
        Self::with_ground_size(sets, ground_size)
    }

    pub fn with_ground_size(mut sets: Vec<Vec<usize>>, ground_size: usize) -> Self {
        for s in &mut sets {
            s.sort_unstable();
            s.dedup();
        }
        Self {
            n: sets.len(),
            ground_size,
            sets,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn set(&self, v: usize) -> &[usize] {
        &self.sets[v]
    }

    /// Vertices whose set contains `element`.
    pub fn holders(&self, element: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.sets[v].binary_search(&element).is_ok())
            .collect()
    }

    /// Equality up to a bijective renaming of element ids: same ground
    /// size and the same multiset of per-element holder sets.
    pub fn equivalent_up_to_renaming(&self, other: &SetRepresentation) -> bool {
        let columns = |r: &SetRepresentation| {
            let mut cols: Vec<Vec<usize>> = (0..r.ground_size).map(|e| r.holders(e)).collect();
            cols.sort();
            cols
        };
        self.n == other.n
            && self.ground_size == other.ground_size
            && columns(self) == columns(other)
    }
}

/// Size of the intersection of two sorted id lists.
pub fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

fn incidence(n: usize, cliques: &[Clique]) -> SetRepresentation {
    let mut sets = vec![Vec::new(); n];
    for (k, c) in cliques.iter().enumerate() {
        for &v in c.vertices() {
            sets[v].push(k);
        }
    }
    SetRepresentation::with_ground_size(sets, cliques.len())
}

fn checked(g: &Graph, r: SetRepresentation) -> SetRepresentation {
    let report = validate_representation(g, &r, false);
    assert!(
        report.is_valid(),
        "incidence sets of a valid partition must represent the graph: {report:?}"
    );
    r
}

/// Element `k` is the `k`-th clique of `p` in sorted order.
pub fn representation_from_partition(g: &Graph, p: &CliquePartition) -> Result<SetRepresentation> {
    let violations = validate_partition(g, p);
    if !violations.is_empty() {
        return Err(Error::InvalidPartition(violations));
    }
    Ok(checked(g, incidence(g.n(), p.cliques())))
}

/// Element `k` is the clique at position `k` of the greedy sequence.
pub fn representation_from_greedy(g: &Graph, d: &GreedyDecomposition) -> Result<SetRepresentation> {
    let violations = validate_greedy(g, d);
    if !violations.is_empty() {
        return Err(Error::InvalidGreedy(violations));
    }
    Ok(checked(g, incidence(g.n(), d.sequence())))
}

/// First vertex pair, in lexicographic order, whose intersection size
/// disagrees with adjacency.
fn first_intersection_mismatch(g: &Graph, r: &SetRepresentation) -> Option<Error> {
    for v in 1..g.n() {
        for u in 0..v {
            let found = intersection_size(r.set(u), r.set(v));
            let expected = usize::from(g.has_edge(u, v));
            if found != expected {
                return Some(Error::IntersectionMismatch {
                    u,
                    v,
                    found,
                    expected,
                });
            }
        }
    }
    None
}

/// Element `e` becomes the clique of vertices holding it. Elements that
/// induce the same vertex set collapse into one clique, so the result may
/// have fewer cliques than `r.ground_size()`.
pub fn partition_from_representation(g: &Graph, r: &SetRepresentation) -> Result<CliquePartition> {
    if r.n() != g.n() {
        return Err(Error::VertexCountMismatch {
            expected: g.n(),
            found: r.n(),
        });
    }
    if let Some(err) = first_intersection_mismatch(g, r) {
        return Err(err);
    }
    let mut by_element: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, s) in r.sets().iter().enumerate() {
        for &e in s {
            by_element.entry(e).or_default().push(v);
        }
    }
    let cliques: BTreeSet<Clique> = by_element
        .into_values()
        .map(|vs| Clique::new(vs).expect("holders are distinct and non-empty"))
        .collect();
    let p = CliquePartition::new(g.n(), cliques);
    let violations = validate_partition(g, &p);
    if violations.is_empty() {
        Ok(p)
    } else {
        Err(Error::InvalidPartition(violations))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistinctnessReport {
    /// Vertices grouped by identical sets; groups and their members in
    /// increasing order.
    pub classes: Vec<Vec<usize>>,
    pub is_family: bool,
}

impl DistinctnessReport {
    pub fn duplicate_classes(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.classes.iter().filter(|c| c.len() > 1)
    }
}

pub fn distinctness(r: &SetRepresentation) -> DistinctnessReport {
    let mut groups: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for (v, s) in r.sets().iter().enumerate() {
        groups.entry(s.as_slice()).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    let is_family = classes.iter().all(|c| c.len() == 1);
    DistinctnessReport { classes, is_family }
}

/// Gives every vertex of a duplicate class except the lowest-indexed one a
/// fresh element held by nobody else. Fresh ids are handed out in vertex
/// order starting at the old ground size.
pub fn augment_to_distinct(r: &SetRepresentation) -> SetRepresentation {
    let report = distinctness(r);
    let mut sets = r.sets().to_vec();
    let mut recipients: Vec<usize> = report
        .duplicate_classes()
        .flat_map(|c| c[1..].iter().copied())
        .collect();
    recipients.sort_unstable();
    let mut next = r.ground_size();
    for v in recipients {
        sets[v].push(next);
        next += 1;
    }
    SetRepresentation::with_ground_size(sets, next)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RepresentationViolation {
    VertexCountMismatch {
        expected: usize,
        found: usize,
    },
    IntersectionMismatch {
        u: usize,
        v: usize,
        found: usize,
        expected: usize,
    },
    EmptySet {
        vertex: usize,
    },
    ElementOutOfRange {
        vertex: usize,
        element: usize,
    },
    UnusedElement {
        element: usize,
    },
    DuplicateClass {
        vertices: Vec<usize>,
    },
}

/// Several elements held by exactly the same vertices; they map to a
/// single clique when converted back to a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollapsedElements {
    pub elements: Vec<usize>,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RepresentationReport {
    pub violations: Vec<RepresentationViolation>,
    pub collapsed: Vec<CollapsedElements>,
}

impl RepresentationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_representation(
    g: &Graph,
    r: &SetRepresentation,
    require_distinct: bool,
) -> RepresentationReport {
    let mut report = RepresentationReport::default();
    if r.n() != g.n() {
        report
            .violations
            .push(RepresentationViolation::VertexCountMismatch {
                expected: g.n(),
                found: r.n(),
            });
        return report;
    }
    for v in 1..g.n() {
        for u in 0..v {
            let found = intersection_size(r.set(u), r.set(v));
            let expected = usize::from(g.has_edge(u, v));
            if found != expected {
                report
                    .violations
                    .push(RepresentationViolation::IntersectionMismatch {
                        u,
                        v,
                        found,
                        expected,
                    });
            }
        }
    }
    let mut used = vec![false; r.ground_size()];
    for (vertex, s) in r.sets().iter().enumerate() {
        if s.is_empty() {
            report
                .violations
                .push(RepresentationViolation::EmptySet { vertex });
        }
        for &element in s {
            match used.get_mut(element) {
                Some(u) => *u = true,
                None => report
                    .violations
                    .push(RepresentationViolation::ElementOutOfRange { vertex, element }),
            }
        }
    }
    report.violations.extend(
        used.iter()
            .enumerate()
            .filter(|(_, &u)| !u)
            .map(|(element, _)| RepresentationViolation::UnusedElement { element }),
    );
    if require_distinct {
        report
            .violations
            .extend(distinctness(r).duplicate_classes().map(|c| {
                RepresentationViolation::DuplicateClass {
                    vertices: c.clone(),
                }
            }));
    }

    let mut by_holders: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for e in 0..r.ground_size() {
        let holders = r.holders(e);
        if !holders.is_empty() {
            by_holders.entry(holders).or_default().push(e);
        }
    }
    report.collapsed = by_holders
        .into_iter()
        .filter(|(_, es)| es.len() > 1)
        .map(|(vertices, elements)| CollapsedElements { elements, vertices })
        .collect();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{greedy_decomposition, GreedyStrategy};
    use crate::graph::{enumerate_labeled_graphs, quarter_square};
    use proptest::prelude::*;

    fn partition(n: usize, list: &[&[usize]]) -> CliquePartition {
        CliquePartition::new(n, list.iter().map(|c| Clique::new(c.to_vec()).unwrap()))
    }

    fn rep(sets: &[&[usize]]) -> SetRepresentation {
        SetRepresentation::from_sets(sets.iter().map(|s| s.to_vec()).collect())
    }

    #[test]
    fn path_round_trip() {
        let g = Graph::path(3);
        let p = partition(3, &[&[0, 1], &[1, 2]]);
        let r = representation_from_partition(&g, &p).unwrap();
        assert_eq!(r, rep(&[&[0], &[0, 1], &[1]]));
        assert_eq!(r.ground_size(), 2);
        assert_eq!(partition_from_representation(&g, &r).unwrap(), p);
        assert!(distinctness(&r).is_family);
        assert_eq!(distinctness(&r).classes, vec![vec![0], vec![1], vec![2]]);
        assert!(validate_representation(&g, &r, true).is_valid());
    }

    #[test]
    fn triangle_single_clique() {
        let g = Graph::complete(3);
        let r = representation_from_partition(&g, &partition(3, &[&[0, 1, 2]])).unwrap();
        assert_eq!(r, rep(&[&[0], &[0], &[0]]));
        let d = distinctness(&r);
        assert_eq!(d.classes, vec![vec![0, 1, 2]]);
        assert!(!d.is_family);
        assert_eq!(
            validate_representation(&g, &r, true).violations,
            vec![RepresentationViolation::DuplicateClass {
                vertices: vec![0, 1, 2]
            }]
        );
        assert!(validate_representation(&g, &r, false).is_valid());
    }

    #[test]
    fn k22_edges_give_four_distinct_pairs() {
        let g = Graph::complete_bipartite(2, 2);
        let p = partition(4, &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]);
        let r = representation_from_partition(&g, &p).unwrap();
        assert_eq!(r.ground_size(), 4);
        assert!(r.sets().iter().all(|s| s.len() == 2));
        for v in 1..4 {
            for u in 0..v {
                assert_eq!(
                    intersection_size(r.set(u), r.set(v)),
                    usize::from(g.has_edge(u, v))
                );
            }
        }
        assert!(distinctness(&r).is_family);
    }

    #[test]
    fn partition_from_representation_examples() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let p = partition_from_representation(&g, &rep(&[&[0], &[0], &[1]])).unwrap();
        assert_eq!(p, partition(3, &[&[0, 1], &[2]]));

        let k2 = Graph::complete(2);
        let p = partition_from_representation(&k2, &rep(&[&[0, 1], &[0, 2]])).unwrap();
        assert_eq!(p, partition(2, &[&[0, 1], &[0], &[1]]));

        let err = partition_from_representation(&k2, &rep(&[&[0], &[1]])).unwrap_err();
        assert_eq!(
            err,
            Error::IntersectionMismatch {
                u: 0,
                v: 1,
                found: 0,
                expected: 1
            }
        );
    }

    #[test]
    fn collapsed_elements_are_noted() {
        let g = Graph::complete(2);
        let r = rep(&[&[0, 1, 2], &[0]]);
        let report = validate_representation(&g, &r, true);
        assert!(report.is_valid());
        assert_eq!(
            report.collapsed,
            vec![CollapsedElements {
                elements: vec![1, 2],
                vertices: vec![0]
            }]
        );
        let p = partition_from_representation(&g, &r).unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn empty_set_on_isolated_vertex_is_rejected() {
        let g = Graph::empty(2);
        let r = SetRepresentation::with_ground_size(vec![vec![0], vec![]], 1);
        assert_eq!(
            validate_representation(&g, &r, false).violations,
            vec![RepresentationViolation::EmptySet { vertex: 1 }]
        );
        assert!(matches!(
            partition_from_representation(&g, &r),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn validation_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(
            validate_representation(&k2, &rep(&[&[0], &[1]]), false).violations,
            vec![RepresentationViolation::IntersectionMismatch {
                u: 0,
                v: 1,
                found: 0,
                expected: 1
            }]
        );
        let r = SetRepresentation::with_ground_size(vec![vec![0], vec![0, 3]], 3);
        assert_eq!(
            validate_representation(&k2, &r, false).violations,
            vec![
                RepresentationViolation::ElementOutOfRange {
                    vertex: 1,
                    element: 3
                },
                RepresentationViolation::UnusedElement { element: 1 },
                RepresentationViolation::UnusedElement { element: 2 },
            ]
        );
    }

    #[test]
    fn augmentation_examples() {
        let k3 = rep(&[&[0], &[0], &[0]]);
        let a = augment_to_distinct(&k3);
        assert_eq!(a, rep(&[&[0], &[0, 1], &[0, 2]]));
        assert_eq!(a.ground_size(), 3);

        let g = Graph::complete(4);
        let d = greedy_decomposition(&g, GreedyStrategy::Lexicographic);
        let a = augment_to_distinct(&representation_from_greedy(&g, &d).unwrap());
        assert_eq!(a.ground_size(), 4);
        assert_eq!(a.ground_size(), quarter_square(4));

        let distinct = rep(&[&[0], &[0, 1], &[1]]);
        assert_eq!(augment_to_distinct(&distinct), distinct);
    }

    #[test]
    fn star_partition_has_singleton_classes() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = partition(4, &[&[0, 1], &[0, 2], &[0, 3]]);
        let r = representation_from_partition(&g, &p).unwrap();
        assert_eq!(r.set(0), &[0, 1, 2]);
        let d = distinctness(&r);
        assert_eq!(d.classes.len(), 4);
        assert!(d.is_family);
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let g = Graph::complete(3);
        assert!(representation_from_partition(&g, &partition(3, &[&[0, 1]])).is_err());
        let d = GreedyDecomposition::new(3, vec![Clique::pair(0, 1)]);
        assert!(representation_from_greedy(&g, &d).is_err());
    }

    #[test]
    fn greedy_elements_follow_sequence_order() {
        let g = Graph::from_edges(4, [(2, 3), (0, 1)]).unwrap();
        let d = GreedyDecomposition::new(4, vec![Clique::pair(2, 3), Clique::pair(0, 1)]);
        let r = representation_from_greedy(&g, &d).unwrap();
        assert_eq!(r, rep(&[&[1], &[1], &[0], &[0]]));
    }

    #[test]
    fn json_schema() {
        let r = rep(&[&[0], &[0, 1], &[1]]);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"n":3,"ground_size":2,"sets":[[0],[0,1],[1]]}"#);
        let back: SetRepresentation =
            serde_json::from_str(r#"{"n":3,"ground_size":2,"sets":[[0],[1,0],[1]]}"#).unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<SetRepresentation>(
            r#"{"n":2,"ground_size":1,"sets":[[0]]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<SetRepresentation>(
            r#"{"n":1,"ground_size":1,"sets":[[0,0]]}"#
        )
        .is_err());
    }

    #[test]
    fn augmentation_bound_exhaustive_n4() {
        for g in enumerate_labeled_graphs(4).unwrap() {
            let d = greedy_decomposition(&g, GreedyStrategy::Lexicographic);
            let a = augment_to_distinct(&representation_from_greedy(&g, &d).unwrap());
            assert!(validate_representation(&g, &a, true).is_valid());
            assert!(a.ground_size() <= 4);
        }
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=9, any::<u64>(), 0.0f64..=1.0).prop_map(|(n, seed, p)| {
            use rand::SeedableRng;
            Graph::random(n, p, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
        })
    }

    proptest! {
        #[test]
        fn forward_then_back_is_identity(g in arb_graph(), seed in any::<u64>()) {
            let p = greedy_decomposition(&g, GreedyStrategy::SeededRandom { seed }).to_partition();
            let r = representation_from_partition(&g, &p).unwrap();
            prop_assert_eq!(r.ground_size(), p.len());
            prop_assert_eq!(partition_from_representation(&g, &r).unwrap(), p);
        }

        #[test]
        fn back_then_forward_up_to_renaming(g in arb_graph(), seed in any::<u64>()) {
            let d = greedy_decomposition(&g, GreedyStrategy::SeededRandom { seed });
            let r = representation_from_greedy(&g, &d).unwrap();
            let p = partition_from_representation(&g, &r).unwrap();
            let again = representation_from_partition(&g, &p).unwrap();
            prop_assert!(again.equivalent_up_to_renaming(&r));
        }

        #[test]
        fn augmentation_preserves_intersections(g in arb_graph(), seed in any::<u64>()) {
            let d = greedy_decomposition(&g, GreedyStrategy::SeededRandom { seed });
            let r = representation_from_greedy(&g, &d).unwrap();
            let a = augment_to_distinct(&r);
            prop_assert!(validate_representation(&g, &a, true).is_valid());
            let extra: usize = distinctness(&r).duplicate_classes().map(|c| c.len() - 1).sum();
            prop_assert_eq!(a.ground_size(), r.ground_size() + extra);
            for v in 0..g.n() {
                prop_assert!(r.set(v).iter().all(|e| a.set(v).contains(e)));
                prop_assert!(a.set(v).len() <= r.set(v).len() + 1);
            }
        }
    }
}
