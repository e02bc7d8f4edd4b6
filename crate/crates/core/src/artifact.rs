//! JSON documents exchanged with the command line, and DOT rendering.
//!
//! Partition / decomposition:
//! `{"n": 4, "ordered": true, "cliques": [[0,1,2],[2,3]]}`; `ordered` marks a
//! greedy sequence whose order matters. Representations use the serde form
//! of [`SetRepresentation`]: `{"n": 3, "ground_size": 2, "sets": [[0],[0,1],[1]]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::decomposition::{CliquePartition, GreedyDecomposition};
use crate::error::ParseError;
use crate::graph::{Clique, Graph};
use crate::representation::SetRepresentation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueListArtifact {
    pub n: usize,
    pub ordered: bool,
    pub cliques: Vec<Clique>,
}

impl CliqueListArtifact {
    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        serde_json::from_str(text).map_err(|e| ParseError::Artifact(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn into_partition(self) -> CliquePartition {
        CliquePartition::new(self.n, self.cliques)
    }

    /// Keeps the listed order.
    pub fn into_greedy(self) -> GreedyDecomposition {
        GreedyDecomposition::new(self.n, self.cliques)
    }
}

impl From<&CliquePartition> for CliqueListArtifact {
    fn from(p: &CliquePartition) -> Self {
        Self {
            n: p.n(),
            ordered: false,
            cliques: p.cliques().to_vec(),
        }
    }
}

impl From<&GreedyDecomposition> for CliqueListArtifact {
    fn from(d: &GreedyDecomposition) -> Self {
        Self {
            n: d.n(),
            ordered: true,
            cliques: d.sequence().to_vec(),
        }
    }
}

pub fn representation_from_json(text: &str) -> Result<SetRepresentation, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError::Artifact(e.to_string()))
}

pub fn representation_to_json(r: &SetRepresentation) -> String {
    serde_json::to_string(r).expect("plain data serializes")
}

const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939",
];

/// Undirected DOT graph. Each edge carries the index (in `cliques` order) of
/// the clique covering it, as label and colour; trivial cliques are listed
/// in the vertex's `xlabel`.
pub fn cliques_to_dot(g: &Graph, cliques: &[Clique]) -> String {
    let mut owner = vec![None; g.n() * g.n()];
    let mut trivial: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (k, c) in cliques.iter().enumerate() {
        if c.is_trivial() {
            if let Some(t) = trivial.get_mut(c.vertices()[0]) {
                t.push(k);
            }
        }
        for (u, v) in c.pairs() {
            if u < g.n() && v < g.n() {
                owner[u * g.n() + v] = Some(k);
            }
        }
    }

    let mut s = String::from("graph cliques {\n");
    for v in g.vertices() {
        if trivial[v].is_empty() {
            writeln!(s, "  {v};").unwrap();
        } else {
            let ids: Vec<String> = trivial[v].iter().map(|k| format!("Q{k}")).collect();
            writeln!(s, "  {v} [xlabel=\"{}\"];", ids.join(",")).unwrap();
        }
    }
    for (u, v) in g.edges() {
        match owner[u * g.n() + v] {
            Some(k) => writeln!(
                s,
                "  {u} -- {v} [label=\"Q{k}\", color=\"{}\"];",
                PALETTE[k % PALETTE.len()]
            )
            .unwrap(),
            None => writeln!(s, "  {u} -- {v} [style=dashed];").unwrap(),
        }
    }
    s.push_str("}\n");
    s
}

/// DOT graph with each vertex labelled by its set.
pub fn representation_to_dot(g: &Graph, r: &SetRepresentation) -> String {
    let mut s = String::from("graph representation {\n");
    for v in g.vertices() {
        let set: Vec<String> = r
            .sets()
            .get(v)
            .map_or_else(Vec::new, |s| s.iter().map(|e| e.to_string()).collect());
        writeln!(s, "  {v} [label=\"{v}: {{{}}}\"];", set.join(",")).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push_str("}\n");
    s
}
