use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use super::session::Session;
use crate::engine::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathEdge {
    pub from: Word,
    pub to: Word,
    /// Turn of `from`, 1 to 5.
    pub turn: u8,
}

/// Consecutive-guess transitions for one puzzle, weighted by how many
/// sessions made them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathGraph {
    edges: BTreeMap<PathEdge, u64>,
}

impl PathGraph {
    pub fn add_session(&mut self, session: &Session) {
        for (i, pair) in session.guesses().windows(2).enumerate() {
            let edge = PathEdge {
                from: pair[0],
                to: pair[1],
                turn: i as u8 + 1,
            };
            *self.edges.entry(edge).or_default() += 1;
        }
    }

    /// Keeps only edges taken at least `min_weight` times.
    pub fn with_min_weight(mut self, min_weight: u64) -> Self {
        self.edges.retain(|_, w| *w >= min_weight);
        self
    }

    pub fn edges(&self) -> impl Iterator<Item = (&PathEdge, u64)> {
        self.edges.iter().map(|(e, &w)| (e, w))
    }

    pub fn weight(&self, edge: &PathEdge) -> u64 {
        self.edges.get(edge).copied().unwrap_or(0)
    }

    pub fn nodes(&self) -> BTreeSet<Word> {
        self.edges.keys().flat_map(|e| [e.from, e.to]).collect()
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

pub fn guess_path_graph<'a>(sessions: impl IntoIterator<Item = &'a Session>, puzzle_id: u32) -> PathGraph {
    let mut graph = PathGraph::default();
    for s in sessions.into_iter().filter(|s| s.puzzle_id == puzzle_id) {
        graph.add_session(s);
    }
    graph
}

fn quote(id: &str) -> String {
    let mut out = String::with_capacity(id.len() + 2);
    out.push('"');
    for c in id.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Graphviz rendering: nodes in code-point order, then edges ordered by
/// source, target and turn.
pub fn export_dot(graph: &PathGraph) -> String {
    let mut out = String::from("digraph g {\n");
    for node in graph.nodes() {
        let _ = writeln!(out, "  {};", quote(&node.to_string()));
    }
    for (edge, weight) in graph.edges() {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}, weight={weight}];",
            quote(&edge.from.to_string()),
            quote(&edge.to.to_string()),
            quote(&format!("turn {} \u{d7}{weight}", edge.turn)),
        );
    }
    out.push_str("}\n");
    out
}
