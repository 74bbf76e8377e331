//! DOT and JSON emission of crystal graphs.

use std::fmt::{self, Write};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use super::{CrystalGraph, Label};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonEdge {
    pub src: String,
    pub label: Label,
    pub dst: String,
}

/// `{"vertices": [...], "edges": [{"src", "label", "dst"}]}`, sorted by the
/// serialized form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<JsonEdge>,
}

impl<V: Clone + Eq + Hash + Ord + fmt::Display> CrystalGraph<V> {
    pub fn to_json(&self) -> GraphJson {
        let mut vertices: Vec<String> = self.vertices().iter().map(|v| v.to_string()).collect();
        vertices.sort();
        let edges = self
            .edges()
            .into_iter()
            .map(|(s, label, t)| JsonEdge { src: s.to_string(), label, dst: t.to_string() })
            .collect();
        GraphJson { vertices, edges }
    }

    pub fn to_dot(&self) -> String {
        let json = self.to_json();
        let mut out = String::from("digraph crystal {\n");
        for v in &json.vertices {
            writeln!(out, "  \"{v}\";").unwrap();
        }
        for e in &json.edges {
            writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}\"];", e.src, e.dst, e.label).unwrap();
        }
        out.push_str("}\n");
        out
    }
}
