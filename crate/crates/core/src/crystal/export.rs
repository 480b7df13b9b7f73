//! DOT and JSON renderings of a crystal graph.

use std::fmt::Write as _;

use serde::Serialize;

use super::graph::CrystalGraph;
use crate::jm::{is_jm, WeakIndex};
use crate::partition::{Ell, Partition};
use crate::rim_hook::is_l_partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NodeFlags {
    pub jm: bool,
    pub l_partition: bool,
    pub weak: bool,
    pub regular: bool,
}

impl NodeFlags {
    fn tags(self) -> Vec<&'static str> {
        [
            (self.jm, "jm"),
            (self.l_partition, "l_partition"),
            (self.weak, "weak"),
            (self.regular, "regular"),
        ]
        .into_iter()
        .filter_map(|(on, tag)| on.then_some(tag))
        .collect()
    }
}

fn flags_for(ell: Ell, weak: &WeakIndex) -> impl Fn(&Partition) -> NodeFlags + '_ {
    move |p| {
        let regular = p.is_regular(ell);
        NodeFlags {
            jm: is_jm(p, ell),
            l_partition: is_l_partition(p, ell),
            weak: regular && weak.is_weak(p).unwrap_or(false),
            regular,
        }
    }
}

#[derive(Serialize)]
struct JsonNode {
    partition: String,
    rank: usize,
    flags: NodeFlags,
}

#[derive(Serialize)]
struct JsonEdge {
    from: String,
    to: String,
    residue: usize,
}

#[derive(Serialize)]
struct JsonGraph {
    model: String,
    ell: usize,
    max_n: usize,
    nodes: Vec<JsonNode>,
    edges: Vec<JsonEdge>,
}

/// JSON document with every node flagged.
pub fn to_json(graph: &CrystalGraph) -> String {
    let weak = WeakIndex::build(graph.ell, graph.max_n);
    let flags = flags_for(graph.ell, &weak);
    let doc = JsonGraph {
        model: graph.model.to_string(),
        ell: graph.ell.get(),
        max_n: graph.max_n,
        nodes: graph
            .nodes()
            .map(|p| JsonNode {
                partition: p.to_string(),
                rank: p.rank(),
                flags: flags(p),
            })
            .collect(),
        edges: graph
            .edges()
            .iter()
            .map(|e| JsonEdge {
                from: e.from.to_string(),
                to: e.to.to_string(),
                residue: e.residue,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serializes")
}

/// Graphviz digraph. With `flag_nodes`, flagged nodes get an `xlabel`
/// listing their flags and JM nodes are drawn bold.
pub fn to_dot(graph: &CrystalGraph, flag_nodes: bool) -> String {
    let weak = flag_nodes.then(|| WeakIndex::build(graph.ell, graph.max_n));
    let mut out = String::new();
    writeln!(out, "digraph \"{}_{}\" {{", graph.model, graph.ell).unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    for p in graph.nodes() {
        match &weak {
            Some(weak) => {
                let f = flags_for(graph.ell, weak)(p);
                let tags = f.tags().join(",");
                let style = if f.jm { ", style=bold" } else { "" };
                writeln!(out, "  \"{p}\" [xlabel=\"{tags}\"{style}];").unwrap();
            }
            None => writeln!(out, "  \"{p}\";").unwrap(),
        }
    }
    for e in graph.edges() {
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            e.from, e.to, e.residue
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{build_crystal, Model};
    use crate::partition::Ell;

    #[test]
    fn dot_rank_one() {
        let g = build_crystal(Ell::new(3).unwrap(), 1, Model::MisraMiwa);
        let dot = to_dot(&g, false);
        assert_eq!(
            dot,
            "digraph \"reg_3\" {\n  rankdir=TB;\n  \"-\";\n  \"1\";\n  \"-\" -> \"1\" [label=\"0\"];\n}\n"
        );
    }

    #[test]
    fn json_flags_ladder_column() {
        let g = build_crystal(Ell::new(3).unwrap(), 4, Model::Ladder);
        let v: serde_json::Value = serde_json::from_str(&to_json(&g)).unwrap();
        let node = v["nodes"]
            .as_array()
            .unwrap()
            .iter()
            .find(|n| n["partition"] == "1,1,1,1")
            .expect("1,1,1,1 is a ladder node");
        assert_eq!(node["rank"], 4);
        assert_eq!(node["flags"]["jm"], true);
        assert_eq!(node["flags"]["regular"], false);
        assert_eq!(node["flags"]["weak"], false);
    }
}
