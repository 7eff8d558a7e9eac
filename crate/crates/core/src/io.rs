//! File formats. Graphs travel as JSON
//! `{"vertices": ["a", ...], "edges": [["a","b"], ...]}` or as plain edge
//! lists with one `a b` pair per line (vertices inferred in order of first
//! appearance). Endomorphisms are JSON maps from vertex name to vertex
//! name.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Label, VertexId};
use crate::homology::GraphEndomorphism;
use crate::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

/// Serializes a graph in the documented JSON shape, vertices in graph
/// order, edges ascending.
pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphJson {
        vertices: g.labels().iter().map(|l| l.to_string()).collect(),
        edges: g
            .edges()
            .iter()
            .map(|&(a, b)| (g.label(a).to_string(), g.label(b).to_string()))
            .collect(),
    };
    serde_json::to_string(&doc).expect("graph serialization cannot fail")
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text)?;
    let labels: Vec<Label> = doc.vertices.iter().map(Label::atom).collect();
    let position = |name: &str| -> Result<u32> {
        doc.vertices
            .iter()
            .position(|v| v == name)
            .map(|i| i as u32)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    };
    let mut edges = Vec::with_capacity(doc.edges.len());
    for (a, b) in &doc.edges {
        edges.push((position(a)?, position(b)?));
    }
    Graph::new(labels, &edges)
}

/// Parses the plain edge-list format: one `a b` pair per line, `#` lines
/// and blank lines ignored.
pub fn graph_from_edge_list(text: &str) -> Result<Graph> {
    let mut names: Vec<String> = Vec::new();
    let intern = |name: &str, names: &mut Vec<String>| -> u32 {
        match names.iter().position(|n| n == name) {
            Some(i) => i as u32,
            None => {
                names.push(name.to_string());
                (names.len() - 1) as u32
            }
        }
    };
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (a, b) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::InvalidGraph(format!(
                    "edge list line {} is not an `a b` pair: {line:?}",
                    lineno + 1
                )))
            }
        };
        let ia = intern(a, &mut names);
        let ib = intern(b, &mut names);
        edges.push((ia, ib));
    }
    let labels = names.iter().map(Label::atom).collect();
    Graph::new(labels, &edges)
}

/// Loads a graph file, sniffing JSON by a leading `{`.
pub fn load_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        graph_from_json(&text)
    } else {
        graph_from_edge_list(&text)
    }
}

/// Parses an endomorphism given as a JSON map from vertex name to vertex
/// name, validating adjacency compatibility against `g`. Every vertex of
/// `g` must appear as a key.
pub fn endomorphism_from_json(g: &Graph, text: &str) -> Result<GraphEndomorphism> {
    let doc: std::collections::BTreeMap<String, String> = serde_json::from_str(text)?;
    let mut map = vec![u32::MAX; g.vertex_count()];
    for (from, to) in &doc {
        let f = g
            .vertex_by_name(from)
            .ok_or_else(|| Error::UnknownVertex(from.clone()))?;
        let t = g
            .vertex_by_name(to)
            .ok_or_else(|| Error::UnknownVertex(to.clone()))?;
        map[f.index()] = t.0;
    }
    if let Some(missing) = map.iter().position(|&t| t == u32::MAX) {
        return Err(Error::NotEndomorphism(format!(
            "vertex {:?} has no image",
            g.label(VertexId(missing as u32)).to_string()
        )));
    }
    GraphEndomorphism::new(g, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn json_roundtrip_preserves_structure() {
        let g = generators::random_graph(6, 9, 4).unwrap();
        let text = graph_to_json(&g);
        let back = graph_from_json(&text).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn documented_json_example() {
        let g = graph_from_json(r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}"#)
            .unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.vertex_by_name("a").is_some());
        assert!(graph_from_json(r#"{"vertices":["a"],"edges":[["a","z"]]}"#).is_err());
    }

    #[test]
    fn product_graph_serializes_with_pair_names() {
        let p = generators::complete(2).strong_product(&generators::path(2));
        let text = graph_to_json(&p);
        assert!(text.contains("(1,1)"));
        let back = graph_from_json(&text).unwrap();
        assert_eq!(back.vertex_count(), 4);
        assert_eq!(back.edge_count(), p.edge_count());
    }

    #[test]
    fn edge_list_parsing() {
        let g = graph_from_edge_list("a b\nb c\n\n# comment\nc a\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(graph_from_edge_list("a b c\n").is_err());
        assert!(graph_from_edge_list("a a\n").is_err());
    }

    #[test]
    fn endomorphism_json() {
        let c4 = generators::cycle(4);
        let rot = endomorphism_from_json(
            &c4,
            r#"{"1":"2","2":"3","3":"4","4":"1"}"#,
        )
        .unwrap();
        assert_eq!(rot.apply(VertexId(0)), VertexId(1));
        // mapping an edge onto a diagonal is not adjacency compatible
        assert!(endomorphism_from_json(&c4, r#"{"1":"1","2":"3","3":"1","4":"3"}"#).is_err());
        assert!(endomorphism_from_json(&c4, r#"{"1":"2"}"#).is_err());
        assert!(endomorphism_from_json(&c4, r#"{"1":"9","2":"1","3":"2","4":"3"}"#).is_err());
    }
}
