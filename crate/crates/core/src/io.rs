//! Edge-list text format and DOT export.
//!
//! The edge-list format is newline-delimited UTF-8. Each content line holds two
//! whitespace-separated vertex names `u v`. Lines whose first non-blank
//! character is `#` and blank lines are ignored. The first content line may
//! instead be a header `n <count>` declaring the total vertex count; vertices
//! that appear in no edge are then appended as isolated vertices named `_<i>`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::GraphError;
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut declared: Option<usize> = None;
    let mut seen_content = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let first_content = !seen_content;
        seen_content = true;
        if tokens.len() != 2 {
            return Err(GraphError::Parse {
                line: lineno + 1,
                message: format!("expected two vertex names, found {} tokens", tokens.len()),
            });
        }
        if first_content && tokens[0] == "n" {
            if let Ok(count) = tokens[1].parse::<usize>() {
                declared = Some(count);
                continue;
            }
        }
        if tokens[0] == tokens[1] {
            return Err(GraphError::Parse {
                line: lineno + 1,
                message: format!("self-loop at vertex {:?}", tokens[0]),
            });
        }
        let mut id = |name: &str| -> usize {
            *index.entry(name.to_owned()).or_insert_with(|| {
                names.push(name.to_owned());
                names.len() - 1
            })
        };
        let u = id(tokens[0]);
        let v = id(tokens[1]);
        edges.push((u, v));
    }

    if let Some(count) = declared {
        if count < names.len() {
            return Err(GraphError::Parse {
                line: 0,
                message: format!(
                    "header declares {count} vertices but edges name {}",
                    names.len()
                ),
            });
        }
        while names.len() < count {
            let mut name = format!("_{}", names.len());
            while index.contains_key(&name) {
                name.insert(0, '_');
            }
            index.insert(name.clone(), names.len());
            names.push(name);
        }
    }

    let mut g = Graph::with_names(names);
    for (u, v) in edges {
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Serializes `g` as an edge list with an `n <count>` header, edges sorted by
/// vertex index. Isolated vertices survive only as a count.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.vertex_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", g.name(u), g.name(v)).unwrap();
    }
    out
}

/// DOT export with nodes in index order and quoted labels.
pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v} [label=\"{}\"];", escape_dot(&g.name(v))).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
