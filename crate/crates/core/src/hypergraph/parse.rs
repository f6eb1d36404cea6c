//! Text formats.
//!
//! Hyperedge list: one hyperedge per line, whitespace-separated node labels,
//! `#` starts a comment. Labels are interned in order of first appearance.
//!
//! JSON: `{"nodes": [labels], "hyperedges": [[labels], ...]}`. `nodes` is
//! optional and fixes the node order (and allows isolated nodes). The XGI
//! layout (`"edge-dict": {"id": [labels]}`) is accepted as well so public
//! dataset dumps load without a conversion step.

use std::collections::HashMap;

use serde_json::Value;

use super::Hypergraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    HyperedgeList,
    Json,
}

impl Format {
    /// JSON when the first non-blank character is `{`.
    pub fn detect(text: &str) -> Format {
        match text.trim_start().chars().next() {
            Some('{') => Format::Json,
            _ => Format::HyperedgeList,
        }
    }
}

#[derive(Default)]
struct Interner {
    index: HashMap<String, usize>,
    labels: Vec<String>,
}

impl Interner {
    fn intern(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.index.insert(label.to_owned(), i);
        self.labels.push(label.to_owned());
        i
    }
}

pub fn parse_hypergraph(text: &str, format: Format) -> Result<Hypergraph> {
    match format {
        Format::HyperedgeList => parse_list(text),
        Format::Json => parse_json(text),
    }
}

fn parse_list(text: &str) -> Result<Hypergraph> {
    let mut interner = Interner::default();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let content = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if let Some(c) = content
            .chars()
            .find(|c| c.is_control() && !c.is_whitespace())
        {
            return Err(Error::MalformedLine {
                line: lineno + 1,
                reason: format!("control character {c:?}"),
            });
        }
        let edge: Vec<usize> = content
            .split_whitespace()
            .map(|tok| interner.intern(tok))
            .collect();
        if !edge.is_empty() {
            edges.push(edge);
        }
    }
    if edges.is_empty() {
        return Err(Error::EmptyInput);
    }
    Hypergraph::new(interner.labels.len(), edges)?.with_labels(interner.labels)
}

fn label_of(v: &Value, line: usize) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::MalformedLine {
            line,
            reason: format!("node labels must be strings or numbers, found {other}"),
        }),
    }
}

fn parse_json(text: &str) -> Result<Hypergraph> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    let root: Value = serde_json::from_str(text)?;
    let obj = root.as_object().ok_or_else(|| Error::MalformedLine {
        line: 1,
        reason: "top-level JSON value must be an object".into(),
    })?;

    let mut interner = Interner::default();
    let fixed_nodes = match obj.get("nodes") {
        Some(Value::Array(nodes)) => {
            for n in nodes {
                let l = label_of(n, 1)?;
                if interner.index.contains_key(&l) {
                    return Err(Error::DuplicateLabel(l));
                }
                interner.intern(&l);
            }
            true
        }
        Some(_) => {
            return Err(Error::MalformedLine {
                line: 1,
                reason: "\"nodes\" must be an array".into(),
            })
        }
        None => false,
    };

    let raw_edges: Vec<&Value> = if let Some(v) = obj.get("hyperedges") {
        v.as_array()
            .ok_or_else(|| Error::MalformedLine {
                line: 1,
                reason: "\"hyperedges\" must be an array".into(),
            })?
            .iter()
            .collect()
    } else if let Some(Value::Object(dict)) = obj.get("edge-dict") {
        let mut entries: Vec<(&String, &Value)> = dict.iter().collect();
        // numeric ids sort numerically, everything else lexicographically
        entries.sort_by(|a, b| match (a.0.parse::<u64>(), b.0.parse::<u64>()) {
            (Ok(x), Ok(y)) => x.cmp(&y),
            _ => a.0.cmp(b.0),
        });
        entries.into_iter().map(|(_, v)| v).collect()
    } else {
        return Err(Error::EmptyInput);
    };

    let mut edges = Vec::with_capacity(raw_edges.len());
    for (index, e) in raw_edges.into_iter().enumerate() {
        let members = e.as_array().ok_or_else(|| Error::MalformedLine {
            line: 1,
            reason: format!("hyperedge {index} is not an array"),
        })?;
        if members.is_empty() {
            return Err(Error::EmptyHyperedge { index });
        }
        let mut edge = Vec::with_capacity(members.len());
        for m in members {
            let l = label_of(m, 1)?;
            if fixed_nodes && !interner.index.contains_key(&l) {
                return Err(Error::UnknownLabel(l));
            }
            edge.push(interner.intern(&l));
        }
        edges.push(edge);
    }
    if edges.is_empty() {
        return Err(Error::EmptyInput);
    }
    Hypergraph::new(interner.labels.len(), edges)?.with_labels(interner.labels)
}

/// Writes one hyperedge per line, labels sorted bytewise within a line, lines in
/// hyperedge order. `parse` followed by `write` is a fixed point after one pass.
pub fn write_hyperedge_list(h: &Hypergraph) -> String {
    let mut out = String::new();
    for e in h.edges() {
        let mut labels: Vec<String> = e.iter().map(|&v| h.label(v)).collect();
        labels.sort();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

/// Writes the JSON format with an explicit `nodes` array.
pub fn write_json(h: &Hypergraph) -> String {
    let edges: Vec<Vec<String>> = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| h.label(v)).collect())
        .collect();
    serde_json::json!({ "nodes": h.label_vec(), "hyperedges": edges }).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    const TEN_NODE: &str = "1 2 0\n7 8 9\n0 6\n3 4\n3 5\n4 5\n6 3\n8 9\n6 7\n";

    #[test]
    fn parses_simple_list() {
        let h = parse_hypergraph("a b c\nc d\n", Format::HyperedgeList).unwrap();
        assert_eq!(h.node_count(), 4);
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![2, 3]]);
        assert_eq!(h.rank(), 3);
        assert_eq!(h.labels().unwrap(), &["a", "b", "c", "d"]);
    }

    #[test]
    fn parses_ten_node_hypergraph() {
        let h = parse_hypergraph(TEN_NODE, Format::HyperedgeList).unwrap();
        assert_eq!(h.node_count(), 10);
        assert_eq!(h.edge_count(), 9);
        assert_eq!(h.rank(), 3);
        assert_eq!(h.edges_of_order(3).count(), 2);
        assert_eq!(h.edges_of_order(2).count(), 7);
    }

    #[test]
    fn empty_and_comment_only_inputs() {
        assert_eq!(
            parse_hypergraph("", Format::HyperedgeList),
            Err(Error::EmptyInput)
        );
        assert_eq!(
            parse_hypergraph("# nothing\n\n", Format::HyperedgeList),
            Err(Error::EmptyInput)
        );
        assert_eq!(parse_hypergraph("", Format::Json), Err(Error::EmptyInput));
    }

    #[test]
    fn comments_and_duplicates() {
        let h = parse_hypergraph("a b # pair\n# skip\na b\n", Format::HyperedgeList).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.edge(0), h.edge(1));
    }

    #[test]
    fn control_characters_are_malformed() {
        assert!(matches!(
            parse_hypergraph("a b\nc \u{7} d\n", Format::HyperedgeList),
            Err(Error::MalformedLine { line: 2, .. })
        ));
    }

    #[test]
    fn json_with_nodes() {
        let h = parse_hypergraph(
            r#"{"nodes": ["x", "y", "z", "w"], "hyperedges": [["y", "x"], ["z", "z", "x"]]}"#,
            Format::Json,
        )
        .unwrap();
        assert_eq!(h.node_count(), 4);
        assert_eq!(h.edges(), &[vec![0, 1], vec![0, 2, 2]]);
        assert_eq!(
            parse_hypergraph(r#"{"nodes": ["x"], "hyperedges": [["q"]]}"#, Format::Json),
            Err(Error::UnknownLabel("q".into()))
        );
        assert_eq!(
            parse_hypergraph(r#"{"hyperedges": [["a"], []]}"#, Format::Json),
            Err(Error::EmptyHyperedge { index: 1 })
        );
    }

    #[test]
    fn json_xgi_layout() {
        let h = parse_hypergraph(
            r#"{"node-data": {}, "edge-dict": {"10": [3, 4], "2": [1, 2, 3]}}"#,
            Format::Json,
        )
        .unwrap();
        assert_eq!(h.labels().unwrap(), &["1", "2", "3", "4"]);
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![2, 3]]);
    }

    #[test]
    fn list_writer_round_trip_is_byte_exact() {
        let h = parse_hypergraph(TEN_NODE, Format::HyperedgeList).unwrap();
        let once = write_hyperedge_list(&h);
        let again = write_hyperedge_list(&parse_hypergraph(&once, Format::HyperedgeList).unwrap());
        assert_eq!(once, again);
        assert_eq!(once.lines().next(), Some("0 1 2"));
        let sorted = "0 1 2\n7 8 9\n0 6\n";
        assert_eq!(
            write_hyperedge_list(&parse_hypergraph(sorted, Format::HyperedgeList).unwrap()),
            sorted
        );
    }

    #[test]
    fn json_writer_round_trip() {
        let h = parse_hypergraph("a b c\nc d\nd d\n", Format::HyperedgeList).unwrap();
        let back = parse_hypergraph(&write_json(&h), Format::Json).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn format_detection() {
        assert_eq!(Format::detect("  {\"a\":1}"), Format::Json);
        assert_eq!(Format::detect("a b"), Format::HyperedgeList);
    }
}
