//! Text formats: digraphs, hypergraphs and diagrams.
//!
//! Digraph: one edge per line, `source<TAB>target<TAB>weight`; an isolated
//! vertex is `vertex<TAB>-<TAB>-`. Hypergraph: `value<TAB>v1,v2,...,vk`.
//! Diagram: header `dim<TAB>type<TAB>birth<TAB>death`, then one point per line.
//! Blank lines and lines starting with `#` are skipped everywhere.

use std::fmt::Write as _;

use thiserror::Error;

use crate::diagram::{DiagramPoint, ExtendedDiagram};
use crate::digraph::WeightedDigraph;
use crate::extended::IntervalKind;
use crate::hypergraph::FilteredHypergraph;

pub const DIAGRAM_HEADER: &str = "dim\ttype\tbirth\tdeath";

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {message}")]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> InputError {
    InputError {
        line,
        message: message.into(),
    }
}

/// Non-comment lines with their 1-based numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            None
        } else {
            Some((i + 1, line.split('\t').collect()))
        }
    })
}

fn number(line: usize, field: &str, what: &str) -> Result<f64, InputError> {
    let v: f64 = field
        .trim()
        .parse()
        .map_err(|_| err(line, format!("{what} `{field}` is not a number")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(err(line, format!("{what} `{field}` is not finite")))
    }
}

/// Number of tab-separated fields on the first data line, if any.
pub fn first_record_width(text: &str) -> Option<usize> {
    records(text).next().map(|(_, f)| f.len())
}

pub fn parse_digraph(text: &str) -> Result<WeightedDigraph, InputError> {
    let mut g = WeightedDigraph::new();
    for (line, fields) in records(text) {
        let [src, dst, w] = fields.as_slice() else {
            return Err(err(line, format!("expected 3 tab-separated fields, found {}", fields.len())));
        };
        let (src, dst, w) = (src.trim(), dst.trim(), w.trim());
        if src.is_empty() || dst.is_empty() {
            return Err(err(line, "empty vertex name"));
        }
        if dst == "-" && w == "-" {
            g.add_vertex(src).map_err(|e| err(line, e.to_string()))?;
            continue;
        }
        let w = number(line, w, "weight")?;
        g.add_edge(src, dst, w).map_err(|e| err(line, e.to_string()))?;
    }
    Ok(g)
}

pub fn parse_hypergraph(text: &str) -> Result<FilteredHypergraph, InputError> {
    let mut h = FilteredHypergraph::new();
    for (line, fields) in records(text) {
        let [value, vertices] = fields.as_slice() else {
            return Err(err(line, format!("expected 2 tab-separated fields, found {}", fields.len())));
        };
        let value = number(line, value, "value")?;
        let names: Vec<&str> = vertices.split(',').map(str::trim).collect();
        h.add_hyperedge(&names, value)
            .map_err(|e| err(line, e.to_string()))?;
    }
    Ok(h)
}

fn kind_of(label: &str) -> Option<IntervalKind> {
    match label {
        "ord" => Some(IntervalKind::Ordinary),
        "rel" => Some(IntervalKind::Relative),
        "ext" => Some(IntervalKind::Extended),
        _ => None,
    }
}

pub fn parse_diagram(text: &str) -> Result<ExtendedDiagram, InputError> {
    let mut points = Vec::new();
    let mut header_seen = false;
    for (line, fields) in records(text) {
        if !header_seen {
            if fields.join("\t") != DIAGRAM_HEADER {
                return Err(err(line, format!("expected header `{}`", DIAGRAM_HEADER.replace('\t', "<TAB>"))));
            }
            header_seen = true;
            continue;
        }
        let [dim, kind, birth, death] = fields.as_slice() else {
            return Err(err(line, format!("expected 4 tab-separated fields, found {}", fields.len())));
        };
        let dim = dim
            .trim()
            .parse()
            .map_err(|_| err(line, format!("dimension `{dim}` is not a non-negative integer")))?;
        let kind = kind_of(kind.trim())
            .ok_or_else(|| err(line, format!("type `{kind}` is not one of ord, rel, ext")))?;
        points.push(DiagramPoint {
            dim,
            kind,
            birth: number(line, birth, "birth")?,
            death: number(line, death, "death")?,
        });
    }
    Ok(ExtendedDiagram::new(points))
}

pub fn format_diagram(d: &ExtendedDiagram) -> String {
    let mut out = String::new();
    out.push_str(DIAGRAM_HEADER);
    out.push('\n');
    for p in d.points() {
        let _ = writeln!(out, "{}\t{}\t{}\t{}", p.dim, p.kind.label(), p.birth, p.death);
    }
    out
}

/// `inf` for `+∞`, shortest round-trip decimal otherwise.
pub fn format_distance(d: f64) -> String {
    if d.is_infinite() {
        "inf".to_owned()
    } else {
        d.to_string()
    }
}
