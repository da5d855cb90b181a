//! Text formats: DIMACS graphs, JSON list assignments and JSON packings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use listpack::galvin::{EdgeColoring, EdgeListAssignment};
use listpack::graph::{Edge, Graph};
use listpack::{Color, ListAssignment, Packing};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },

    #[error("key \"{key}\": {msg}")]
    Key { key: String, msg: String },

    #[error("{0}")]
    Invalid(String),
}

fn line_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Line { line, msg: msg.into() }
}

fn key_err(key: impl Into<String>, msg: impl Into<String>) -> FormatError {
    FormatError::Key {
        key: key.into(),
        msg: msg.into(),
    }
}

fn parse_nat(tok: &str, line: usize, what: &str) -> Result<usize, FormatError> {
    tok.parse()
        .map_err(|_| line_err(line, format!("{what} `{tok}` is not a nonnegative integer")))
}

/// Parses `c` comments, one `p edge <n> <e>` header and `e <u> <v>` lines.
pub fn parse_dimacs(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(line_err(line, "second `p` line"));
                }
                if toks.len() != 4 || toks[1] != "edge" {
                    return Err(line_err(line, "expected `p edge <n> <e>`"));
                }
                let n = parse_nat(toks[2], line, "vertex count")?;
                let e = parse_nat(toks[3], line, "edge count")?;
                if n == 0 {
                    return Err(line_err(line, "graph must have at least one vertex"));
                }
                header = Some((n, e));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| line_err(line, "edge before `p` line"))?;
                if toks.len() != 3 {
                    return Err(line_err(line, "expected `e <u> <v>`"));
                }
                let u = parse_nat(toks[1], line, "vertex")?;
                let v = parse_nat(toks[2], line, "vertex")?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(line_err(line, format!("vertex {w} out of range 1..={n}")));
                    }
                }
                if u == v {
                    return Err(line_err(line, format!("loop at vertex {u}")));
                }
                if !seen.insert(Edge::new(u, v)) {
                    return Err(line_err(line, format!("duplicate edge {}", Edge::new(u, v))));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(line_err(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, e) = header.ok_or_else(|| FormatError::Invalid("missing `p edge <n> <e>` line".into()))?;
    if e != edges.len() {
        return Err(FormatError::Invalid(format!(
            "header declares {e} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, edges).map_err(|err| FormatError::Invalid(err.to_string()))
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "e {} {}", e.u, e.v).unwrap();
    }
    out
}

fn parse_object(text: &str) -> Result<serde_json::Map<String, Value>, FormatError> {
    match serde_json::from_str::<Value>(text) {
        Ok(Value::Object(map)) => Ok(map),
        Ok(_) => Err(FormatError::Invalid("expected a JSON object".into())),
        Err(e) => Err(FormatError::Invalid(format!("malformed JSON: {e}"))),
    }
}

fn parse_list(key: &str, value: &Value) -> Result<BTreeSet<Color>, FormatError> {
    let items = value
        .as_array()
        .ok_or_else(|| key_err(key, "expected an array of colors"))?;
    if items.is_empty() {
        return Err(key_err(key, "empty list"));
    }
    let mut set = BTreeSet::new();
    for item in items {
        let c = item
            .as_u64()
            .filter(|&c| c > 0 && c <= Color::MAX as u64)
            .ok_or_else(|| key_err(key, format!("`{item}` is not a positive color")))?;
        if !set.insert(c as Color) {
            return Err(key_err(key, format!("duplicate color {c}")));
        }
    }
    Ok(set)
}

/// Parses `{"1": [..], "2": [..]}` covering vertices `1..=n` exactly once.
pub fn parse_lists(text: &str, n: usize) -> Result<ListAssignment, FormatError> {
    let map = parse_object(text)?;
    let mut lists: BTreeMap<usize, BTreeSet<Color>> = BTreeMap::new();
    for (key, value) in &map {
        let v: usize = key
            .parse()
            .ok()
            .filter(|v| (1..=n).contains(v) && key == &v.to_string())
            .ok_or_else(|| key_err(key, format!("not a vertex id in 1..={n}")))?;
        lists.insert(v, parse_list(key, value)?);
    }
    if let Some(v) = (1..=n).find(|v| !lists.contains_key(v)) {
        return Err(key_err(v.to_string(), format!("no list for vertex {v}")));
    }
    ListAssignment::new(lists.into_values().collect()).map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn write_lists(l: &ListAssignment) -> String {
    let map: BTreeMap<usize, Vec<Color>> = l
        .lists()
        .iter()
        .enumerate()
        .map(|(i, s)| (i + 1, s.iter().copied().collect()))
        .collect();
    // numeric key order rather than string order
    let body: Vec<String> = map
        .iter()
        .map(|(v, cs)| format!("  \"{v}\": {}", serde_json::to_string(cs).unwrap()))
        .collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

/// JSON form of a list assignment, with vertex ids as keys.
pub fn lists_value(l: &ListAssignment) -> Value {
    Value::Object(
        l.lists()
            .iter()
            .enumerate()
            .map(|(i, s)| ((i + 1).to_string(), Value::from(s.iter().copied().collect::<Vec<_>>())))
            .collect(),
    )
}

/// Parses `{"u-v": [..]}` with `u < v`, covering every edge of `g` once.
pub fn parse_edge_lists(text: &str, g: &Graph) -> Result<EdgeListAssignment, FormatError> {
    let map = parse_object(text)?;
    let edges: BTreeSet<Edge> = g.edges().into_iter().collect();
    let mut lists = BTreeMap::new();
    for (key, value) in &map {
        let e = key
            .split_once('-')
            .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
            .filter(|&(u, v)| u < v && key == &format!("{u}-{v}"))
            .map(|(u, v)| Edge::new(u, v))
            .ok_or_else(|| key_err(key, "expected `u-v` with u < v"))?;
        if !edges.contains(&e) {
            return Err(key_err(key, "not an edge of the graph"));
        }
        lists.insert(e, parse_list(key, value)?);
    }
    if let Some(e) = edges.iter().find(|e| !lists.contains_key(e)) {
        return Err(key_err(e.to_string(), format!("no list for edge {e}")));
    }
    EdgeListAssignment::new(lists).map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn write_edge_lists(l: &EdgeListAssignment) -> String {
    let map: serde_json::Map<String, Value> = l
        .lists
        .iter()
        .map(|(e, s)| (e.to_string(), Value::from(s.iter().copied().collect::<Vec<_>>())))
        .collect();
    serde_json::to_string_pretty(&Value::Object(map)).unwrap() + "\n"
}

pub fn edge_coloring_value(ec: &EdgeColoring) -> Value {
    Value::Object(
        ec.colors
            .iter()
            .map(|(e, &c)| (e.to_string(), Value::from(c)))
            .collect(),
    )
}

#[derive(Serialize, Deserialize)]
struct PackingFile {
    k: usize,
    colorings: Vec<Vec<u64>>,
}

/// Parses `{"k": k, "colorings": [[..], ..]}`; `n` is the expected row length.
pub fn parse_packing(text: &str, n: usize) -> Result<Packing, FormatError> {
    let file: PackingFile =
        serde_json::from_str(text).map_err(|e| FormatError::Invalid(format!("malformed packing: {e}")))?;
    if file.k == 0 {
        return Err(FormatError::Invalid("k must be positive".into()));
    }
    if file.colorings.len() != file.k {
        return Err(FormatError::Invalid(format!(
            "k = {} but {} colorings given",
            file.k,
            file.colorings.len()
        )));
    }
    let mut rows = Vec::with_capacity(file.k);
    for (j, row) in file.colorings.iter().enumerate() {
        if row.len() != n {
            return Err(FormatError::Invalid(format!(
                "coloring {} has {} entries, expected {n}",
                j + 1,
                row.len()
            )));
        }
        let row =
            row.iter()
                .map(|&c| {
                    Color::try_from(c).ok().filter(|&c| c > 0).ok_or_else(|| {
                        FormatError::Invalid(format!("coloring {}: `{c}` is not a positive color", j + 1))
                    })
                })
                .collect::<Result<Vec<Color>, _>>()?;
        rows.push(row);
    }
    Packing::from_rows(rows).map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn write_packing(p: &Packing) -> String {
    let file = PackingFile {
        k: p.k(),
        colorings: p
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(u64::from).collect())
            .collect(),
    };
    serde_json::to_string(&file).unwrap() + "\n"
}
