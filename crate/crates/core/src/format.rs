//! Line-based text format for graphs and families.
//!
//! ```text
//! # comment
//! graph <name>
//! n <order>
//! e <u> <v>
//! end
//! ```
//!
//! Labels below `n` are used as given. A block whose labels reach `n` or
//! beyond (for example 1-based labels `1..=n`) is compacted: distinct labels
//! are mapped in increasing order onto `0..`, and any remaining vertices are
//! isolated and come last. Serialization always writes 0-based labels with
//! edges sorted by `(min, max)`, so it is a fixed point of parsing.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily};

struct Block {
    name: String,
    name_line: usize,
    n: Option<usize>,
    edges: Vec<(u64, u64, usize)>,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn finish(block: Block) -> Result<Graph> {
    let n = block.n.ok_or_else(|| Error::parse(block.name_line, format!("graph `{}` has no `n` line", block.name)))?;
    let fits = block.edges.iter().all(|&(u, v, _)| u < n as u64 && v < n as u64);
    let edges: Vec<(usize, usize, usize)> = if fits {
        block.edges.iter().map(|&(u, v, l)| (u as usize, v as usize, l)).collect()
    } else {
        let mut labels: Vec<u64> = block.edges.iter().flat_map(|&(u, v, _)| [u, v]).collect();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() > n {
            return Err(Error::parse(
                block.name_line,
                format!("graph `{}` uses {} distinct labels but declares n {n}", block.name, labels.len()),
            ));
        }
        let idx = |x: u64| labels.binary_search(&x).expect("label collected above");
        block.edges.iter().map(|&(u, v, l)| (idx(u), idx(v), l)).collect()
    };
    let mut adj = vec![0u64; n];
    for (u, v, line) in edges {
        if u == v {
            return Err(Error::parse(line, format!("self-loop at {u}")));
        }
        if adj[u] >> v & 1 == 1 {
            return Err(Error::parse(line, format!("repeated edge {u}-{v}")));
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Ok(Graph::from_adjacency_unchecked(block.name, adj))
}

/// Parses every graph block in `text`, in input order.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut current: Option<Block> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match (key, current.as_mut()) {
            ("graph", None) => {
                if rest.is_empty() {
                    return Err(Error::parse(line_no, "graph block needs a name"));
                }
                current = Some(Block { name: rest.to_string(), name_line: line_no, n: None, edges: Vec::new() });
            }
            ("graph", Some(_)) => return Err(Error::parse(line_no, "`graph` inside an open block (missing `end`)")),
            ("n", Some(b)) => {
                if b.n.is_some() {
                    return Err(Error::parse(line_no, "duplicate `n` line"));
                }
                if !b.edges.is_empty() {
                    return Err(Error::parse(line_no, "`n` must precede edges"));
                }
                let n: usize = rest.parse().map_err(|_| Error::parse(line_no, format!("bad order `{rest}`")))?;
                if n == 0 {
                    return Err(Error::parse(line_no, "order must be at least 1"));
                }
                if n > crate::MAX_ORDER {
                    return Err(Error::CapacityExceeded { order: n });
                }
                b.n = Some(n);
            }
            ("e", Some(b)) => {
                if b.n.is_none() {
                    return Err(Error::parse(line_no, "edge before `n` line"));
                }
                let mut toks = rest.split_whitespace();
                let mut label = || -> Result<u64> {
                    let t = toks.next().ok_or_else(|| Error::parse(line_no, "edge needs two endpoints"))?;
                    t.parse().map_err(|_| Error::parse(line_no, format!("bad vertex label `{t}`")))
                };
                let (u, v) = (label()?, label()?);
                if toks.next().is_some() {
                    return Err(Error::parse(line_no, "trailing tokens after edge"));
                }
                b.edges.push((u, v, line_no));
            }
            ("end", Some(_)) => {
                if !rest.is_empty() {
                    return Err(Error::parse(line_no, "trailing tokens after `end`"));
                }
                graphs.push(finish(current.take().expect("open block"))?);
            }
            (_, None) => return Err(Error::parse(line_no, format!("`{key}` outside a graph block"))),
            (other, Some(_)) => return Err(Error::parse(line_no, format!("unknown directive `{other}`"))),
        }
    }
    if let Some(b) = current {
        return Err(Error::parse(b.name_line, format!("graph `{}` is missing `end`", b.name)));
    }
    Ok(graphs)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut graphs = parse_graphs(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("one graph")),
        k => Err(Error::parse(1, format!("expected exactly one graph, found {k}"))),
    }
}

/// Parses a family file; all blocks must declare the same order.
pub fn parse_family(text: &str) -> Result<GraphFamily> {
    let graphs = parse_graphs(text)?;
    if graphs.is_empty() {
        return Err(Error::parse(1, "family file contains no graphs"));
    }
    let n = graphs[0].order();
    if let Some(g) = graphs.iter().find(|g| g.order() != n) {
        return Err(Error::parse(
            1,
            format!("mixed orders in family: `{}` has {} vertices, expected {n}", g.name(), g.order()),
        ));
    }
    GraphFamily::new(graphs)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    write_graph_into(&mut out, g);
    out
}

fn write_graph_into(out: &mut String, g: &Graph) {
    let _ = writeln!(out, "graph {}", g.name());
    let _ = writeln!(out, "n {}", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out.push_str("end\n");
}

pub fn write_graphs<'a, I: IntoIterator<Item = &'a Graph>>(graphs: I) -> String {
    let mut out = String::new();
    for g in graphs {
        write_graph_into(&mut out, g);
    }
    out
}

pub fn write_family(f: &GraphFamily) -> String {
    write_graphs(f.members())
}
