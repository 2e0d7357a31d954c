//! Plain-text instance files.
//!
//! Line 1 is a header, then one line per item; `#` starts a comment line
//! and blank lines are skipped:
//!
//! ```text
//! graph n m        then m lines "e a b"       (undirected edges, 0-based)
//! bigraph nu nv m  then m lines "e a b"       plus optional "f a b" lines
//! order n k        then k lines "r a b"       (meaning a ≺ b)
//! ```
//!
//! A `bigraph` with `f` lines is a cover problem; the `f` edges must also
//! appear as `e` lines.

use std::collections::BTreeSet;

use crate::bigraph::BipartiteGraph;
use crate::chaincover::CoverProblem;
use crate::orders::{PartialOrder, SimpleGraph};
use crate::{Edge, Error};

/// A parsed instance file.
#[derive(Debug, Clone)]
pub enum InstanceFile {
    Graph(SimpleGraph),
    Order(PartialOrder),
    Cover(CoverProblem),
}

impl InstanceFile {
    pub fn kind_name(&self) -> &'static str {
        match self {
            InstanceFile::Graph(_) => "graph",
            InstanceFile::Order(_) => "order",
            InstanceFile::Cover(_) => "bigraph",
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize, Error> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a non-negative integer, got {tok:?}")))
}

/// Parses an instance from text.
pub fn parse_instance(text: &str) -> Result<InstanceFile, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty instance file"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    match toks.as_slice() {
        ["graph", n, m] => {
            let n = parse_usize(n, header_line)?;
            let m = parse_usize(m, header_line)?;
            let mut edges = Vec::with_capacity(m);
            for (ln, l) in lines {
                match l.split_whitespace().collect::<Vec<_>>().as_slice() {
                    ["e", a, b] => edges.push((parse_usize(a, ln)?, parse_usize(b, ln)?)),
                    _ => return Err(parse_err(ln, format!("expected \"e a b\", got {l:?}"))),
                }
            }
            if edges.len() != m {
                return Err(parse_err(
                    header_line,
                    format!("header declares {m} edges, found {}", edges.len()),
                ));
            }
            Ok(InstanceFile::Graph(SimpleGraph::new(n, edges).map_err(
                |e| parse_err(header_line, e.to_string()),
            )?))
        }
        ["bigraph", nu, nv, m] => {
            let nu = parse_usize(nu, header_line)?;
            let nv = parse_usize(nv, header_line)?;
            let m = parse_usize(m, header_line)?;
            let mut edges = Vec::with_capacity(m);
            let mut forbidden: BTreeSet<Edge> = BTreeSet::new();
            for (ln, l) in lines {
                match l.split_whitespace().collect::<Vec<_>>().as_slice() {
                    ["e", a, b] => edges.push((parse_usize(a, ln)?, parse_usize(b, ln)?)),
                    ["f", a, b] => {
                        forbidden.insert((parse_usize(a, ln)?, parse_usize(b, ln)?));
                    }
                    _ => {
                        return Err(parse_err(
                            ln,
                            format!("expected \"e a b\" or \"f a b\", got {l:?}"),
                        ))
                    }
                }
            }
            if edges.len() != m {
                return Err(parse_err(
                    header_line,
                    format!("header declares {m} edges, found {}", edges.len()),
                ));
            }
            let g = BipartiteGraph::from_edge_list(nu, nv, edges)
                .map_err(|e| parse_err(header_line, e.to_string()))?;
            let p = CoverProblem::new(g, forbidden)
                .map_err(|e| parse_err(header_line, e.to_string()))?;
            Ok(InstanceFile::Cover(p))
        }
        ["order", n, k] => {
            let n = parse_usize(n, header_line)?;
            let k = parse_usize(k, header_line)?;
            let mut relation = BTreeSet::new();
            let mut count = 0usize;
            for (ln, l) in lines {
                match l.split_whitespace().collect::<Vec<_>>().as_slice() {
                    ["r", a, b] => {
                        relation.insert((parse_usize(a, ln)?, parse_usize(b, ln)?));
                        count += 1;
                    }
                    _ => return Err(parse_err(ln, format!("expected \"r a b\", got {l:?}"))),
                }
            }
            if count != k {
                return Err(parse_err(
                    header_line,
                    format!("header declares {k} relation pairs, found {count}"),
                ));
            }
            Ok(InstanceFile::Order(
                PartialOrder::new(n, relation).map_err(|e| parse_err(header_line, e.to_string()))?,
            ))
        }
        _ => Err(parse_err(
            header_line,
            format!("unrecognized header {header:?}"),
        )),
    }
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let edges = g.edges();
    let mut out = format!("graph {} {}\n", g.n(), edges.len());
    for (a, b) in edges {
        out.push_str(&format!("e {a} {b}\n"));
    }
    out
}

pub fn write_order(p: &PartialOrder) -> String {
    let mut out = format!("order {} {}\n", p.n(), p.relation().len());
    for &(a, b) in p.relation() {
        out.push_str(&format!("r {a} {b}\n"));
    }
    out
}

pub fn write_cover_problem(p: &CoverProblem) -> String {
    let g = p.graph();
    let mut out = format!("bigraph {} {} {}\n", g.u_count(), g.v_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    for &(u, v) in p.forbidden() {
        out.push_str(&format!("f {u} {v}\n"));
    }
    out
}
