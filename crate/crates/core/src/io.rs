//! Text formats.
//!
//! Graph file:
//! ```text
//! # comment
//! p <n> <m> <u|d>
//! e <a> <b>        (exactly m lines; undirected edges listed once)
//! ```
//! Coloring file: `k <K>` followed by `v <vertex> <color>` for every vertex
//! in ascending order. Role sidecar: `r <vertex> <label>` per vertex.

use std::fmt::Write as _;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::roles::VertexRoleMap;

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('#')).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn field<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    tok.parse().map_err(|e| Error::Syntax {
        line,
        msg: format!("`{tok}`: {e}"),
    })
}

fn expect_tag(parts: &[&str], tag: &str, arity: usize, line: usize) -> Result<()> {
    if parts.first() != Some(&tag) || parts.len() != arity + 1 {
        return Err(Error::Syntax {
            line,
            msg: format!("expected `{tag}` line with {arity} fields"),
        });
    }
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Syntax {
        line: 0,
        msg: "empty graph file".into(),
    })?;
    expect_tag(&header, "p", 3, hline)?;
    let n: usize = field(header[1], hline)?;
    let m: usize = field(header[2], hline)?;
    let directed = match header[3] {
        "u" => false,
        "d" => true,
        other => {
            return Err(Error::Syntax {
                line: hline,
                msg: format!("directedness `{other}`, expected u or d"),
            })
        }
    };
    let mut arcs = Vec::with_capacity(m);
    for (line, parts) in lines {
        expect_tag(&parts, "e", 2, line)?;
        arcs.push((field(parts[1], line)?, field(parts[2], line)?));
    }
    if arcs.len() != m {
        return Err(Error::CountMismatch {
            what: "edges",
            declared: m,
            found: arcs.len(),
        });
    }
    Graph::new(n, directed, arcs)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!(
        "p {} {} {}\n",
        g.n(),
        edges.len(),
        if g.is_directed() { "d" } else { "u" }
    );
    for (a, b) in edges {
        writeln!(out, "e {a} {b}").unwrap();
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Syntax {
        line: 0,
        msg: "empty coloring file".into(),
    })?;
    expect_tag(&header, "k", 1, hline)?;
    let k: Color = field(header[1], hline)?;
    let mut colors = Vec::new();
    for (line, parts) in lines {
        expect_tag(&parts, "v", 2, line)?;
        let v: usize = field(parts[1], line)?;
        if v != colors.len() + 1 {
            return Err(Error::Syntax {
                line,
                msg: format!("vertex {v} out of order, expected {}", colors.len() + 1),
            });
        }
        colors.push(field(parts[2], line)?);
    }
    Coloring::new(k, colors)
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = format!("k {}\n", c.k());
    for (i, col) in c.as_slice().iter().enumerate() {
        writeln!(out, "v {} {col}", i + 1).unwrap();
    }
    out
}

pub fn parse_roles(text: &str) -> Result<VertexRoleMap> {
    let mut roles = VertexRoleMap::new();
    for (line, parts) in content_lines(text) {
        expect_tag(&parts, "r", 2, line)?;
        let v: usize = field(parts[1], line)?;
        if v != roles.len() + 1 {
            return Err(Error::Syntax {
                line,
                msg: format!("vertex {v} out of order, expected {}", roles.len() + 1),
            });
        }
        roles.push(parts[2]);
    }
    Ok(roles)
}

pub fn write_roles(roles: &VertexRoleMap) -> String {
    let mut out = String::new();
    for (v, label) in roles.iter() {
        writeln!(out, "r {v} {label}").unwrap();
    }
    out
}

/// Fill colors indexed by `(color - 1) % 8`.
pub const DOT_PALETTE: [&str; 8] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33", "#a65628", "#f781bf",
];

/// Graphviz rendering with vertices and arcs in ascending order.
pub fn emit_dot(g: &Graph, c: Option<&Coloring>, roles: Option<&VertexRoleMap>) -> Result<String> {
    if let Some(c) = c {
        c.check_for(g)?;
    }
    if let Some(r) = roles {
        if r.len() != g.n() {
            return Err(Error::CountMismatch {
                what: "role labels",
                declared: g.n(),
                found: r.len(),
            });
        }
    }
    let (kw, sep) = if g.is_directed() {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    let mut out = format!("{kw} G {{\n  node [shape=circle, style=filled, fillcolor=\"#ffffff\"];\n");
    for v in g.vertices() {
        let mut attrs = vec![format!("label=\"{v}\"")];
        if let Some(c) = c {
            let col = c.get(v);
            attrs.push(format!("fillcolor=\"{}\"", DOT_PALETTE[(col as usize - 1) % 8]));
        }
        if let Some(r) = roles {
            attrs.push(format!("xlabel=\"{}\"", r.label(v).replace('"', "'")));
        }
        writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} {sep} {b};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
