//! Plain-text file formats for groups, graphs and edge colourings.
//!
//! ```text
//! cayley <n>                 graph <n> <m>            coloring <c>
//! names <n tokens>           labels <n tokens>        u v colour
//! <n rows of n indices>      u v  (m lines, u < v)    ...
//! ```
//!
//! The header and the optional `names`/`labels` line are fixed; blank lines and
//! lines starting with `#` are skipped everywhere.

use crate::coloring::{Color, ColoringError, EdgeColoring};
use crate::graph::{Graph, GraphError};
use crate::group::{Group, GroupError};
use std::fmt::Write as _;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
                .map(|(i, l)| (i, l.split_whitespace().collect())),
        );
        Lines { inner: it.peekable() }
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>), FormatError> {
        self.inner.next().ok_or_else(|| FormatError::Truncated(what.to_string()))
    }

    fn next_if_keyword(&mut self, keyword: &str) -> Option<(usize, Vec<&'a str>)> {
        self.inner.next_if(|(_, tokens)| tokens.first() == Some(&keyword))
    }

    fn finish(mut self) -> Result<(), FormatError> {
        match self.inner.next() {
            None => Ok(()),
            Some((line, _)) => Err(syntax(line, "unexpected trailing content")),
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

fn number<T: FromStr>(line: usize, token: &str) -> Result<T, FormatError> {
    token.parse().map_err(|_| syntax(line, format!("expected a non-negative integer, found `{token}`")))
}

fn header(lines: &mut Lines, keyword: &str, arity: usize) -> Result<(usize, Vec<usize>), FormatError> {
    let (line, tokens) = lines.next(&format!("`{keyword}` header"))?;
    if tokens[0] != keyword || tokens.len() != arity + 1 {
        return Err(syntax(line, format!("expected `{keyword}` followed by {arity} integer(s)")));
    }
    let values = tokens[1..].iter().map(|t| number(line, t)).collect::<Result<_, _>>()?;
    Ok((line, values))
}

fn name_line(lines: &mut Lines, keyword: &str, n: usize) -> Result<Option<Vec<String>>, FormatError> {
    match lines.next_if_keyword(keyword) {
        None => Ok(None),
        Some((line, tokens)) if tokens.len() != n + 1 => {
            Err(syntax(line, format!("`{keyword}` needs {n} tokens, found {}", tokens.len() - 1)))
        }
        Some((_, tokens)) => Ok(Some(tokens[1..].iter().map(|s| s.to_string()).collect())),
    }
}

pub fn parse_group(text: &str) -> Result<Group, FormatError> {
    let mut lines = Lines::new(text);
    let (_, h) = header(&mut lines, "cayley", 1)?;
    let n = h[0];
    let names = name_line(&mut lines, "names", n)?;
    let mut table = Vec::with_capacity(n);
    for r in 0..n {
        let (line, tokens) = lines.next(&format!("row {r} of the table"))?;
        if tokens.len() != n {
            return Err(syntax(line, format!("row {r} has {} entries, expected {n}", tokens.len())));
        }
        table.push(tokens.iter().map(|t| number(line, t)).collect::<Result<Vec<usize>, _>>()?);
    }
    lines.finish()?;
    Ok(Group::from_cayley_table(table, names)?)
}

pub fn write_group(group: &Group) -> String {
    let mut out = format!("cayley {}\nnames {}\n", group.order(), group.names().join(" "));
    for row in group.rows() {
        let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = Lines::new(text);
    let (_, h) = header(&mut lines, "graph", 2)?;
    let (n, m) = (h[0], h[1]);
    let labels = name_line(&mut lines, "labels", n)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for i in 0..m {
        let (line, tokens) = lines.next(&format!("edge {i}"))?;
        if tokens.len() != 2 {
            return Err(syntax(line, "expected `u v`"));
        }
        let (u, v): (usize, usize) = (number(line, tokens[0])?, number(line, tokens[1])?);
        if u >= v {
            return Err(syntax(line, format!("edge endpoints must satisfy u < v, found {u} {v}")));
        }
        if v >= n {
            return Err(syntax(line, format!("vertex {v} out of range for {n} vertices")));
        }
        if !seen.insert((u, v)) {
            return Err(syntax(line, format!("edge {u} {v} listed twice")));
        }
        edges.push((u, v));
    }
    lines.finish()?;
    Ok(match labels {
        Some(labels) => Graph::from_edges(labels, edges)?,
        None => Graph::unlabeled(n, edges)?,
    })
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\nlabels {}\n", g.vertex_count(), g.edge_count(), g.labels().join(" "));
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// A colouring file before it is matched against its graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringFile {
    pub color_count: Color,
    pub assignments: Vec<(usize, usize, Color)>,
}

pub fn parse_coloring_file(text: &str) -> Result<ColoringFile, FormatError> {
    let mut lines = Lines::new(text);
    let (hline, h) = header(&mut lines, "coloring", 1)?;
    let color_count = Color::try_from(h[0]).map_err(|_| syntax(hline, "too many colours"))?;
    let mut assignments = Vec::new();
    for (line, tokens) in lines.inner.by_ref() {
        if tokens.len() != 3 {
            return Err(syntax(line, "expected `u v colour`"));
        }
        let (u, v): (usize, usize) = (number(line, tokens[0])?, number(line, tokens[1])?);
        let c: Color = number(line, tokens[2])?;
        if u >= v {
            return Err(syntax(line, format!("edge endpoints must satisfy u < v, found {u} {v}")));
        }
        if c == 0 || c > color_count {
            return Err(syntax(line, format!("colour {c} outside 1..={color_count}")));
        }
        assignments.push((u, v, c));
    }
    Ok(ColoringFile { color_count, assignments })
}

/// Reads a colouring and checks it covers every edge of `g` exactly once.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<EdgeColoring, FormatError> {
    let file = parse_coloring_file(text)?;
    Ok(EdgeColoring::from_assignments(g, file.color_count, file.assignments)?)
}

pub fn write_coloring(col: &EdgeColoring) -> String {
    let mut out = format!("coloring {}\n", col.color_count());
    for (u, v, c) in col.assignments() {
        let _ = writeln!(out, "{u} {v} {c}");
    }
    out
}
