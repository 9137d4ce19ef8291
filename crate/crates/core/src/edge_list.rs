//! Plain-text edge lists: a header line `n m` followed by `m` lines `i j`.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::EdgeList { line, reason: reason.into() }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| err(line, format!("missing {what}")))?;
        tok.parse().map_err(|_| err(line, format!("invalid {what} {tok:?}")))
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if let Some(extra) = it.next() {
        return Err(err(line, format!("unexpected token {extra:?}")));
    }
    Ok((a, b))
}

type Lines<'a> = std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>;

fn content_lines(text: &str) -> Lines<'_> {
    let it: Box<dyn Iterator<Item = (usize, &str)>> =
        Box::new(text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty()));
    it.peekable()
}

/// Reads one header and the `m` edge lines it announces. The whole block is
/// consumed even when a line is bad, so the next block starts cleanly.
fn next_block(lines: &mut Lines<'_>) -> Option<(usize, Result<Graph>)> {
    let (hline, header) = lines.next()?;
    let (n, m) = match two_numbers(hline, header) {
        Ok(v) => v,
        Err(e) => return Some((hline, Err(e))),
    };
    let mut first_error = None;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    let mut last_line = hline;
    for _ in 0..m {
        let Some((line, text)) = lines.next() else { break };
        last_line = line;
        if first_error.is_some() {
            continue;
        }
        let checked = two_numbers(line, text).and_then(|(i, j)| {
            if i >= n || j >= n {
                Err(err(line, format!("vertex id out of range 0..{n}")))
            } else if i == j {
                Err(err(line, format!("loop on vertex {i}")))
            } else if !seen.insert((i.min(j), i.max(j))) {
                Err(err(line, format!("duplicate edge {i} {j}")))
            } else {
                Ok((i, j))
            }
        });
        match checked {
            Ok(e) => edges.push(e),
            Err(e) => first_error = Some(e),
        }
    }
    if let Some(e) = first_error {
        return Some((hline, Err(e)));
    }
    if edges.len() != m {
        return Some((hline, Err(err(last_line, format!("header declares {m} edges, found {}", edges.len())))));
    }
    Some((hline, Graph::new(n, edges)))
}

/// Parses one edge list. Line numbers in errors are 1-based. Blank lines
/// are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (_, graph) = next_block(&mut lines).ok_or_else(|| err(1, "missing header `n m`"))?;
    let graph = graph?;
    if let Some(&(line, _)) = lines.peek() {
        let found = graph.size() + lines.count();
        return Err(err(line, format!("header declares {} edges, found {found}", graph.size())));
    }
    Ok(graph)
}

/// Parses a sequence of edge lists written back to back, each a header
/// followed by its edges. Every entry carries the header's line number; a
/// malformed block is reported and parsing resumes after it.
pub fn parse_edge_lists(text: &str) -> Vec<(usize, Result<Graph>)> {
    let mut lines = content_lines(text);
    std::iter::from_fn(|| next_block(&mut lines)).collect()
}

/// Renders `g` in the same format `parse_edge_list` reads.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}
