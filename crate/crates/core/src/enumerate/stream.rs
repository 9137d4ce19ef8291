use std::io::BufRead;

use crate::error::Error;
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// A graph6 line that failed to parse or could not be read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    /// 1-based line number.
    pub line: usize,
    pub text: String,
    pub error: Error,
}

/// One parsed line; `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamedGraph {
    pub line: usize,
    pub text: String,
    pub graph: Graph,
}

/// Parses graph6 lines in input order. Blank lines are skipped; a bad line
/// yields an error item and the stream continues.
pub fn stream_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<StreamedGraph, LineError>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line_no = i + 1;
        let text = match line {
            Ok(t) => t,
            Err(e) => {
                return Some(Err(LineError {
                    line: line_no,
                    text: String::new(),
                    error: Error::Domain(format!("read error: {e}")),
                }))
            }
        };
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return None;
        }
        Some(match parse_graph6(trimmed) {
            Ok(graph) => Ok(StreamedGraph { line: line_no, text: trimmed.to_string(), graph }),
            Err(error) => Err(LineError { line: line_no, text: trimmed.to_string(), error }),
        })
    })
}
