use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use isdd_lab::edge_list::parse_edge_lists;
use isdd_lab::enumerate::stream_graph6;
use isdd_lab::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

/// One input graph, or the reason it could not be read.
pub struct Item {
    pub input_id: String,
    pub graph: std::result::Result<Graph, String>,
}

pub fn open(path: &Path) -> Result<Box<dyn BufRead + Send>> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(Box::new(BufReader::new(file)))
}

/// Reads every graph from `path` in input order. Graph6 items are named by
/// their line, edge-list items by the line of their header.
pub fn read_items(path: &Path, format: Format) -> Result<Vec<Item>> {
    let mut reader = open(path)?;
    match format {
        Format::Graph6 => Ok(stream_graph6(reader)
            .map(|item| match item {
                Ok(sg) => Item { input_id: sg.text, graph: Ok(sg.graph) },
                Err(e) if e.text.is_empty() => {
                    Item { input_id: format!("line {}", e.line), graph: Err(e.error.to_string()) }
                }
                Err(e) => Item { input_id: e.text, graph: Err(format!("line {}: {}", e.line, e.error)) },
            })
            .collect()),
        Format::Edgelist => {
            let mut text = String::new();
            reader.read_to_string(&mut text).with_context(|| format!("cannot read {}", path.display()))?;
            Ok(parse_edge_lists(&text)
                .into_iter()
                .map(|(line, g)| Item { input_id: format!("line {line}"), graph: g.map_err(|e| e.to_string()) })
                .collect())
        }
    }
}
