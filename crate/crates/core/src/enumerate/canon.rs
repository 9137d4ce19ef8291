//! Canonical forms by search over vertex orderings.
//!
//! The form of a graph is the lexicographically smallest upper-triangle bit
//! string, in graph6 column order, over all relabelings. Column `p` of that
//! string only depends on which vertices occupy positions `0..=p`, so the
//! search places vertices one position at a time and keeps only the
//! placements whose new column is minimal.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::pair_index;

pub const MAX_CANON_ORDER: usize = 10;

/// Packed canonical bit string; equal values iff isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: Vec<u8>,
}

impl CanonicalForm {
    /// The canonical representative as a graph.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                let k = pair_index(i, j);
                if self.bits[k / 8] >> (7 - k % 8) & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(self.n, edges).expect("valid canonical graph")
    }
}

struct Search {
    n: usize,
    adj: Vec<u16>,
    order: Vec<usize>,
    used: u16,
    best: Option<Vec<u16>>,
    cols: Vec<u16>,
}

impl Search {
    /// Column bits for `v` at position `p`: bit for position `i` is stored at
    /// `p - 1 - i`, so integer order is lexicographic order.
    fn column(&self, p: usize, v: usize) -> u16 {
        let mut col = 0;
        for (i, &u) in self.order[..p].iter().enumerate() {
            if self.adj[v] >> u & 1 == 1 {
                col |= 1 << (p - 1 - i);
            }
        }
        col
    }

    fn run(&mut self, p: usize) {
        if p == self.n {
            if self.best.as_ref().is_none_or(|best| self.cols < *best) {
                self.best = Some(self.cols.clone());
            }
            return;
        }
        let candidates: Vec<(usize, u16)> =
            (0..self.n).filter(|&v| self.used >> v & 1 == 0).map(|v| (v, self.column(p, v))).collect();
        let min = candidates.iter().map(|&(_, c)| c).min().expect("unused vertex");
        if let Some(best) = &self.best {
            let prefix = self.cols.iter().copied().chain([min]);
            if prefix.cmp(best[..=p].iter().copied()) == std::cmp::Ordering::Greater {
                return;
            }
        }
        for (v, c) in candidates {
            if c != min {
                continue;
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.cols.push(c);
            self.run(p + 1);
            self.cols.pop();
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::Domain(format!("canonical form supports n <= {MAX_CANON_ORDER}, got {n}")));
    }
    let mut adj = vec![0u16; n];
    for &(a, b) in g.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut search = Search { n, adj, order: Vec::with_capacity(n), used: 0, best: None, cols: Vec::with_capacity(n) };
    search.run(0);
    let cols = search.best.expect("at least one ordering");

    let nbits = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u8; nbits.div_ceil(8)];
    for (p, &col) in cols.iter().enumerate() {
        for i in 0..p {
            if col >> (p - 1 - i) & 1 == 1 {
                let k = pair_index(i, p);
                bits[k / 8] |= 1 << (7 - k % 8);
            }
        }
    }
    Ok(CanonicalForm { n, bits })
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.to_graph())
}
