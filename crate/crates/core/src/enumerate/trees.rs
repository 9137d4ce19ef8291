use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MIN_TREE_ORDER: usize = 2;
pub const MAX_TREE_ORDER: usize = 9;

/// Number of labeled trees on `n` vertices, `n^(n-2)`.
pub fn tree_count(n: usize) -> u64 {
    (n as u64).pow(n.saturating_sub(2) as u32)
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n`.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Graph> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::Domain(format!("Prüfer sequence of length {} for n = {n}", seq.len())));
    }
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { id: bad, n });
    }
    let mut remaining = vec![1usize; n];
    for &v in seq {
        remaining[v] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| remaining[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, v));
        remaining[v] -= 1;
        if remaining[v] == 1 {
            leaves.insert(v);
        }
    }
    let a = leaves.pop_first().expect("two leaves remain");
    let b = leaves.pop_first().expect("two leaves remain");
    edges.push((a, b));
    Graph::new(n, edges)
}

/// The `index`-th labeled tree: the Prüfer sequence is `index` written in
/// base `n`, most significant digit first.
pub fn tree_from_index(n: usize, index: u64) -> Graph {
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut rest = index;
    for slot in seq.iter_mut().rev() {
        *slot = (rest % n as u64) as usize;
        rest /= n as u64;
    }
    prufer_decode(n, &seq).expect("valid sequence")
}

/// All `n^(n-2)` labeled trees, in lexicographic order of Prüfer sequence.
pub fn labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(MIN_TREE_ORDER..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::Domain(format!(
            "tree enumeration supports {MIN_TREE_ORDER} <= n <= {MAX_TREE_ORDER}, got {n}"
        )));
    }
    Ok((0..tree_count(n)).map(move |i| tree_from_index(n, i)))
}
