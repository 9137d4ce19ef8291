use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::pairs;

/// Largest order enumerated internally.
pub const MAX_LABELED_ORDER: usize = 7;

/// Number of vertex pairs, i.e. bits in an edge mask.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Graph whose edge set is bit `k` of `mask` for the `k`-th pair in graph6
/// column order `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    debug_assert!(pair_count(n) <= 64);
    let mut edges: Vec<(usize, usize)> =
        pairs(n).enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| e).collect();
    edges.sort_unstable();
    Graph::from_sorted_edges(n, edges)
}

/// Inverse of [`graph_from_mask`].
pub fn mask_of(g: &Graph) -> u64 {
    g.edges().iter().map(|&(i, j)| 1u64 << crate::graph6::pair_index(i, j)).fold(0, |a, b| a | b)
}

/// Every labeled graph on `n` vertices, ordered by edge mask.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(1..=MAX_LABELED_ORDER).contains(&n) {
        return Err(Error::Domain(format!("labeled enumeration supports 1 <= n <= {MAX_LABELED_ORDER}, got {n}")));
    }
    Ok((0..1u64 << pair_count(n)).map(move |mask| graph_from_mask(n, mask)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_connected;

    #[test]
    fn counts() {
        assert_eq!(labeled_graphs(1).unwrap().count(), 1);
        assert_eq!(labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(labeled_graphs(4).unwrap().count(), 64);
        assert!(labeled_graphs(0).is_err());
        assert!(labeled_graphs(8).is_err());
    }

    #[test]
    fn connected_counts_small() {
        // brute force: 1, 4, 38, 728 connected labeled graphs on 2..=5 vertices
        let connected = |n| labeled_graphs(n).unwrap().filter(|g| is_connected(g).unwrap()).count();
        assert_eq!(connected(2), 1);
        assert_eq!(connected(3), 4);
        assert_eq!(connected(4), 38);
        assert_eq!(connected(5), 728);
    }

    #[test]
    fn mask_round_trip() {
        for mask in 0..1u64 << 10 {
            assert_eq!(mask_of(&graph_from_mask(5, mask)), mask);
        }
    }

    #[test]
    fn deterministic() {
        let a: Vec<_> = labeled_graphs(4).unwrap().collect();
        let b: Vec<_> = labeled_graphs(4).unwrap().collect();
        assert_eq!(a, b);
    }
}
