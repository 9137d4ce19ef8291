//! Simple undirected graphs on dense vertex ids and the structural queries
//! the index and bound code is built on.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A vertex degree.
pub type Degree = u32;

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored once each as `(lo, hi)` with `lo < hi`, sorted. Two
/// graphs compare equal iff they have the same order and the same edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Graph on `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges
    /// (in either orientation) and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for id in [a, b] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Graph { n, edges: set.into_iter().collect() })
    }

    /// Caller guarantees `edges` is sorted, deduplicated and normalized.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(a, b)| a < b && b < n));
        Graph { n, edges }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(lo, hi)` pairs in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Per-vertex degrees; defined for every graph including `n = 0`.
    pub fn degrees(&self) -> Vec<Degree> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Domain(format!(
                "permutation of length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        Graph::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }

    /// Adds `extra` isolated vertices.
    pub fn with_isolated(&self, extra: usize) -> Self {
        Graph { n: self.n + extra, edges: self.edges.clone() }
    }
}

/// Degrees together with their extremes. Construction fails on the empty
/// vertex set, where the extremes are undefined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeData {
    pub degrees: Vec<Degree>,
    pub max_degree: Degree,
    pub min_degree: Degree,
}

pub fn degree_data(g: &Graph) -> Result<DegreeData> {
    let degrees = g.degrees();
    let max_degree = *degrees.iter().max().ok_or(Error::EmptyVertexSet)?;
    let min_degree = *degrees.iter().min().ok_or(Error::EmptyVertexSet)?;
    Ok(DegreeData { degrees, max_degree, min_degree })
}

/// Breadth-first traversal from vertex 0 reaches every vertex.
pub fn is_connected(g: &Graph) -> Result<bool> {
    if g.order() == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if g.order() <= 64 {
        let mut adj = vec![0u64; g.order()];
        for &(a, b) in &g.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let (mut seen, mut frontier) = (1u64, 1u64);
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & !seen;
            seen |= new;
            frontier |= new;
        }
        return Ok(seen.count_ones() as usize == g.order());
    }
    let adj = g.adjacency();
    let mut seen = vec![false; g.order()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    Ok(reached == g.order())
}

/// One part of a two-coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    U,
    W,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::U => Side::W,
            Side::W => Side::U,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side_of: Vec<Side>,
}

impl Bipartition {
    pub fn part(&self, side: Side) -> Vec<usize> {
        (0..self.side_of.len()).filter(|&v| self.side_of[v] == side).collect()
    }
}

/// Two-coloring of `g`, or `None` when an odd cycle exists. In every
/// component the smallest vertex id is placed in `U`.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let adj = g.adjacency();
    let mut side: Vec<Option<Side>> = vec![None; g.order()];
    for root in 0..g.order() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(Side::U);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].expect("queued vertices are colored");
            for &w in &adj[v] {
                match side[w] {
                    None => {
                        side[w] = Some(sv.flip());
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Bipartition { side_of: side.into_iter().map(|s| s.expect("all colored")).collect() })
}

/// Number of edges whose endpoint degrees equal `{a, b}` as an unordered pair.
pub fn count_degree_pair_edges(g: &Graph, a: Degree, b: Degree) -> usize {
    let deg = g.degrees();
    let want = (a.max(b), a.min(b));
    g.edges().iter().filter(|&&(u, v)| (deg[u].max(deg[v]), deg[u].min(deg[v])) == want).count()
}

/// Number of edges joining two vertices of the same degree.
pub fn count_equal_degree_edges(g: &Graph) -> usize {
    let deg = g.degrees();
    g.edges().iter().filter(|&&(u, v)| deg[u] == deg[v]).count()
}

/// Small named graphs used throughout the tests and the guide.
pub mod families {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j)))).expect("valid")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).expect("valid")
    }

    /// `K_{1,k}` centered at vertex 0.
    pub fn star(k: usize) -> Graph {
        complete_bipartite(1, k)
    }
}
