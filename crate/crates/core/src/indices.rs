//! Degree-based topological indices.
//!
//! ISDD and SDD are exact [`Rational`]s, the Zagreb indices and the forgotten
//! index are integers, and GA is an `f64` because its edge terms involve
//! square roots. Every index is a sum of a per-edge term that depends only on
//! the unordered pair of endpoint degrees, so all of them are computed from an
//! [`EdgeProfile`]: the multiset of degree pairs over the edge set.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Degree, Graph};
use crate::rational::Rational;

/// Unordered pair of endpoint degrees, stored with `hi >= lo`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DegreePair {
    pub hi: Degree,
    pub lo: Degree,
}

impl DegreePair {
    pub fn new(a: Degree, b: Degree) -> Self {
        DegreePair { hi: a.max(b), lo: a.min(b) }
    }

    pub fn is_equal_degree(self) -> bool {
        self.hi == self.lo
    }
}

/// Degrees of a graph and how many edges carry each degree pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeProfile {
    pub order: usize,
    pub size: usize,
    pub degrees: Vec<Degree>,
    /// Distinct degree pairs in ascending order, with edge multiplicities.
    pub pairs: Vec<(DegreePair, u64)>,
}

impl EdgeProfile {
    pub fn new(g: &Graph) -> Self {
        let degrees = g.degrees();
        let mut all: Vec<DegreePair> =
            g.edges().iter().map(|&(a, b)| DegreePair::new(degrees[a], degrees[b])).collect();
        all.sort_unstable();
        let mut pairs: Vec<(DegreePair, u64)> = Vec::new();
        for p in all {
            match pairs.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => pairs.push((p, 1)),
            }
        }
        EdgeProfile { order: g.order(), size: g.size(), degrees, pairs }
    }

    pub fn max_degree(&self) -> Option<Degree> {
        self.degrees.iter().copied().max()
    }

    pub fn min_degree(&self) -> Option<Degree> {
        self.degrees.iter().copied().min()
    }

    /// Edges whose unordered degree pair is `{a, b}`.
    pub fn count(&self, a: Degree, b: Degree) -> u64 {
        let want = DegreePair::new(a, b);
        self.pairs.iter().find(|(p, _)| *p == want).map_or(0, |&(_, c)| c)
    }

    /// Edges joining equal degrees.
    pub fn equal_degree_count(&self) -> u64 {
        self.pairs.iter().filter(|(p, _)| p.is_equal_degree()).map(|&(_, c)| c).sum()
    }

    fn exact_sum(&self, term: impl Fn(DegreePair) -> Rational) -> Rational {
        self.pairs.iter().map(|&(p, c)| term(p) * Rational::from(c)).sum()
    }

    pub fn isdd(&self) -> Rational {
        self.exact_sum(|p| isdd_term(p.hi, p.lo))
    }

    pub fn sdd(&self) -> Rational {
        self.exact_sum(|p| isdd_term(p.hi, p.lo).recip())
    }

    pub fn zagreb1(&self) -> u64 {
        let by_vertex: u64 = self.degrees.iter().map(|&d| (d as u64).pow(2)).sum();
        let by_edge: u64 = self.pairs.iter().map(|&(p, c)| c * (p.hi + p.lo) as u64).sum();
        assert_eq!(by_vertex, by_edge, "M1 vertex and edge forms disagree");
        by_vertex
    }

    pub fn zagreb2(&self) -> u64 {
        self.pairs.iter().map(|&(p, c)| c * p.hi as u64 * p.lo as u64).sum()
    }

    pub fn forgotten(&self) -> u64 {
        let by_vertex: u64 = self.degrees.iter().map(|&d| (d as u64).pow(3)).sum();
        let by_edge: u64 = self.pairs.iter().map(|&(p, c)| c * ((p.hi as u64).pow(2) + (p.lo as u64).pow(2))).sum();
        assert_eq!(by_vertex, by_edge, "F vertex and edge forms disagree");
        by_vertex
    }

    pub fn geometric_arithmetic(&self) -> f64 {
        self.pairs
            .iter()
            .map(|&(p, c)| {
                let (a, b) = (p.hi as f64, p.lo as f64);
                c as f64 * (2.0 * (a * b).sqrt() / (a + b))
            })
            .fold(0.0, |acc, x| acc + x)
    }
}

fn isdd_term(a: Degree, b: Degree) -> Rational {
    let (a, b) = (a as u64, b as u64);
    Rational::new(a * b, a * a + b * b)
}

/// Edge contribution `di·dj / (di² + dj²)` to ISDD.
pub fn edge_term_isdd(di: Degree, dj: Degree) -> Result<Rational> {
    if di == 0 || dj == 0 {
        return Err(Error::Domain(format!("edge term needs positive degrees, got ({di}, {dj})")));
    }
    Ok(isdd_term(di, dj))
}

/// `(di + dj) / (di² + dj²)`, the per-edge ratio whose constancy
/// characterizes the equality case of the M1/F relation.
pub fn edge_ratio(di: Degree, dj: Degree) -> Rational {
    let (a, b) = (di as u64, dj as u64);
    Rational::new(a + b, a * a + b * b)
}

pub fn isdd(g: &Graph) -> Rational {
    EdgeProfile::new(g).isdd()
}

pub fn sdd(g: &Graph) -> Rational {
    EdgeProfile::new(g).sdd()
}

pub fn zagreb1(g: &Graph) -> u64 {
    EdgeProfile::new(g).zagreb1()
}

pub fn zagreb2(g: &Graph) -> u64 {
    EdgeProfile::new(g).zagreb2()
}

pub fn forgotten(g: &Graph) -> u64 {
    EdgeProfile::new(g).forgotten()
}

pub fn geometric_arithmetic(g: &Graph) -> f64 {
    EdgeProfile::new(g).geometric_arithmetic()
}

/// All six indices of one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexVector {
    pub isdd: Rational,
    pub sdd: Rational,
    pub m1: u64,
    pub m2: u64,
    pub forgotten: u64,
    pub ga: f64,
}

impl IndexVector {
    pub fn from_profile(p: &EdgeProfile) -> Self {
        IndexVector {
            isdd: p.isdd(),
            sdd: p.sdd(),
            m1: p.zagreb1(),
            m2: p.zagreb2(),
            forgotten: p.forgotten(),
            ga: p.geometric_arithmetic(),
        }
    }
}

pub fn index_vector(g: &Graph) -> IndexVector {
    IndexVector::from_profile(&EdgeProfile::new(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn edge_terms() {
        for d in 1..20 {
            assert_eq!(edge_term_isdd(d, d).unwrap(), Rational::half());
        }
        assert_eq!(edge_term_isdd(2, 1).unwrap(), Rational::new(2, 5));
        assert_eq!(edge_term_isdd(1, 2).unwrap(), Rational::new(2, 5));
        assert_eq!(edge_term_isdd(18, 9).unwrap(), Rational::new(2, 5));
        assert!(edge_term_isdd(0, 3).is_err());
    }

    #[test]
    fn isdd_values() {
        assert_eq!(isdd(&cycle(5)), Rational::new(5, 2));
        assert_eq!(isdd(&path(4)), Rational::new(13, 10));
        assert_eq!(isdd(&complete_bipartite(2, 3)), Rational::new(36, 13));
        assert_eq!(isdd(&Graph::empty(3)), Rational::zero());
    }

    #[test]
    fn sdd_values() {
        assert_eq!(sdd(&cycle(5)), Rational::from_integer(10));
        assert_eq!(sdd(&path(4)), Rational::from_integer(7));
        assert_eq!(sdd(&star(3)), Rational::from_integer(10));
    }

    #[test]
    fn integer_indices() {
        assert_eq!(zagreb1(&path(4)), 10);
        assert_eq!(zagreb1(&complete(4)), 36);
        assert_eq!(zagreb1(&Graph::empty(5)), 0);
        assert_eq!(zagreb2(&path(4)), 8);
        assert_eq!(zagreb2(&complete(4)), 54);
        assert_eq!(zagreb2(&star(3)), 9);
        assert_eq!(forgotten(&path(4)), 18);
        assert_eq!(forgotten(&complete(4)), 108);
        assert_eq!(forgotten(&star(3)), 30);
    }

    #[test]
    fn ga_values() {
        assert_eq!(geometric_arithmetic(&complete(5)), 10.0);
        let p4 = 1.0 + 4.0 * 2f64.sqrt() / 3.0;
        assert!((geometric_arithmetic(&path(4)) - p4).abs() < 1e-12);
        let k13 = 3.0 * 3f64.sqrt() / 2.0;
        assert!((geometric_arithmetic(&star(3)) - k13).abs() < 1e-12);
    }

    #[test]
    fn vectors() {
        let v = index_vector(&cycle(5));
        assert_eq!(v.isdd, Rational::new(5, 2));
        assert_eq!(v.sdd, Rational::from_integer(10));
        assert_eq!((v.m1, v.m2, v.forgotten), (20, 20, 40));
        assert_eq!(v.ga, 5.0);

        let v = index_vector(&Graph::empty(3));
        assert_eq!(v.isdd, Rational::zero());
        assert_eq!((v.m1, v.m2, v.forgotten, v.ga), (0, 0, 0, 0.0));
        assert!(v.ga.is_sign_positive());
    }
}
