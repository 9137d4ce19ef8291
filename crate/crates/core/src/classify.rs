//! Structural detection of the equality-case families: regular graphs,
//! semiregular bipartite graphs, the classes Γ1, Γ2, Γ3, and graphs on which
//! the edge ratio `(di + dj) / (di² + dj²)` is constant.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bipartition, is_connected, Degree, Graph, Side};
use crate::indices::{edge_ratio, DegreePair, EdgeProfile};
use crate::rational::Rational;

/// Common degree when every vertex has the same degree.
pub fn is_regular(g: &Graph) -> Option<Degree> {
    let deg = g.degrees();
    let first = *deg.first()?;
    deg.iter().all(|&d| d == first).then_some(first)
}

fn components(g: &Graph) -> Vec<usize> {
    let adj = g.adjacency();
    let mut comp = vec![usize::MAX; g.order()];
    let mut next = 0;
    for root in 0..g.order() {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = next;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// `(r, s)` with `r >= s` when `g` is bipartite with one side all of degree
/// `r` and the other all of degree `s`. Components may be oriented
/// independently.
pub fn is_semiregular_bipartite(g: &Graph) -> Option<(Degree, Degree)> {
    if g.order() < 2 {
        return None;
    }
    let parts = bipartition(g)?;
    let deg = g.degrees();
    let comp = components(g);
    let ncomp = comp.iter().max().map_or(0, |&c| c + 1);

    // per component, the single degree seen on each side
    let mut sides: Vec<[Option<Degree>; 2]> = vec![[None, None]; ncomp];
    for v in 0..g.order() {
        let slot = &mut sides[comp[v]][(parts.side_of[v] == Side::W) as usize];
        match slot {
            None => *slot = Some(deg[v]),
            Some(d) if *d == deg[v] => {}
            Some(_) => return None,
        }
    }

    let mut target: Option<DegreePair> = None;
    let mut isolated = false;
    for s in sides {
        match s {
            [Some(a), Some(b)] => {
                let p = DegreePair::new(a, b);
                match target {
                    None => target = Some(p),
                    Some(t) if t == p => {}
                    Some(_) => return None,
                }
            }
            _ => isolated = true,
        }
    }
    match (target, isolated) {
        (Some(t), false) => Some((t.hi, t.lo)),
        // edgeless
        (None, true) => Some((0, 0)),
        _ => None,
    }
}

fn extremes(p: &EdgeProfile) -> Option<(Degree, Degree)> {
    Some((p.max_degree()?, p.min_degree()?))
}

fn connected(g: &Graph) -> bool {
    g.order() > 0 && is_connected(g).unwrap_or(false)
}

/// Connected, with `ℓ > 0` edges of degree pair `(Δ, δ)`, `m - ℓ > 0` edges of
/// pair `(Δ-1, δ)`, and no other edges.
pub fn in_gamma1(g: &Graph) -> bool {
    in_gamma1_profile(&EdgeProfile::new(g), connected(g))
}

fn in_gamma1_profile(p: &EdgeProfile, connected: bool) -> bool {
    let Some((d, s)) = extremes(p) else { return false };
    if d < 2 || !connected {
        return false;
    }
    let ell = p.count(d, s);
    let second = p.count(d - 1, s);
    DegreePair::new(d, s) != DegreePair::new(d - 1, s) && ell > 0 && second > 0 && ell + second == p.size as u64
}

/// Connected, with `k > 0` equal-degree edges of common degree `Δ` or `Δ-1`,
/// `m - k > 0` edges of pair `(Δ, Δ-1)`, and no other edges.
pub fn in_gamma2(g: &Graph) -> bool {
    in_gamma2_profile(&EdgeProfile::new(g), connected(g))
}

fn in_gamma2_profile(p: &EdgeProfile, connected: bool) -> bool {
    let Some((d, _)) = extremes(p) else { return false };
    if d < 2 || !connected {
        return false;
    }
    let k = p.count(d, d) + p.count(d - 1, d - 1);
    let mixed = p.count(d, d - 1);
    k > 0 && mixed > 0 && k + mixed == p.size as u64
}

/// Connected bipartite, one side all of degree `Δ`, the other side using
/// exactly the two degrees `δ` and `Δ(Δ-δ)/(Δ+δ)`, which must be an integer.
pub fn in_gamma3(g: &Graph) -> bool {
    in_gamma3_profile(g, &EdgeProfile::new(g), connected(g))
}

fn in_gamma3_profile(g: &Graph, p: &EdgeProfile, connected: bool) -> bool {
    if !connected || p.size == 0 {
        return false;
    }
    let Some((d, s)) = extremes(p) else { return false };
    if d <= s {
        return false;
    }
    let (num, den) = (d as u64 * (d - s) as u64, (d + s) as u64);
    if num % den != 0 {
        return false;
    }
    let middle = (num / den) as Degree;
    if middle < 1 || middle == s {
        return false;
    }
    // each edge joins the all-Δ side to the other side
    if !p.pairs.iter().all(|&(q, _)| q.hi == d && (q.lo == s || q.lo == middle)) {
        return false;
    }
    let Some(parts) = bipartition(g) else { return false };
    let deg = &p.degrees;

    let all_max = |side: Side| parts.part(side).iter().all(|&v| deg[v] == d);
    let w_side = match (all_max(Side::U), all_max(Side::W)) {
        (true, false) => Side::W,
        (false, true) => Side::U,
        _ => return false,
    };
    let w = parts.part(w_side);
    w.iter().all(|&v| deg[v] == s || deg[v] == middle)
        && w.iter().any(|&v| deg[v] == s)
        && w.iter().any(|&v| deg[v] == middle)
}

/// The common value of `(di + dj)/(di² + dj²)` when it is the same on every
/// edge.
pub fn edge_ratio_constant(g: &Graph) -> Result<Option<Rational>> {
    let p = EdgeProfile::new(g);
    if p.size == 0 {
        return Err(Error::Edgeless);
    }
    Ok(ratio_of_profile(&p))
}

fn ratio_of_profile(p: &EdgeProfile) -> Option<Rational> {
    let mut values = p.pairs.iter().map(|&(q, _)| edge_ratio(q.hi, q.lo));
    let first = values.next()?;
    values.all(|v| v == first).then_some(first)
}

/// Membership verdicts for every family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphClassLabel {
    pub regular: Option<Degree>,
    pub semiregular_bipartite: Option<(Degree, Degree)>,
    pub gamma1: bool,
    pub gamma2: bool,
    pub gamma3: bool,
    pub constant_edge_ratio: Option<Rational>,
}

impl GraphClassLabel {
    /// Names of the families `g` belongs to.
    pub fn memberships(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(r) = self.regular {
            out.push(format!("regular({r})"));
        }
        if let Some((r, s)) = self.semiregular_bipartite {
            out.push(format!("semiregular_bipartite({r},{s})"));
        }
        for (flag, name) in [(self.gamma1, "gamma1"), (self.gamma2, "gamma2"), (self.gamma3, "gamma3")] {
            if flag {
                out.push(name.to_string());
            }
        }
        if let Some(v) = &self.constant_edge_ratio {
            out.push(format!("constant_edge_ratio({v})"));
        }
        out
    }
}

pub fn classify(g: &Graph) -> GraphClassLabel {
    let p = EdgeProfile::new(g);
    classify_profile(g, &p)
}

pub(crate) fn classify_profile(g: &Graph, p: &EdgeProfile) -> GraphClassLabel {
    let connected = connected(g);
    let first = p.degrees.first().copied();
    // a semiregular bipartite graph with edges has a single degree pair
    let semiregular = if p.pairs.len() <= 1 { is_semiregular_bipartite(g) } else { None };
    let label = GraphClassLabel {
        regular: first.filter(|&f| p.degrees.iter().all(|&d| d == f)),
        semiregular_bipartite: semiregular,
        gamma1: in_gamma1_profile(p, connected),
        gamma2: in_gamma2_profile(p, connected),
        gamma3: in_gamma3_profile(g, p, connected),
        constant_edge_ratio: ratio_of_profile(p),
    };
    if p.size > 0 {
        if let Some(r) = label.regular {
            assert_eq!(label.constant_edge_ratio, Some(Rational::new(1, r as u64)));
        }
        if let Some((r, s)) = label.semiregular_bipartite {
            assert_eq!(label.constant_edge_ratio, Some(edge_ratio(r, s)));
        }
    }
    if label.gamma1 || label.gamma2 || label.gamma3 {
        assert!(connected, "Γ families are connected");
    }
    label
}

/// The three example graphs drawn for Γ1, Γ2 and Γ3.
pub mod figures {
    use crate::graph::Graph;

    /// 19 vertices: twelve of degree 2 in a row (`0..12`), four of degree 3
    /// above (`12..16`) each joined to three consecutive row vertices, and
    /// three of degree 4 below (`16..19`) each joined to four.
    pub fn h1() -> Graph {
        let mut edges = Vec::new();
        for (t, top) in (12..16).enumerate() {
            edges.extend((3 * t..3 * t + 3).map(|b| (b, top)));
        }
        for (u, under) in (16..19).enumerate() {
            edges.extend((4 * u..4 * u + 4).map(|b| (b, under)));
        }
        Graph::new(19, edges).expect("valid H1")
    }

    /// 14 vertices: ten bottom vertices `0..10` of degree 5 and four top
    /// vertices `10..14` of degree 6.
    pub fn h2() -> Graph {
        let t = |i: usize| 10 + i;
        let edges = [
            (0, t(0)),
            (0, t(2)),
            (1, t(0)),
            (1, t(2)),
            (2, t(0)),
            (2, t(1)),
            (3, t(0)),
            (3, t(1)),
            (4, t(0)),
            (4, t(2)),
            (5, t(2)),
            (5, t(3)),
            (6, t(1)),
            (6, t(3)),
            (7, t(2)),
            (7, t(3)),
            (8, t(1)),
            (8, t(3)),
            (9, t(1)),
            (9, t(3)),
            (0, 1),
            (1, 2),
            (2, 3),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (t(0), t(1)),
            (t(2), t(3)),
            (0, 2),
            (0, 3),
            (1, 3),
            (4, 7),
            (5, 8),
            (4, 9),
            (6, 9),
        ];
        Graph::new(14, edges).expect("valid H2")
    }

    /// Bipartite on `U = u1..u9` (ids `21..30`) and `W = v1..v21` (ids
    /// `0..21`): `v_i` for `i <= 9` meets the six cyclically consecutive
    /// `u_i .. u_{i+5}`, and `v10..v21` meet all of `U`. Degrees are 18 on `U`,
    /// 6 on `v1..v9` and 9 on `v10..v21`.
    pub fn h3() -> Graph {
        let u = |j: usize| 21 + j;
        let mut edges = Vec::new();
        for i in 0..9 {
            edges.extend((0..6).map(|t| (i, u((i + t) % 9))));
        }
        for i in 9..21 {
            edges.extend((0..9).map(|j| (i, u(j))));
        }
        Graph::new(30, edges).expect("valid H3")
    }
}

#[cfg(test)]
mod tests {
    use super::figures::*;
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn regularity() {
        assert_eq!(is_regular(&cycle(5)), Some(2));
        assert_eq!(is_regular(&path(4)), None);
        assert_eq!(is_regular(&complete(4)), Some(3));
        assert_eq!(is_regular(&Graph::empty(0)), None);
    }

    #[test]
    fn semiregular() {
        assert_eq!(is_semiregular_bipartite(&complete_bipartite(2, 3)), Some((3, 2)));
        assert_eq!(is_semiregular_bipartite(&star(3)), Some((3, 1)));
        assert_eq!(is_semiregular_bipartite(&complete(3)), None);
        assert_eq!(is_semiregular_bipartite(&cycle(6)), Some((2, 2)));
        assert_eq!(is_semiregular_bipartite(&path(4)), None);
        // two stars whose centers land on opposite sides of the id rule
        let g = Graph::new(6, [(0, 1), (0, 2), (3, 5), (4, 5)]).unwrap();
        assert_eq!(is_semiregular_bipartite(&g), Some((2, 1)));
        assert_eq!(is_semiregular_bipartite(&star(2).with_isolated(1)), None);
    }

    #[test]
    fn gamma1() {
        assert!(in_gamma1(&h1()));
        assert!(!in_gamma1(&path(4)));
        assert!(!in_gamma1(&cycle(5)));
    }

    #[test]
    fn gamma2() {
        assert!(in_gamma2(&h2()));
        assert!(!in_gamma2(&complete(4)));
        assert!(!in_gamma2(&star(3)));
    }

    #[test]
    fn gamma3() {
        let g = h3();
        let deg = g.degrees();
        assert!(deg[21..].iter().all(|&d| d == 18));
        assert!(deg[..9].iter().all(|&d| d == 6));
        assert!(deg[9..21].iter().all(|&d| d == 9));
        assert!(in_gamma3(&g));
        assert!(!in_gamma3(&complete_bipartite(2, 3)));
        assert!(!in_gamma3(&cycle(6)));
    }

    #[test]
    fn edge_ratios() {
        assert_eq!(edge_ratio_constant(&cycle(5)).unwrap(), Some(Rational::half()));
        assert_eq!(edge_ratio_constant(&complete_bipartite(2, 3)).unwrap(), Some(Rational::new(5, 13)));
        assert_eq!(edge_ratio_constant(&path(4)).unwrap(), None);
        assert_eq!(edge_ratio_constant(&Graph::empty(2)), Err(Error::Edgeless));
    }

    #[test]
    fn labels() {
        let c5 = classify(&cycle(5));
        assert_eq!(c5.regular, Some(2));
        assert_eq!(c5.constant_edge_ratio, Some(Rational::half()));
        assert!(!c5.gamma1 && !c5.gamma2 && !c5.gamma3);

        let k23 = classify(&complete_bipartite(2, 3));
        assert_eq!(k23.semiregular_bipartite, Some((3, 2)));
        assert_eq!(k23.constant_edge_ratio, Some(Rational::new(5, 13)));

        let h = classify(&h3());
        assert!(h.gamma3);
        assert_eq!(h.constant_edge_ratio, Some(Rational::new(1, 15)));

        let p4 = classify(&path(4));
        assert!(p4.gamma2 && !p4.gamma1);
        assert_eq!(p4.memberships(), ["gamma2"]);
    }
}
