//! Reference implementations used as oracles by the integration tests.
//!
//! Nothing here calls into the library: fractions are `u128` pairs, graphs
//! are adjacency bitmasks, and every formula is written out from its
//! definition.

#![allow(dead_code)]

use std::cmp::Ordering;

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Non-negative fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frac {
    pub num: u128,
    pub den: u128,
}

impl Frac {
    pub fn new(num: u128, den: u128) -> Frac {
        assert!(den != 0);
        let g = gcd(num, den).max(1);
        Frac { num: num / g, den: den / g }
    }

    pub fn int(v: u128) -> Frac {
        Frac { num: v, den: 1 }
    }

    pub fn zero() -> Frac {
        Frac::int(0)
    }

    pub fn add(self, o: Frac) -> Frac {
        let g = gcd(self.den, o.den);
        let den = (self.den / g).checked_mul(o.den).expect("oracle overflow");
        let a = self.num.checked_mul(den / self.den).expect("oracle overflow");
        let b = o.num.checked_mul(den / o.den).expect("oracle overflow");
        Frac::new(a.checked_add(b).expect("oracle overflow"), den)
    }

    pub fn scale(self, k: u128) -> Frac {
        let g = gcd(k, self.den).max(1);
        Frac::new(self.num.checked_mul(k / g).expect("oracle overflow"), self.den / g)
    }

    pub fn mul(self, o: Frac) -> Frac {
        Frac::new(
            self.num.checked_mul(o.num).expect("oracle overflow"),
            self.den.checked_mul(o.den).expect("oracle overflow"),
        )
    }

    pub fn cmp(self, o: Frac) -> Ordering {
        (self.num.checked_mul(o.den).expect("oracle overflow"))
            .cmp(&o.num.checked_mul(self.den).expect("oracle overflow"))
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `"p/q"` or `"p"`.
    pub fn show(self) -> String {
        if self.den == 1 {
            self.num.to_string()
        } else {
            format!("{}/{}", self.num, self.den)
        }
    }
}

/// Simple graph on at most 64 vertices as adjacency bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct G {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl G {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> G {
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            assert!(a != b && adj[a] >> b & 1 == 0);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        G { n, adj }
    }

    /// Bit `k` of `mask` is the `k`-th pair in the order
    /// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    pub fn from_mask(n: usize, mask: u64) -> G {
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        G { n, adj }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                if self.adj[i] >> j & 1 == 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn deg(&self, v: usize) -> u128 {
        self.adj[v].count_ones() as u128
    }

    pub fn m(&self) -> u128 {
        (0..self.n).map(|v| self.deg(v)).sum::<u128>() / 2
    }

    pub fn max_deg(&self) -> u128 {
        (0..self.n).map(|v| self.deg(v)).max().unwrap_or(0)
    }

    pub fn min_deg(&self) -> u128 {
        (0..self.n).map(|v| self.deg(v)).min().unwrap_or(0)
    }

    pub fn connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = 1u64;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            let fresh = self.adj[v] & !seen;
            seen |= fresh;
            stack.extend((0..self.n).filter(|w| fresh >> w & 1 == 1));
        }
        seen.count_ones() as usize == self.n
    }

    /// Two-coloring by DFS, `None` when an odd cycle exists.
    pub fn coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for w in 0..self.n {
                    if self.adj[v] >> w & 1 == 0 {
                        continue;
                    }
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    fn edge_degrees(&self) -> Vec<(u128, u128)> {
        self.edges().into_iter().map(|(a, b)| (self.deg(a), self.deg(b))).collect()
    }
}

pub fn term(a: u128, b: u128) -> Frac {
    Frac::new(a * b, a * a + b * b)
}

pub fn isdd(g: &G) -> Frac {
    g.edge_degrees().into_iter().fold(Frac::zero(), |acc, (a, b)| acc.add(term(a, b)))
}

pub fn sdd(g: &G) -> Frac {
    g.edge_degrees().into_iter().fold(Frac::zero(), |acc, (a, b)| acc.add(Frac::new(a * a + b * b, a * b)))
}

pub fn m1(g: &G) -> u128 {
    (0..g.n).map(|v| g.deg(v).pow(2)).sum()
}

pub fn m2(g: &G) -> u128 {
    g.edge_degrees().into_iter().map(|(a, b)| a * b).sum()
}

pub fn forgotten(g: &G) -> u128 {
    (0..g.n).map(|v| g.deg(v).pow(3)).sum()
}

pub fn ga(g: &G) -> f64 {
    g.edge_degrees().into_iter().map(|(a, b)| 2.0 * ((a * b) as f64).sqrt() / (a + b) as f64).sum()
}

pub fn within_tolerance(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-9 * y.abs().max(1.0)
}

/// Verdict of one bound on one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub equality: bool,
}

fn exact_at_least(lhs: Frac, rhs: Frac) -> Verdict {
    let c = lhs.cmp(rhs);
    Verdict { holds: c != Ordering::Less, equality: c == Ordering::Equal }
}

fn approx_at_least(lhs: f64, rhs: f64) -> Verdict {
    Verdict { holds: lhs >= rhs - 1e-9 * rhs.abs().max(1.0), equality: within_tolerance(lhs, rhs) }
}

/// The seven graph-level bounds on a graph with at least one edge and no
/// isolated vertices: LOWER_ELL, UPPER_K, UPPER_NDELTA, M1_F, GA_SIMPLE,
/// GA_M2, REMARK_ORDER.
pub fn verdicts(g: &G) -> [Verdict; 7] {
    let m = g.m();
    let (d, s) = (g.max_deg(), g.min_deg());
    assert!(m >= 1 && s >= 1);
    let pairs = g.edge_degrees();
    let ell = pairs.iter().filter(|&&(a, b)| (a.max(b), a.min(b)) == (d, s)).count() as u128;
    let k = pairs.iter().filter(|&&(a, b)| a == b).count() as u128;
    let x = isdd(g);

    let lower = term(d, s).scale(ell).add(term(d - 1, s).scale(m - ell));
    let lower_ell = exact_at_least(x, lower);

    let coef = term(d, d - 1);
    let upper = Frac::new(k, 2).add(coef.scale(m - k));
    let c = x.cmp(upper);
    let upper_k = Verdict { holds: c != Ordering::Greater, equality: c == Ordering::Equal };

    // nΔ/2 - k, kept as a fraction over 2
    let slack = Frac::new(g.n as u128 * d - 2 * k, 2);
    let upper_nd = Frac::new(k, 2).add(coef.mul(slack));
    let c = x.cmp(upper_nd);
    let upper_n_delta = Verdict { holds: c != Ordering::Greater, equality: c == Ordering::Equal };

    // ISDD + m/2 >= M1² / 2F
    let m1f = exact_at_least(x.add(Frac::new(m, 2)), Frac::new(m1(g).pow(2), 2 * forgotten(g)));

    let ga = ga(g);
    let xf = x.to_f64();
    let simple = ga * ga / (4.0 * m as f64);
    let dd = (d * d) as f64;
    let with_m2 = dd * ga * ga / (4.0 * m as f64 * dd - 2.0 * m2(g) as f64);
    [
        lower_ell,
        upper_k,
        upper_n_delta,
        m1f,
        approx_at_least(xf, simple),
        approx_at_least(xf, with_m2),
        approx_at_least(with_m2, simple),
    ]
}

pub const VERDICT_NAMES: [&str; 7] =
    ["LOWER_ELL", "UPPER_K", "UPPER_NDELTA", "M1_F", "GA_SIMPLE", "GA_M2", "REMARK_ORDER"];

/// `(di + dj) / (di² + dj²)` is the same on every edge.
pub fn ratio_constant(g: &G) -> bool {
    let mut it = g.edge_degrees().into_iter().map(|(a, b)| Frac::new(a + b, a * a + b * b));
    let Some(first) = it.next() else { return false };
    it.all(|r| r == first)
}

/// Regular, semiregular bipartite, or Γ3, from the definitions.
pub fn in_ratio_families(g: &G) -> bool {
    let n = g.n;
    let degs: Vec<u128> = (0..n).map(|v| g.deg(v)).collect();
    if degs.iter().all(|&x| x == degs[0]) {
        return true;
    }
    let Some(color) = g.coloring() else { return false };
    let side = |c: u8| -> Vec<u128> { (0..n).filter(|&v| color[v] == c).map(|v| degs[v]).collect() };
    let (a, b) = (side(0), side(1));
    let constant = |v: &[u128]| v.iter().all(|&x| x == v[0]);
    if constant(&a) && constant(&b) {
        return true;
    }
    let (d, s) = (g.max_deg(), g.min_deg());
    if (d * (d - s)) % (d + s) != 0 {
        return false;
    }
    let mid = d * (d - s) / (d + s);
    let gamma3_w = |full: &[u128], w: &[u128]| {
        full.iter().all(|&x| x == d)
            && w.iter().all(|&x| x == s || x == mid)
            && w.contains(&s)
            && w.contains(&mid)
            && mid != s
            && mid >= 1
    };
    g.connected() && (gamma3_w(&a, &b) || gamma3_w(&b, &a))
}

/// Labeled tree from a Prüfer sequence, by repeatedly removing the smallest
/// leaf.
pub fn prufer_tree(n: usize, seq: &[usize]) -> G {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    G::from_edges(n, &edges)
}

/// graph6 encoding written from the format description.
pub fn graph6(g: &G) -> String {
    let n = g.n;
    assert!(n <= 62);
    let mut out = vec![(n as u8) + 63];
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.adj[i] >> j & 1 == 1);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        out.push(v + 63);
    }
    String::from_utf8(out).unwrap()
}
