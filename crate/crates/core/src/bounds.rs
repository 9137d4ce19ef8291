//! The ISDD bounds and index relations, each evaluated into a
//! [`BoundReport`] carrying both sides, the verdict and an equality flag.
//!
//! Everything except the three GA-based relations is evaluated exactly over
//! [`Rational`]. GA involves square roots, so those reports compare `f64`
//! values under the tolerance policy of [`approx_equal`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_connected, Degree, Graph};
use crate::indices::{DegreePair, EdgeProfile};
use crate::rational::Rational;

/// Relative tolerance for GA-based comparisons.
pub const GA_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BoundId {
    #[serde(rename = "EDGE_MIN")]
    EdgeMin,
    #[serde(rename = "EDGE_SECOND_MIN")]
    EdgeSecondMin,
    #[serde(rename = "TREE_EDGE")]
    TreeEdge,
    #[serde(rename = "LOWER_ELL")]
    LowerEll,
    #[serde(rename = "UPPER_K")]
    UpperK,
    #[serde(rename = "UPPER_NDELTA")]
    UpperNDelta,
    #[serde(rename = "GA_SIMPLE")]
    GaSimple,
    #[serde(rename = "GA_M2")]
    GaM2,
    #[serde(rename = "M1_F")]
    M1F,
    #[serde(rename = "CLAIM1")]
    Claim1,
    #[serde(rename = "REMARK_ORDER")]
    RemarkOrder,
}

impl BoundId {
    pub const ALL: [BoundId; 11] = [
        BoundId::EdgeMin,
        BoundId::EdgeSecondMin,
        BoundId::TreeEdge,
        BoundId::LowerEll,
        BoundId::UpperK,
        BoundId::UpperNDelta,
        BoundId::GaSimple,
        BoundId::GaM2,
        BoundId::M1F,
        BoundId::Claim1,
        BoundId::RemarkOrder,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::EdgeMin => "EDGE_MIN",
            BoundId::EdgeSecondMin => "EDGE_SECOND_MIN",
            BoundId::TreeEdge => "TREE_EDGE",
            BoundId::LowerEll => "LOWER_ELL",
            BoundId::UpperK => "UPPER_K",
            BoundId::UpperNDelta => "UPPER_NDELTA",
            BoundId::GaSimple => "GA_SIMPLE",
            BoundId::GaM2 => "GA_M2",
            BoundId::M1F => "M1_F",
            BoundId::Claim1 => "CLAIM1",
            BoundId::RemarkOrder => "REMARK_ORDER",
        }
    }

    pub fn arithmetic(self) -> Arithmetic {
        match self {
            BoundId::GaSimple | BoundId::GaM2 | BoundId::RemarkOrder => Arithmetic::Approximate,
            _ => Arithmetic::Exact,
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Domain(format!("unknown bound id {s:?}")))
    }
}

/// Parses `all` or a comma-separated list of bound ids.
pub fn parse_bound_list(s: &str) -> Result<Vec<BoundId>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(BoundId::ALL.to_vec());
    }
    let mut ids = s.split(',').map(str::parse).collect::<Result<Vec<BoundId>>>()?;
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arithmetic {
    Exact,
    Approximate,
}

/// How the two sides are claimed to compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `lhs >= rhs`
    AtLeast,
    /// `lhs <= rhs`
    AtMost,
    /// `lhs > rhs`; under tolerance this holds like `AtLeast`, and a margin
    /// inside the tolerance band is flagged through `equality`.
    Above,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Exact(Rational),
    Approx(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => r.to_f64(),
            Value::Approx(x) => *x,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Approx(x) => write!(f, "{x:.12}"),
        }
    }
}

/// Graph parameters a bound was evaluated with.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundContext {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<Degree>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_degree: Option<Degree>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<DegreePair>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub relation: Relation,
    pub lhs: Value,
    pub rhs: Value,
    pub holds: bool,
    pub equality: bool,
    pub arithmetic: Arithmetic,
    pub context: BoundContext,
}

/// `|lhs - rhs| <= GA_TOLERANCE * max(1, |rhs|)`.
pub fn approx_equal(lhs: f64, rhs: f64) -> bool {
    (lhs - rhs).abs() <= approx_band(rhs)
}

fn approx_band(rhs: f64) -> f64 {
    GA_TOLERANCE * rhs.abs().max(1.0)
}

impl BoundReport {
    fn exact(bound_id: BoundId, relation: Relation, lhs: Rational, rhs: Rational, context: BoundContext) -> Self {
        let holds = match relation {
            Relation::AtLeast => lhs >= rhs,
            Relation::AtMost => lhs <= rhs,
            Relation::Above => lhs > rhs,
        };
        let equality = lhs == rhs && relation != Relation::Above;
        BoundReport {
            bound_id,
            relation,
            lhs: Value::Exact(lhs),
            rhs: Value::Exact(rhs),
            holds,
            equality,
            arithmetic: Arithmetic::Exact,
            context,
        }
    }

    fn approx(bound_id: BoundId, relation: Relation, lhs: f64, rhs: f64, context: BoundContext) -> Self {
        let band = approx_band(rhs);
        let holds = match relation {
            Relation::AtLeast | Relation::Above => lhs >= rhs - band,
            Relation::AtMost => lhs <= rhs + band,
        };
        BoundReport {
            bound_id,
            relation,
            lhs: Value::Approx(lhs),
            rhs: Value::Approx(rhs),
            holds,
            equality: approx_equal(lhs, rhs),
            arithmetic: Arithmetic::Approximate,
            context,
        }
    }

    /// `lhs - rhs` as a float, for margin reporting.
    pub fn margin(&self) -> f64 {
        self.lhs.to_f64() - self.rhs.to_f64()
    }
}

fn r(num: u64, den: u64) -> Rational {
    Rational::new(num, den)
}

/// `Δδ / (Δ² + δ²)`, the smallest edge term any graph with these degree
/// extremes can have.
pub fn edge_min_term(max_degree: Degree, min_degree: Degree) -> Result<Rational> {
    if min_degree < 1 || min_degree > max_degree {
        return Err(Error::Domain(format!("need 1 <= δ <= Δ, got Δ = {max_degree}, δ = {min_degree}")));
    }
    let (a, b) = (max_degree as u64, min_degree as u64);
    Ok(r(a * b, a * a + b * b))
}

/// `(Δ-1)δ / ((Δ-1)² + δ²)`, the smallest term among edges whose degree
/// pair is not `(Δ, δ)`. Also defined for `δ = Δ` so that regular graphs can
/// be fed through the ℓ-bound unchanged.
pub fn edge_second_min_term(max_degree: Degree, min_degree: Degree) -> Result<Rational> {
    if max_degree < 2 {
        return Err(Error::Domain(format!("need Δ >= 2, got {max_degree}")));
    }
    if min_degree < 1 || min_degree > max_degree {
        return Err(Error::Domain(format!("need 1 <= δ <= Δ, got Δ = {max_degree}, δ = {min_degree}")));
    }
    let (a, b) = (max_degree as u64 - 1, min_degree as u64);
    Ok(r(a * b, a * a + b * b))
}

/// Checks `(Δ-1)δ/((Δ-1)²+δ²) <= Δ(δ+1)/(Δ²+(δ+1)²)` and, when `Δ >= δ+2`,
/// also `Δ(δ+1)/(Δ²+(δ+1)²) <= (Δ-1)(δ+1)/((Δ-1)²+(δ+1)²)`.
pub fn claim1_chain(max_degree: Degree, min_degree: Degree) -> Result<bool> {
    if min_degree < 1 || max_degree < min_degree + 1 {
        return Err(Error::Domain(format!("need Δ >= δ + 1 >= 2, got Δ = {max_degree}, δ = {min_degree}")));
    }
    let (left, middle, right) = claim1_terms(max_degree, min_degree);
    let left_ok = left <= middle;
    let right_ok = max_degree < min_degree + 2 || middle <= right;
    Ok(left_ok && right_ok)
}

fn claim1_terms(max_degree: Degree, min_degree: Degree) -> (Rational, Rational, Rational) {
    let (d, s) = (max_degree as u64, min_degree as u64);
    let term = |a: u64, b: u64| r(a * b, a * a + b * b);
    (term(d - 1, s), term(d, s + 1), term(d - 1, s + 1))
}

/// `(n-2) / ((n-2)² + 1)`.
fn tree_threshold(n: usize) -> Rational {
    let t = n as u64 - 2;
    r(t, t * t + 1)
}

/// Edge term of a tree edge against `(n-2)/((n-2)²+1)`. The report only
/// holds if the strict comparison `(n-2)/((n-2)²+1) > (n-1)/((n-1)²+1)` holds
/// as well.
pub fn tree_edge_lower(n: usize, di: Degree, dj: Degree) -> Result<BoundReport> {
    if n <= 3 {
        return Err(Error::Domain(format!("tree edge bound needs n >= 4, got {n}")));
    }
    let pair = DegreePair::new(di, dj);
    if pair.lo < 1 || pair.hi as usize > n - 1 {
        return Err(Error::Domain(format!("degrees ({di}, {dj}) impossible in a tree of order {n}")));
    }
    if pair == DegreePair::new(n as Degree - 1, 1) {
        return Err(Error::Domain(format!("edge pair ({}, 1) is excluded", n - 1)));
    }
    let context = BoundContext { n: Some(n), m: Some(n - 1), edge: Some(pair), ..Default::default() };
    Ok(tree_report(n, isdd_term(pair), context))
}

fn tree_report(n: usize, lhs: Rational, context: BoundContext) -> BoundReport {
    let rhs = tree_threshold(n);
    let t = n as u64 - 1;
    let strict = rhs > r(t, t * t + 1);
    let mut report = BoundReport::exact(BoundId::TreeEdge, Relation::AtLeast, lhs, rhs, context);
    report.holds &= strict;
    report
}

fn isdd_term(p: DegreePair) -> Rational {
    let (a, b) = (p.hi as u64, p.lo as u64);
    r(a * b, a * a + b * b)
}

/// A graph with everything the bound evaluators read precomputed once.
#[derive(Debug, Clone)]
pub struct BoundInput {
    pub profile: EdgeProfile,
    pub isdd: Rational,
    pub m1: u64,
    pub m2: u64,
    pub forgotten: u64,
    pub ga: f64,
    pub connected: bool,
}

impl BoundInput {
    pub fn new(g: &Graph) -> Self {
        let profile = EdgeProfile::new(g);
        Self::from_profile(profile, g.order() > 0 && is_connected(g).unwrap_or(false))
    }

    pub(crate) fn from_profile(profile: EdgeProfile, connected: bool) -> Self {
        BoundInput {
            isdd: profile.isdd(),
            m1: profile.zagreb1(),
            m2: profile.zagreb2(),
            forgotten: profile.forgotten(),
            ga: profile.geometric_arithmetic(),
            connected,
            profile,
        }
    }

    fn m(&self) -> usize {
        self.profile.size
    }

    fn extremes(&self) -> (Degree, Degree) {
        (self.profile.max_degree().unwrap_or(0), self.profile.min_degree().unwrap_or(0))
    }

    fn context(&self) -> BoundContext {
        let (max_degree, min_degree) = self.extremes();
        BoundContext {
            n: Some(self.profile.order),
            m: Some(self.m()),
            max_degree: Some(max_degree),
            min_degree: Some(min_degree),
            ell: Some(self.profile.count(max_degree, min_degree)),
            k: Some(self.profile.equal_degree_count()),
            edge: None,
        }
    }

    fn require_edges(&self) -> Result<()> {
        if self.m() == 0 {
            Err(Error::Edgeless)
        } else {
            Ok(())
        }
    }

    fn require_min_degree(&self) -> Result<()> {
        self.require_edges()?;
        if self.extremes().1 == 0 {
            Err(Error::IsolatedVertex)
        } else {
            Ok(())
        }
    }

    /// The eligible degree pair with the smallest edge term, and that term.
    fn worst_edge(&self, eligible: impl Fn(DegreePair) -> bool) -> Option<(DegreePair, Rational)> {
        self.profile
            .pairs
            .iter()
            .filter(|&&(p, _)| eligible(p))
            .map(|&(p, _)| (p, isdd_term(p)))
            .min_by(|a, b| a.1.cmp(&b.1))
    }

    /// Smallest edge term against `Δδ/(Δ²+δ²)`.
    pub fn edge_min(&self) -> Result<BoundReport> {
        self.require_min_degree()?;
        let (d, s) = self.extremes();
        let (edge, lhs) = self.worst_edge(|_| true).expect("m >= 1");
        Ok(BoundReport::exact(
            BoundId::EdgeMin,
            Relation::AtLeast,
            lhs,
            edge_min_term(d, s)?,
            BoundContext { edge: Some(edge), ..self.context() },
        ))
    }

    /// Smallest term among edges other than `(Δ, δ)` against the second
    /// minimum.
    pub fn edge_second_min(&self) -> Result<BoundReport> {
        self.require_min_degree()?;
        let (d, s) = self.extremes();
        let extreme = DegreePair::new(d, s);
        let (edge, lhs) = self
            .worst_edge(|p| p != extreme)
            .ok_or_else(|| Error::Domain("every edge has degree pair (Δ, δ)".into()))?;
        Ok(BoundReport::exact(
            BoundId::EdgeSecondMin,
            Relation::AtLeast,
            lhs,
            edge_second_min_term(d, s)?,
            BoundContext { edge: Some(edge), ..self.context() },
        ))
    }

    /// Smallest eligible edge term of a tree against `(n-2)/((n-2)²+1)`.
    pub fn tree_edge(&self) -> Result<BoundReport> {
        self.require_edges()?;
        let n = self.profile.order;
        if !self.connected || self.m() + 1 != n {
            return Err(Error::Domain("graph is not a tree".into()));
        }
        if n <= 3 {
            return Err(Error::Domain(format!("tree edge bound needs n >= 4, got {n}")));
        }
        let excluded = DegreePair::new(n as Degree - 1, 1);
        let (edge, lhs) =
            self.worst_edge(|p| p != excluded).ok_or_else(|| Error::Domain("star: every edge is excluded".into()))?;
        Ok(tree_report(n, lhs, BoundContext { edge: Some(edge), ..self.context() }))
    }

    /// `ISDD >= Δδ/(Δ²+δ²)·ℓ + (Δ-1)δ/((Δ-1)²+δ²)·(m-ℓ)`.
    pub fn lower_ell(&self) -> Result<BoundReport> {
        self.require_min_degree()?;
        let (d, s) = self.extremes();
        let m = self.m() as u64;
        let ell = self.profile.count(d, s);
        let mut rhs = edge_min_term(d, s)? * Rational::from(ell);
        if d >= 2 {
            rhs += edge_second_min_term(d, s)? * Rational::from(m - ell);
        } else {
            debug_assert_eq!(ell, m);
        }
        Ok(BoundReport::exact(BoundId::LowerEll, Relation::AtLeast, self.isdd.clone(), rhs, self.context()))
    }

    fn upper_coefficient(&self) -> Rational {
        let d = self.extremes().0 as u64;
        if d == 0 {
            return Rational::zero();
        }
        r(d * (d - 1), d * d + (d - 1) * (d - 1))
    }

    /// `ISDD <= k/2 + Δ(Δ-1)/(Δ²+(Δ-1)²)·(m-k)`.
    pub fn upper_k(&self) -> Result<BoundReport> {
        self.require_edges()?;
        let m = self.m() as u64;
        let k = self.profile.equal_degree_count();
        if k < m && self.extremes().0 < 2 {
            return Err(Error::Domain("unequal-degree edge with Δ < 2".into()));
        }
        let rhs = Rational::new(k, 2) + self.upper_coefficient() * Rational::from(m - k);
        Ok(BoundReport::exact(BoundId::UpperK, Relation::AtMost, self.isdd.clone(), rhs, self.context()))
    }

    /// `ISDD <= k/2 + Δ(Δ-1)/(Δ²+(Δ-1)²)·(nΔ/2 - k)`.
    pub fn upper_n_delta(&self) -> Result<BoundReport> {
        self.require_edges()?;
        let (d, _) = self.extremes();
        let k = self.profile.equal_degree_count();
        let half_n_delta = Rational::new(self.profile.order as u64 * d as u64, 2);
        let rhs = Rational::new(k, 2) + self.upper_coefficient() * (half_n_delta - Rational::from(k));
        Ok(BoundReport::exact(BoundId::UpperNDelta, Relation::AtMost, self.isdd.clone(), rhs, self.context()))
    }

    /// `ISDD >= GA²/(4m)`.
    pub fn ga_simple(&self) -> Result<BoundReport> {
        self.require_edges()?;
        let rhs = self.ga * self.ga / (4.0 * self.m() as f64);
        Ok(BoundReport::approx(BoundId::GaSimple, Relation::AtLeast, self.isdd.to_f64(), rhs, self.context()))
    }

    /// `Δ²GA² / (4mΔ² - 2M2)`; the denominator is positive since `M2 <= mΔ²`.
    fn ga_m2_value(&self) -> f64 {
        let d2 = (self.extremes().0 as f64).powi(2);
        let den = 4.0 * self.m() as f64 * d2 - 2.0 * self.m2 as f64;
        d2 * self.ga * self.ga / den
    }

    /// `ISDD >= Δ²GA² / (4mΔ² - 2M2)`.
    pub fn ga_m2(&self) -> Result<BoundReport> {
        self.require_edges()?;
        Ok(BoundReport::approx(
            BoundId::GaM2,
            Relation::AtLeast,
            self.isdd.to_f64(),
            self.ga_m2_value(),
            self.context(),
        ))
    }

    /// `Δ²GA² / (4mΔ² - 2M2) > GA²/(4m)`.
    pub fn remark_order(&self) -> Result<BoundReport> {
        self.require_edges()?;
        let simple = self.ga * self.ga / (4.0 * self.m() as f64);
        Ok(BoundReport::approx(BoundId::RemarkOrder, Relation::Above, self.ga_m2_value(), simple, self.context()))
    }

    /// `ISDD >= M1²/(2F) - m/2`.
    pub fn m1_f(&self) -> Result<BoundReport> {
        self.require_edges()?;
        let m1 = Rational::from(self.m1);
        let rhs = m1.square() / Rational::from(2 * self.forgotten) - Rational::new(self.m() as u64, 2);
        Ok(BoundReport::exact(BoundId::M1F, Relation::AtLeast, self.isdd.clone(), rhs, self.context()))
    }

    /// The two outer terms of the CLAIM1 chain for this graph's `(Δ, δ)`;
    /// holds iff the whole chain does.
    pub fn claim1(&self) -> Result<BoundReport> {
        self.require_min_degree()?;
        let (d, s) = self.extremes();
        let holds = claim1_chain(d, s)?;
        let (left, middle, _) = claim1_terms(d, s);
        let mut report = BoundReport::exact(BoundId::Claim1, Relation::AtMost, left, middle, self.context());
        report.holds &= holds;
        Ok(report)
    }

    pub fn evaluate(&self, id: BoundId) -> Result<BoundReport> {
        match id {
            BoundId::EdgeMin => self.edge_min(),
            BoundId::EdgeSecondMin => self.edge_second_min(),
            BoundId::TreeEdge => self.tree_edge(),
            BoundId::LowerEll => self.lower_ell(),
            BoundId::UpperK => self.upper_k(),
            BoundId::UpperNDelta => self.upper_n_delta(),
            BoundId::GaSimple => self.ga_simple(),
            BoundId::GaM2 => self.ga_m2(),
            BoundId::M1F => self.m1_f(),
            BoundId::Claim1 => self.claim1(),
            BoundId::RemarkOrder => self.remark_order(),
        }
    }
}

pub fn lower_bound_ell(g: &Graph) -> Result<BoundReport> {
    BoundInput::new(g).lower_ell()
}

pub fn upper_bound_k(g: &Graph) -> Result<BoundReport> {
    BoundInput::new(g).upper_k()
}

pub fn upper_bound_n_delta(g: &Graph) -> Result<BoundReport> {
    BoundInput::new(g).upper_n_delta()
}

pub fn ga_lower_simple(g: &Graph) -> Result<BoundReport> {
    BoundInput::new(g).ga_simple()
}

pub fn ga_m2_lower(g: &Graph) -> Result<BoundReport> {
    BoundInput::new(g).ga_m2()
}

pub fn remark_ordering(g: &Graph) -> Result<BoundReport> {
    BoundInput::new(g).remark_order()
}

pub fn m1_f_lower(g: &Graph) -> Result<BoundReport> {
    BoundInput::new(g).m1_f()
}

/// A bound either evaluated or skipped because its preconditions fail.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum BoundOutcome {
    Evaluated(BoundReport),
    Skipped { bound_id: BoundId, reason: String },
}

impl BoundOutcome {
    pub fn bound_id(&self) -> BoundId {
        match self {
            BoundOutcome::Evaluated(r) => r.bound_id,
            BoundOutcome::Skipped { bound_id, .. } => *bound_id,
        }
    }

    pub fn report(&self) -> Option<&BoundReport> {
        match self {
            BoundOutcome::Evaluated(r) => Some(r),
            BoundOutcome::Skipped { .. } => None,
        }
    }
}

impl BoundInput {
    /// Evaluates `ids` in `BoundId` order.
    pub fn evaluate_many(&self, ids: &[BoundId]) -> Vec<BoundOutcome> {
        let mut ids = ids.to_vec();
        ids.sort_unstable();
        ids.dedup();
        ids.into_iter()
            .map(|id| match self.evaluate(id) {
                Ok(report) => BoundOutcome::Evaluated(report),
                Err(e) => BoundOutcome::Skipped { bound_id: id, reason: e.to_string() },
            })
            .collect()
    }
}

/// Every bound, in `BoundId` order; inapplicable ones are skipped with a
/// reason.
pub fn evaluate_all(g: &Graph) -> Vec<BoundOutcome> {
    BoundInput::new(g).evaluate_many(&BoundId::ALL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn exact(v: &Value) -> Rational {
        match v {
            Value::Exact(r) => r.clone(),
            Value::Approx(_) => panic!("expected exact value"),
        }
    }

    fn approx(v: &Value) -> f64 {
        match v {
            Value::Approx(x) => *x,
            Value::Exact(_) => panic!("expected approximate value"),
        }
    }

    #[test]
    fn edge_min_values() {
        for d in 1..10 {
            assert_eq!(edge_min_term(d, d).unwrap(), Rational::half());
        }
        assert_eq!(edge_min_term(3, 1).unwrap(), r(3, 10));
        assert_eq!(edge_min_term(18, 6).unwrap(), r(3, 10));
        assert!(edge_min_term(3, 0).is_err());
        assert!(edge_min_term(2, 3).is_err());
    }

    #[test]
    fn edge_second_min_values() {
        assert_eq!(edge_second_min_term(2, 1).unwrap(), Rational::half());
        assert_eq!(edge_second_min_term(4, 2).unwrap(), r(6, 13));
        assert_eq!(edge_second_min_term(4, 1).unwrap(), r(3, 10));
        assert!(edge_second_min_term(1, 1).is_err());
    }

    #[test]
    fn claim1_examples() {
        let (l, mid, rt) = claim1_terms(3, 1);
        assert_eq!((l, mid, rt), (r(2, 5), r(6, 13), Rational::half()));
        assert!(claim1_chain(3, 1).unwrap());
        let (l, mid, _) = claim1_terms(2, 1);
        assert_eq!((l, mid), (Rational::half(), Rational::half()));
        assert!(claim1_chain(2, 1).unwrap());
        let (l, mid, rt) = claim1_terms(5, 2);
        assert_eq!((l, mid, rt), (r(2, 5), r(15, 34), r(12, 25)));
        assert!(claim1_chain(5, 2).unwrap());
        assert!(claim1_chain(2, 2).is_err());
        assert!(claim1_chain(3, 0).is_err());
    }

    #[test]
    fn tree_edge_examples() {
        let rep = tree_edge_lower(4, 2, 1).unwrap();
        assert_eq!(exact(&rep.lhs), r(2, 5));
        assert_eq!(exact(&rep.rhs), r(2, 5));
        assert!(rep.holds && rep.equality);

        let rep = tree_edge_lower(4, 2, 2).unwrap();
        assert_eq!(exact(&rep.lhs), Rational::half());
        assert!(rep.holds && !rep.equality);

        let rep = tree_edge_lower(5, 1, 3).unwrap();
        assert_eq!(exact(&rep.lhs), r(3, 10));
        assert!(rep.holds && rep.equality);

        assert!(tree_edge_lower(4, 3, 1).is_err());
        assert!(tree_edge_lower(3, 1, 1).is_err());
    }

    #[test]
    fn lower_ell_examples() {
        let rep = lower_bound_ell(&cycle(5)).unwrap();
        assert_eq!(exact(&rep.lhs), r(5, 2));
        assert!(rep.equality);

        let rep = lower_bound_ell(&complete_bipartite(2, 3)).unwrap();
        assert_eq!(exact(&rep.rhs), r(36, 13));
        assert_eq!(rep.context.ell, Some(6));
        assert!(rep.equality);

        let rep = lower_bound_ell(&path(4)).unwrap();
        assert_eq!(rep.context.ell, Some(2));
        assert_eq!(exact(&rep.rhs), r(13, 10));
        assert!(rep.equality);

        // perfect matching: Δ = δ = 1
        let rep = lower_bound_ell(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()).unwrap();
        assert!(rep.equality);

        assert_eq!(lower_bound_ell(&Graph::empty(3)), Err(Error::Edgeless));
        assert_eq!(lower_bound_ell(&path(3).with_isolated(1)), Err(Error::IsolatedVertex));
    }

    #[test]
    fn upper_k_examples() {
        let rep = upper_bound_k(&complete(4)).unwrap();
        assert_eq!(rep.context.k, Some(6));
        assert_eq!(exact(&rep.rhs), Rational::from_integer(3));
        assert!(rep.equality);

        let rep = upper_bound_k(&path(4)).unwrap();
        assert_eq!(rep.context.k, Some(1));
        assert_eq!(exact(&rep.rhs), r(13, 10));
        assert!(rep.equality);

        let rep = upper_bound_k(&star(3)).unwrap();
        assert_eq!(exact(&rep.rhs), r(18, 13));
        assert_eq!(exact(&rep.lhs), r(9, 10));
        assert!(rep.holds && !rep.equality);
    }

    #[test]
    fn upper_n_delta_examples() {
        let rep = upper_bound_n_delta(&complete(4)).unwrap();
        assert_eq!(exact(&rep.rhs), Rational::from_integer(3));
        assert!(rep.equality);

        let rep = upper_bound_n_delta(&path(4)).unwrap();
        assert_eq!(exact(&rep.rhs), r(17, 10));
        assert!(rep.holds && !rep.equality);

        let rep = upper_bound_n_delta(&cycle(6)).unwrap();
        assert_eq!(exact(&rep.rhs), Rational::from_integer(3));
        assert!(rep.equality);
    }

    #[test]
    fn ga_simple_examples() {
        let rep = ga_lower_simple(&cycle(5)).unwrap();
        assert_eq!(approx(&rep.lhs), 2.5);
        assert!((approx(&rep.rhs) - 1.25).abs() < 1e-12);
        assert!(rep.holds && !rep.equality);

        let ga = 1.0 + 4.0 * 2f64.sqrt() / 3.0;
        let rep = ga_lower_simple(&path(4)).unwrap();
        assert!((approx(&rep.rhs) - ga * ga / 12.0).abs() < 1e-12);
        assert!((approx(&rep.rhs) - 0.693899).abs() < 1e-6);
        assert!(rep.holds);

        let rep = ga_lower_simple(&complete(2)).unwrap();
        assert_eq!((approx(&rep.lhs), approx(&rep.rhs)), (0.5, 0.25));
    }

    #[test]
    fn ga_m2_examples() {
        for g in [cycle(5), complete(4), cycle(6), complete_bipartite(3, 3)] {
            let rep = ga_m2_lower(&g).unwrap();
            assert!(rep.equality, "{g:?}");
            assert!((approx(&rep.rhs) - g.size() as f64 / 2.0).abs() < 1e-12);
        }
        let rep = ga_m2_lower(&path(4)).unwrap();
        assert!((approx(&rep.rhs) - 1.040848).abs() < 1e-6);
        assert!(rep.holds && !rep.equality);

        let rep = ga_m2_lower(&star(3)).unwrap();
        assert!((approx(&rep.rhs) - 0.675).abs() < 1e-12);
        assert!(rep.holds && !rep.equality);
    }

    #[test]
    fn remark_examples() {
        let rep = remark_ordering(&path(4)).unwrap();
        assert!((approx(&rep.lhs) - 1.040848).abs() < 1e-6);
        assert!((approx(&rep.rhs) - 0.693899).abs() < 1e-6);
        assert!(rep.holds && !rep.equality);

        let rep = remark_ordering(&cycle(5)).unwrap();
        assert!((approx(&rep.lhs) - 2.5).abs() < 1e-12);
        assert!((approx(&rep.rhs) - 1.25).abs() < 1e-12);

        let rep = remark_ordering(&complete(2)).unwrap();
        assert!((approx(&rep.lhs) - 0.5).abs() < 1e-12);
        assert!(rep.margin() > 0.2);
    }

    #[test]
    fn m1_f_examples() {
        let rep = m1_f_lower(&cycle(5)).unwrap();
        assert_eq!(exact(&rep.rhs), r(5, 2));
        assert!(rep.equality);

        let rep = m1_f_lower(&complete_bipartite(2, 3)).unwrap();
        assert_eq!(exact(&rep.rhs), r(36, 13));
        assert!(rep.equality);

        let rep = m1_f_lower(&path(4)).unwrap();
        assert_eq!(exact(&rep.rhs), r(23, 18));
        assert!(rep.holds && !rep.equality);
    }

    #[test]
    fn evaluate_all_is_ordered_and_skips() {
        let out = evaluate_all(&star(3));
        let ids: Vec<_> = out.iter().map(BoundOutcome::bound_id).collect();
        assert_eq!(ids, BoundId::ALL.to_vec());
        for o in &out {
            if let Some(rep) = o.report() {
                assert!(rep.holds, "{rep:?}");
            }
        }
        // the star is a tree whose every edge is the excluded (n-1, 1) pair
        assert!(matches!(out[2], BoundOutcome::Skipped { .. }));

        let out = evaluate_all(&Graph::empty(2));
        assert!(out.iter().all(|o| matches!(o, BoundOutcome::Skipped { .. })));
    }

    #[test]
    fn evaluate_all_examples() {
        let by_id = |g: &Graph| {
            evaluate_all(g)
                .into_iter()
                .filter_map(|o| o.report().cloned())
                .map(|r| (r.bound_id, r))
                .collect::<std::collections::BTreeMap<_, _>>()
        };
        let c5 = by_id(&cycle(5));
        for id in [BoundId::LowerEll, BoundId::UpperK, BoundId::UpperNDelta, BoundId::GaM2, BoundId::M1F] {
            assert!(c5[&id].equality, "{id}");
        }
        assert!(c5.values().all(|r| r.holds));

        let p4 = by_id(&path(4));
        assert!(p4[&BoundId::LowerEll].equality);
        assert!(p4[&BoundId::UpperK].equality);
        assert!(!p4[&BoundId::M1F].equality);
        assert!(p4[&BoundId::TreeEdge].equality);
    }

    #[test]
    fn bound_list_parsing() {
        assert_eq!(parse_bound_list("all").unwrap().len(), 11);
        assert_eq!(parse_bound_list("m1_f,LOWER_ELL").unwrap(), vec![BoundId::LowerEll, BoundId::M1F]);
        assert!(parse_bound_list("LOWER,UPPER").is_err());
        let json = serde_json::to_string(&BoundId::UpperNDelta).unwrap();
        assert_eq!(json, "\"UPPER_NDELTA\"");
    }
}
