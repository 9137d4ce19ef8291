//! Exhaustive verification sweeps.
//!
//! A sweep walks a deterministic stream of graphs, evaluates the selected
//! bounds on each, and records three kinds of findings:
//!
//! * **violations**: a bound that fails (or a graph6 round trip that does not
//!   reproduce the graph). None are expected.
//! * **equality discrepancies**: a connected graph where a bound is tight but
//!   the graph lies outside the claimed equality families, or the reverse.
//!   These are reported, never fatal, and are aggregated per isomorphism
//!   class with an occurrence count.
//! * **tight margins**: strict GA relations whose two sides agree within the
//!   tolerance band.
//!
//! The stream is cut into contiguous chunks that are processed independently
//! and merged with an associative fold; the merged lists are sorted before
//! they are returned, so the report does not depend on the worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::io::BufRead;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bounds::{claim1_chain, edge_min_term, edge_second_min_term, BoundId, BoundInput, BoundOutcome, Value};
use crate::classify::{classify_profile, GraphClassLabel};
use crate::enumerate::canon::{canonical_graph, MAX_CANON_ORDER};
use crate::enumerate::labeled::{graph_from_mask, pair_count, MAX_LABELED_ORDER};
use crate::enumerate::stream::stream_graph6;
use crate::enumerate::trees::{tree_count, tree_from_index, MAX_TREE_ORDER, MIN_TREE_ORDER};
use crate::error::{Error, Result};
use crate::graph::{is_connected, Degree, Graph};
use crate::graph6::{parse_graph6, write_graph6};
use crate::indices::{edge_term_isdd, DegreePair, EdgeProfile};

const CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphSource {
    /// Every edge subset on `n` vertices.
    Labeled,
    /// Every labeled tree, via Prüfer sequences.
    Trees,
    /// Graphs read from a graph6 line stream; the order range filters them.
    Graph6Stream,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub source: GraphSource,
    pub n_min: usize,
    pub n_max: usize,
    pub connected_only: bool,
    /// Check only the canonical representative of each isomorphism class.
    pub dedup: bool,
    pub bounds: Vec<BoundId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_graphs: Option<u64>,
}

impl SweepConfig {
    /// All connected labeled graphs on `n_min..=n_max` vertices, every bound.
    pub fn labeled(n_min: usize, n_max: usize) -> Self {
        SweepConfig {
            source: GraphSource::Labeled,
            n_min,
            n_max,
            connected_only: true,
            dedup: false,
            bounds: BoundId::ALL.to_vec(),
            max_graphs: None,
        }
    }

    /// All labeled trees on `n_min..=n_max` vertices, tree bound only.
    pub fn trees(n_min: usize, n_max: usize) -> Self {
        SweepConfig { source: GraphSource::Trees, bounds: vec![BoundId::TreeEdge], ..Self::labeled(n_min, n_max) }
    }

    pub fn with_bounds(mut self, bounds: &[BoundId]) -> Self {
        self.bounds = bounds.to_vec();
        self.bounds.sort_unstable();
        self.bounds.dedup();
        self
    }

    /// Graphs from a graph6 stream with `n_min..=n_max` vertices.
    pub fn stream(n_min: usize, n_max: usize) -> Self {
        SweepConfig { source: GraphSource::Graph6Stream, ..Self::labeled(n_min, n_max) }
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = match self.source {
            GraphSource::Labeled => (1, MAX_LABELED_ORDER),
            GraphSource::Trees => (MIN_TREE_ORDER, MAX_TREE_ORDER),
            GraphSource::Graph6Stream => (0, crate::graph6::MAX_ORDER),
        };
        if self.n_min < lo || self.n_max > hi || self.n_min > self.n_max {
            return Err(Error::Domain(format!(
                "{:?} sweep needs {lo} <= n_min <= n_max <= {hi}, got {}..={}",
                self.source, self.n_min, self.n_max
            )));
        }
        if self.bounds.is_empty() {
            return Err(Error::Domain("no bounds selected".into()));
        }
        Ok(())
    }
}

/// What a finding refers to: one bound, or one of the structural
/// cross-checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Bound(BoundId),
    /// Constant edge ratio versus regular / semiregular bipartite / Γ3.
    EdgeRatioFamilies,
    /// M1/F equality versus constant edge ratio.
    M1FRatio,
    Graph6RoundTrip,
}

impl Check {
    pub fn as_str(self) -> &'static str {
        match self {
            Check::Bound(id) => id.as_str(),
            Check::EdgeRatioFamilies => "EDGE_RATIO_FAMILIES",
            Check::M1FRatio => "M1_F_RATIO",
            Check::Graph6RoundTrip => "GRAPH6_ROUND_TRIP",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Check {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    /// Position of the graph in the sweep stream (line number for external
    /// streams).
    pub ordinal: u64,
    pub graph6: String,
    pub check: Check,
    pub lhs: Value,
    pub rhs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscrepancyKind {
    /// The bound is tight (or the ratio constant) but no claimed family
    /// contains the graph.
    EqualityWithoutClass,
    /// The graph is in a claimed family but the bound is not tight.
    ClassWithoutEquality,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EqualityDiscrepancy {
    pub check: Check,
    pub kind: DiscrepancyKind,
    /// Canonical representative of the isomorphism class (labeled graph for
    /// orders above the canonical-form limit).
    pub graph6: String,
    pub expected_classes: Vec<String>,
    pub classification: GraphClassLabel,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Labeled graphs in the stream that hit this class.
    pub occurrences: u64,
    pub first_ordinal: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightMargin {
    pub ordinal: u64,
    pub graph6: String,
    pub check: Check,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BoundTally {
    pub evaluated: u64,
    pub held: u64,
    pub equalities: u64,
    pub skipped: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParseErrorRecord {
    pub line: usize,
    pub text: String,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub graphs_seen: u64,
    pub graphs_checked: u64,
    pub bound_tallies: BTreeMap<BoundId, BoundTally>,
    pub violations: Vec<Violation>,
    pub equality_discrepancies: Vec<EqualityDiscrepancy>,
    pub tight_margins: Vec<TightMargin>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parse_errors: Vec<ParseErrorRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_secs: Option<f64>,
}

impl SweepReport {
    pub fn discrepancies_for(&self, check: Check) -> impl Iterator<Item = &EqualityDiscrepancy> {
        self.equality_discrepancies.iter().filter(move |d| d.check == check)
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

type DiscrepancyKey = (Check, DiscrepancyKind, String, Option<String>);

#[derive(Debug, Default)]
struct Accumulator {
    seen: u64,
    checked: u64,
    tallies: BTreeMap<BoundId, BoundTally>,
    violations: Vec<Violation>,
    discrepancies: BTreeMap<DiscrepancyKey, EqualityDiscrepancy>,
    tight: Vec<TightMargin>,
}

impl Accumulator {
    fn merge(mut self, other: Accumulator) -> Accumulator {
        self.seen += other.seen;
        self.checked += other.checked;
        for (id, t) in other.tallies {
            let mine = self.tallies.entry(id).or_default();
            mine.evaluated += t.evaluated;
            mine.held += t.held;
            mine.equalities += t.equalities;
            mine.skipped += t.skipped;
        }
        self.violations.extend(other.violations);
        for (key, d) in other.discrepancies {
            match self.discrepancies.get_mut(&key) {
                Some(mine) => {
                    mine.occurrences += d.occurrences;
                    mine.first_ordinal = mine.first_ordinal.min(d.first_ordinal);
                }
                None => {
                    self.discrepancies.insert(key, d);
                }
            }
        }
        self.tight.extend(other.tight);
        self
    }

    fn finish(mut self, config: SweepConfig, parse_errors: Vec<ParseErrorRecord>) -> SweepReport {
        self.violations.sort_by(|a, b| (a.ordinal, a.check, &a.detail).cmp(&(b.ordinal, b.check, &b.detail)));
        self.tight.sort_by_key(|t| (t.ordinal, t.check));
        SweepReport {
            config,
            graphs_seen: self.seen,
            graphs_checked: self.checked,
            bound_tallies: self.tallies,
            violations: self.violations,
            equality_discrepancies: self.discrepancies.into_values().collect(),
            tight_margins: self.tight,
            parse_errors,
            wall_time_secs: None,
        }
    }
}

/// Per-graph state shared by the individual checks.
struct Subject<'a> {
    ordinal: u64,
    graph: &'a Graph,
    input: BoundInput,
    label: Option<GraphClassLabel>,
}

impl Subject<'_> {
    fn graph6(&self) -> String {
        write_graph6(self.graph).expect("swept graphs are small")
    }

    fn class_graph6(&self) -> String {
        if self.graph.order() <= MAX_CANON_ORDER {
            write_graph6(&canonical_graph(self.graph).expect("small graph")).expect("small graph")
        } else {
            self.graph6()
        }
    }

    fn label(&mut self) -> &GraphClassLabel {
        if self.label.is_none() {
            self.label = Some(classify_profile(self.graph, &self.input.profile));
        }
        self.label.as_ref().expect("just set")
    }
}

impl Accumulator {
    fn violation(&mut self, s: &Subject<'_>, check: Check, lhs: Value, rhs: Value, detail: Option<String>) {
        self.violations.push(Violation { ordinal: s.ordinal, graph6: s.graph6(), check, lhs, rhs, detail });
    }

    fn discrepancy(
        &mut self,
        s: &mut Subject<'_>,
        check: Check,
        tight: bool,
        expected: Vec<String>,
        detail: Option<String>,
    ) {
        let kind = if tight { DiscrepancyKind::EqualityWithoutClass } else { DiscrepancyKind::ClassWithoutEquality };
        let graph6 = s.class_graph6();
        let key = (check, kind, graph6.clone(), detail.clone());
        if let Some(d) = self.discrepancies.get_mut(&key) {
            d.occurrences += 1;
            d.first_ordinal = d.first_ordinal.min(s.ordinal);
            return;
        }
        let classification = s.label().clone();
        self.discrepancies.insert(
            key,
            EqualityDiscrepancy {
                check,
                kind,
                graph6,
                expected_classes: expected,
                classification,
                detail,
                occurrences: 1,
                first_ordinal: s.ordinal,
            },
        );
    }
}

/// Families claimed to be exactly the equality cases of `id` on connected
/// graphs, with whether `label` belongs to one of them.
fn claimed_equality(id: BoundId, label: &GraphClassLabel, extremes: (Degree, Degree)) -> Option<(bool, Vec<String>)> {
    let (d, s) = extremes;
    let regular = label.regular.is_some();
    let semi = label.semiregular_bipartite;
    let names = |v: &[String]| v.to_vec();
    match id {
        BoundId::LowerEll => {
            let v = ["regular".to_string(), format!("semiregular_bipartite({d},{s})"), "gamma1".into()];
            Some((regular || semi == Some((d, s)) || label.gamma1, names(&v)))
        }
        BoundId::UpperK => {
            let v =
                ["regular".to_string(), format!("semiregular_bipartite({d},{})", d.saturating_sub(1)), "gamma2".into()];
            let semi_ok = d >= 1 && semi == Some((d, d - 1));
            Some((regular || semi_ok || label.gamma2, names(&v)))
        }
        BoundId::UpperNDelta | BoundId::GaM2 => Some((regular, vec!["regular".into()])),
        BoundId::M1F => {
            let v = ["regular".to_string(), "semiregular_bipartite".into(), "gamma3".into()];
            Some((regular || semi.is_some() || label.gamma3, names(&v)))
        }
        _ => None,
    }
}

fn ratio_families() -> Vec<String> {
    vec!["regular".into(), "semiregular_bipartite".into(), "gamma3".into()]
}

fn check_graph(cfg: &SweepConfig, ordinal: u64, g: &Graph, acc: &mut Accumulator) {
    acc.seen += 1;
    let connected = g.order() > 0 && is_connected(g).unwrap_or(false);
    if cfg.connected_only && !connected {
        return;
    }
    if cfg.dedup && g.order() <= MAX_CANON_ORDER && canonical_graph(g).ok().as_ref() != Some(g) {
        return;
    }
    acc.checked += 1;

    let mut s =
        Subject { ordinal, graph: g, input: BoundInput::from_profile(EdgeProfile::new(g), connected), label: None };
    if connected {
        s.label();
    }

    match write_graph6(g).and_then(|t| parse_graph6(&t)) {
        Ok(back) if back == *g => {}
        _ => {
            let lhs = Value::Approx(0.0);
            acc.violation(&s, Check::Graph6RoundTrip, lhs.clone(), lhs, Some("round trip mismatch".into()));
        }
    }

    let outcomes = s.input.evaluate_many(&cfg.bounds);
    let extremes = (s.input.profile.max_degree().unwrap_or(0), s.input.profile.min_degree().unwrap_or(0));
    let mut m1f_equality = None;
    for outcome in outcomes {
        let id = outcome.bound_id();
        let tally = acc.tallies.entry(id).or_default();
        let rep = match outcome {
            BoundOutcome::Skipped { .. } => {
                tally.skipped += 1;
                continue;
            }
            BoundOutcome::Evaluated(rep) => rep,
        };
        tally.evaluated += 1;
        tally.held += rep.holds as u64;
        tally.equalities += rep.equality as u64;
        if id == BoundId::M1F {
            m1f_equality = Some(rep.equality);
        }
        if !rep.holds {
            acc.violation(&s, Check::Bound(id), rep.lhs.clone(), rep.rhs.clone(), None);
        }
        if matches!(id, BoundId::GaSimple | BoundId::RemarkOrder) && rep.equality {
            acc.tight.push(TightMargin {
                ordinal,
                graph6: s.graph6(),
                check: Check::Bound(id),
                lhs: rep.lhs.to_f64(),
                rhs: rep.rhs.to_f64(),
                margin: rep.margin(),
            });
        }
        if connected {
            let claim = claimed_equality(id, s.label(), extremes);
            if let Some((member, expected)) = claim {
                if member != rep.equality {
                    acc.discrepancy(&mut s, Check::Bound(id), rep.equality, expected, None);
                }
            }
        }
    }

    per_edge_checks(cfg, &mut s, acc);

    if connected && g.size() > 0 {
        let label = s.label();
        let ratio = label.constant_edge_ratio.is_some();
        let member = label.regular.is_some() || label.semiregular_bipartite.is_some() || label.gamma3;
        if ratio != member {
            acc.discrepancy(&mut s, Check::EdgeRatioFamilies, ratio, ratio_families(), None);
        }
        if let Some(eq) = m1f_equality {
            if eq != ratio {
                acc.discrepancy(&mut s, Check::M1FRatio, eq, vec!["constant_edge_ratio".into()], None);
            }
        }
    }
}

/// Every edge against the minimum and second-minimum edge terms, with the
/// stated equality pairs `(Δ, δ)` and `(Δ-1, δ)`.
fn per_edge_checks(cfg: &SweepConfig, s: &mut Subject<'_>, acc: &mut Accumulator) {
    let want_min = cfg.bounds.contains(&BoundId::EdgeMin);
    let want_second = cfg.bounds.contains(&BoundId::EdgeSecondMin);
    if !(want_min || want_second) || s.graph.size() == 0 {
        return;
    }
    let (d, delta) = (s.input.profile.max_degree().unwrap_or(0), s.input.profile.min_degree().unwrap_or(0));
    if delta == 0 {
        return;
    }
    let extreme = DegreePair::new(d, delta);
    let second_pair = DegreePair::new(d.saturating_sub(1), delta);
    let min = edge_min_term(d, delta).expect("1 <= δ <= Δ");
    let second = edge_second_min_term(d, delta).ok();
    let pairs: Vec<DegreePair> = s.input.profile.pairs.iter().map(|&(p, _)| p).collect();
    for p in pairs {
        let term = edge_term_isdd(p.hi, p.lo).expect("δ >= 1");
        let detail = || Some(format!("edge ({},{})", p.hi, p.lo));
        if want_min {
            if term < min {
                acc.violation(
                    s,
                    Check::Bound(BoundId::EdgeMin),
                    Value::Exact(term.clone()),
                    Value::Exact(min.clone()),
                    detail(),
                );
            }
            if (term == min) != (p == extreme) && s.input.connected {
                let expected = vec![format!("edge ({d},{delta})")];
                acc.discrepancy(s, Check::Bound(BoundId::EdgeMin), term == min, expected, detail());
            }
        }
        if let (true, Some(second)) = (want_second, &second) {
            if p == extreme {
                continue;
            }
            if term < *second {
                acc.violation(
                    s,
                    Check::Bound(BoundId::EdgeSecondMin),
                    Value::Exact(term.clone()),
                    Value::Exact(second.clone()),
                    detail(),
                );
            }
            if (term == *second) != (p == second_pair) && s.input.connected {
                let expected = vec![format!("edge ({},{delta})", d - 1)];
                acc.discrepancy(s, Check::Bound(BoundId::EdgeSecondMin), term == *second, expected, detail());
            }
        }
    }
}

/// A contiguous run of stream positions for one order.
#[derive(Debug, Clone, Copy)]
struct Chunk {
    n: usize,
    start: u64,
    end: u64,
    /// Global ordinal of `start`.
    offset: u64,
}

fn plan(cfg: &SweepConfig) -> Vec<Chunk> {
    let mut chunks = Vec::new();
    let mut offset = 0u64;
    let cap = cfg.max_graphs.unwrap_or(u64::MAX);
    for n in cfg.n_min..=cfg.n_max {
        let total = match cfg.source {
            GraphSource::Labeled => 1u64 << pair_count(n),
            GraphSource::Trees => tree_count(n),
            GraphSource::Graph6Stream => 0,
        };
        let mut start = 0;
        while start < total && offset < cap {
            let end = (start + CHUNK).min(total).min(start + (cap - offset));
            chunks.push(Chunk { n, start, end, offset });
            offset += end - start;
            start = end;
        }
    }
    chunks
}

fn run_chunk(cfg: &SweepConfig, c: Chunk) -> Accumulator {
    let mut acc = Accumulator::default();
    for (i, idx) in (c.start..c.end).enumerate() {
        let g = match cfg.source {
            GraphSource::Trees => tree_from_index(c.n, idx),
            _ => graph_from_mask(c.n, idx),
        };
        check_graph(cfg, c.offset + i as u64, &g, &mut acc);
    }
    acc
}

/// Runs a sweep over internally generated graphs on the current rayon pool.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    cfg.validate()?;
    if cfg.source == GraphSource::Graph6Stream {
        return Err(Error::Domain("stream sweeps read their graphs with run_sweep_stream".into()));
    }
    let started = Instant::now();
    let acc = plan(cfg).into_par_iter().map(|c| run_chunk(cfg, c)).reduce(Accumulator::default, Accumulator::merge);
    let mut report = acc.finish(cfg.clone(), Vec::new());
    report.wall_time_secs = Some(started.elapsed().as_secs_f64());
    Ok(report)
}

/// Runs a sweep over graphs given by the caller, tagged with their ordinals.
/// Graphs outside the config's order range are counted as seen but not
/// checked; the config's source is not consulted.
pub fn run_sweep_graphs(cfg: &SweepConfig, graphs: &[(u64, Graph)]) -> Result<SweepReport> {
    if cfg.bounds.is_empty() {
        return Err(Error::Domain("no bounds selected".into()));
    }
    if cfg.n_min > cfg.n_max {
        return Err(Error::Domain(format!("empty order range {}..={}", cfg.n_min, cfg.n_max)));
    }
    let started = Instant::now();
    let cap = cfg.max_graphs.map_or(graphs.len(), |c| graphs.len().min(c as usize));
    let acc = graphs[..cap]
        .par_chunks(CHUNK as usize)
        .map(|chunk| {
            let mut acc = Accumulator::default();
            for (ordinal, g) in chunk {
                if (cfg.n_min..=cfg.n_max).contains(&g.order()) {
                    check_graph(cfg, *ordinal, g, &mut acc);
                } else {
                    acc.seen += 1;
                }
            }
            acc
        })
        .reduce(Accumulator::default, Accumulator::merge);
    let mut report = acc.finish(cfg.clone(), Vec::new());
    report.wall_time_secs = Some(started.elapsed().as_secs_f64());
    Ok(report)
}

/// Sweeps a graph6 line stream. Ordinals are line numbers; unparsable lines
/// are listed in `parse_errors`.
pub fn run_sweep_stream<R: BufRead>(cfg: &SweepConfig, reader: R) -> Result<SweepReport> {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for item in stream_graph6(reader) {
        match item {
            Ok(sg) => graphs.push((sg.line as u64, sg.graph)),
            Err(e) => errors.push(ParseErrorRecord { line: e.line, text: e.text, error: e.error.to_string() }),
        }
    }
    let mut report = run_sweep_graphs(cfg, &graphs)?;
    report.parse_errors = errors;
    Ok(report)
}

/// `(Δ, δ)` pairs with `1 <= δ < Δ <= limit` where the CLAIM1 chain fails.
pub fn claim1_failures(limit: Degree) -> Vec<(Degree, Degree)> {
    (2..=limit)
        .into_par_iter()
        .flat_map_iter(|d| (1..d).map(move |s| (d, s)))
        .filter(|&(d, s)| !claim1_chain(d, s).expect("in domain"))
        .collect()
}
