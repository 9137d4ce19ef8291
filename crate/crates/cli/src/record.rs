use std::fmt::Write as _;

use isdd_lab::bounds::Relation;
use isdd_lab::{BoundOutcome, GraphClassLabel, IndexVector, Rational};
use serde::Serialize;

/// The index vector as emitted: rationals as `p/q`, GA with nine decimals.
#[derive(Debug, Serialize)]
pub struct IndexRecord {
    pub isdd: Rational,
    pub sdd: Rational,
    pub m1: u64,
    pub m2: u64,
    pub forgotten: u64,
    pub ga: String,
}

impl From<&IndexVector> for IndexRecord {
    fn from(v: &IndexVector) -> Self {
        IndexRecord {
            isdd: v.isdd.clone(),
            sdd: v.sdd.clone(),
            m1: v.m1,
            m2: v.m2,
            forgotten: v.forgotten,
            ga: format!("{:.9}", v.ga),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassRecord {
    #[serde(flatten)]
    pub label: GraphClassLabel,
    pub memberships: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub input_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index_vector: Option<IndexRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<BoundOutcome>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<ClassRecord>,
}

#[derive(Debug, Serialize)]
pub struct ErrorRecord<'a> {
    pub input_id: &'a str,
    pub error: &'a str,
}

impl OutputRecord {
    pub fn human(&self) -> String {
        let mut out = self.input_id.clone();
        if let Some(v) = &self.index_vector {
            write!(
                out,
                "  isdd={} sdd={} m1={} m2={} forgotten={} ga={}",
                v.isdd, v.sdd, v.m1, v.m2, v.forgotten, v.ga
            )
            .unwrap();
        }
        if let Some(c) = &self.classes {
            let names = if c.memberships.is_empty() { "none".to_string() } else { c.memberships.join(" ") };
            write!(out, "  classes: {names}").unwrap();
        }
        for outcome in self.bounds.iter().flatten() {
            match outcome {
                BoundOutcome::Evaluated(r) => {
                    let op = match r.relation {
                        Relation::AtLeast => ">=",
                        Relation::AtMost => "<=",
                        Relation::Above => ">",
                    };
                    let status = match (r.holds, r.equality) {
                        (false, _) => "VIOLATED",
                        (true, true) => "holds, equality",
                        (true, false) => "holds",
                    };
                    write!(out, "\n  {:<17}{} {op} {}  {status}", r.bound_id.as_str(), r.lhs, r.rhs).unwrap();
                }
                BoundOutcome::Skipped { bound_id, reason } => {
                    write!(out, "\n  {:<17}skipped: {reason}", bound_id.as_str()).unwrap();
                }
            }
        }
        out
    }
}
