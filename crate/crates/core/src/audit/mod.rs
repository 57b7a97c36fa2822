//! Differential testing of the closed forms and bounds against the
//! exhaustive oracle.
//!
//! Every audit sweeps a parameter domain and produces an [`AuditReport`]:
//! one [`AuditRecord`] per point, sorted by point. A failed comparison is
//! recorded as a `violation`, never raised. Violations that the oracle has
//! already established as discrepancies in the published statements are
//! listed in [`KNOWN_FINDINGS`], so a caller can tell a confirmed finding
//! from a regression with [`AuditReport::unexpected_violations`].

mod bound;
mod checks;
mod formula;
mod known;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bounds::Direction;
use crate::domination::Sweep;

pub use bound::path_vs_cycle_points;
pub use checks::{
    all_labeled_graphs, hypercube_validity, random_graph, GraphSource, LlanoResolution,
    ReadingOutcome,
};
pub use known::{known_finding, KnownFinding, KNOWN_FINDINGS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    LowerBoundHolds,
    UpperBoundHolds,
    Sharp,
    Violation,
}

impl Verdict {
    pub const ALL: [Verdict; 5] = [
        Verdict::Match,
        Verdict::LowerBoundHolds,
        Verdict::UpperBoundHolds,
        Verdict::Sharp,
        Verdict::Violation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::LowerBoundHolds => "lower_bound_holds",
            Verdict::UpperBoundHolds => "upper_bound_holds",
            Verdict::Sharp => "sharp",
            Verdict::Violation => "violation",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.collect_str(v),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|s| s.parse().map_err(D::Error::custom))
                .transpose()
        }
    }
}

/// One compared point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub subject: String,
    pub point: Vec<i64>,
    #[serde(with = "decimal")]
    pub printed_value: BigInt,
    #[serde(with = "decimal")]
    pub oracle_value: BigInt,
    pub verdict: Verdict,
    /// `oracle - bound`; only set for bound comparisons.
    #[serde(with = "decimal::option")]
    pub slack: Option<BigInt>,
}

impl AuditRecord {
    /// Equality claim: `match` or `violation`.
    pub fn equality(subject: &str, point: Vec<i64>, printed: BigInt, oracle: BigInt) -> Self {
        let verdict = if printed == oracle {
            Verdict::Match
        } else {
            Verdict::Violation
        };
        AuditRecord {
            subject: subject.to_string(),
            point,
            printed_value: printed,
            oracle_value: oracle,
            verdict,
            slack: None,
        }
    }

    /// Inequality claim in the given direction; `sharp` when it is tight.
    pub fn bound(
        subject: &str,
        point: Vec<i64>,
        direction: Direction,
        bound: BigInt,
        oracle: BigInt,
    ) -> Self {
        let slack = &oracle - &bound;
        let holds = match direction {
            Direction::Lower => slack >= BigInt::zero(),
            Direction::Upper => slack <= BigInt::zero(),
        };
        let verdict = match (holds, slack.is_zero(), direction) {
            (false, _, _) => Verdict::Violation,
            (true, true, _) => Verdict::Sharp,
            (true, false, Direction::Lower) => Verdict::LowerBoundHolds,
            (true, false, Direction::Upper) => Verdict::UpperBoundHolds,
        };
        AuditRecord {
            subject: subject.to_string(),
            point,
            printed_value: bound,
            oracle_value: oracle,
            verdict,
            slack: Some(slack),
        }
    }

    pub fn known_finding(&self) -> Option<&'static KnownFinding> {
        if self.verdict == Verdict::Violation {
            known_finding(&self.subject, &self.point)
        } else {
            None
        }
    }
}

/// A registered finding together with the points where this run hit it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindingHit {
    pub id: String,
    pub description: String,
    pub points: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub subject: String,
    pub domain: String,
    pub parameters: Vec<String>,
    pub records: Vec<AuditRecord>,
    /// Record counts for every verdict, zeros included.
    pub summary: BTreeMap<Verdict, usize>,
    pub first_violation: Option<Vec<i64>>,
    pub known_findings: Vec<FindingHit>,
    /// Free-form facts about the sweep: skipped points, labels, resolutions.
    pub notes: Vec<String>,
}

impl AuditReport {
    /// Sorts the records by `(point, subject)` and derives the summary.
    pub fn assemble(
        subject: impl Into<String>,
        domain: impl Into<String>,
        parameters: &[&str],
        mut records: Vec<AuditRecord>,
        notes: Vec<String>,
    ) -> Self {
        records.sort_by(|a, b| {
            a.point
                .cmp(&b.point)
                .then_with(|| a.subject.cmp(&b.subject))
        });
        let mut summary: BTreeMap<Verdict, usize> = Verdict::ALL.iter().map(|&v| (v, 0)).collect();
        for r in &records {
            *summary.get_mut(&r.verdict).expect("all verdicts present") += 1;
        }
        let first_violation = records
            .iter()
            .find(|r| r.verdict == Verdict::Violation)
            .map(|r| r.point.clone());
        let mut hits: BTreeMap<&'static str, FindingHit> = BTreeMap::new();
        for r in &records {
            if let Some(k) = r.known_finding() {
                hits.entry(k.id)
                    .or_insert_with(|| FindingHit {
                        id: k.id.to_string(),
                        description: k.description.to_string(),
                        points: Vec::new(),
                    })
                    .points
                    .push(r.point.clone());
            }
        }
        AuditReport {
            subject: subject.into(),
            domain: domain.into(),
            parameters: parameters.iter().map(|p| p.to_string()).collect(),
            records,
            summary,
            first_violation,
            known_findings: hits.into_values().collect(),
            notes,
        }
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.summary.get(&verdict).copied().unwrap_or(0)
    }

    pub fn violations(&self) -> impl Iterator<Item = &AuditRecord> {
        self.records
            .iter()
            .filter(|r| r.verdict == Verdict::Violation)
    }

    /// Violations not covered by [`KNOWN_FINDINGS`].
    pub fn unexpected_violations(&self) -> Vec<&AuditRecord> {
        self.violations()
            .filter(|r| r.known_finding().is_none())
            .collect()
    }

    pub fn sharp_points(&self) -> Vec<&[i64]> {
        self.records
            .iter()
            .filter(|r| r.verdict == Verdict::Sharp)
            .map(|r| r.point.as_slice())
            .collect()
    }

    pub fn record_at(&self, point: &[i64]) -> Option<&AuditRecord> {
        self.records.iter().find(|r| r.point == point)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Several reports merged under one subject, e.g. for `--formula` lists.
    pub fn merge(
        subject: impl Into<String>,
        domain: impl Into<String>,
        reports: Vec<AuditReport>,
    ) -> Self {
        let mut params = Vec::new();
        let mut records = Vec::new();
        let mut notes = Vec::new();
        for r in reports {
            if params.is_empty() {
                params = r.parameters.clone();
            }
            records.extend(r.records);
            notes.extend(r.notes);
        }
        let params: Vec<&str> = params.iter().map(String::as_str).collect();
        AuditReport::assemble(subject, domain, &params, records, notes)
    }
}

/// Oracle settings shared by all audits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Auditor {
    pub sweep: Sweep,
}

impl Auditor {
    pub fn new(sweep: Sweep) -> Self {
        Auditor { sweep }
    }
}

fn describe(range: &RangeInclusive<usize>, name: &str) -> String {
    format!("{name} = {}..={}", range.start(), range.end())
}

fn big(c: &crate::count::Count) -> BigInt {
    c.to_bigint()
}

fn ipoint(values: &[usize]) -> Vec<i64> {
    values.iter().map(|&v| v as i64).collect()
}

use crate::bounds::BoundId;
use crate::closed_forms::FormulaId;
use crate::error::Result;

/// `audit_formula` with the default sweep.
pub fn audit_formula(id: FormulaId, range: RangeInclusive<usize>) -> Result<AuditReport> {
    Auditor::default().formula(id, range)
}

/// `audit_bound` with the default sweep.
pub fn audit_bound(id: BoundId, range: RangeInclusive<usize>) -> Result<AuditReport> {
    Auditor::default().bound(id, range)
}

pub fn audit_threshold_equality(source: &GraphSource) -> Result<AuditReport> {
    Auditor::default().threshold_equality(source)
}

pub fn audit_cycle_consecutive(range: RangeInclusive<usize>) -> Result<AuditReport> {
    Auditor::default().cycle_consecutive(range)
}

pub fn audit_path_vs_cycle(range: RangeInclusive<usize>) -> Result<AuditReport> {
    Auditor::default().path_vs_cycle(range)
}

pub fn resolve_llano_cycle_interpretation(range: RangeInclusive<usize>) -> Result<LlanoResolution> {
    Auditor::default().llano_cycle_resolution(range)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_follow_direction() {
        let b = |d, bound: i64, oracle: i64| {
            AuditRecord::bound("x", vec![], d, BigInt::from(bound), BigInt::from(oracle)).verdict
        };
        assert_eq!(b(Direction::Lower, 3, 5), Verdict::LowerBoundHolds);
        assert_eq!(b(Direction::Lower, 5, 5), Verdict::Sharp);
        assert_eq!(b(Direction::Lower, 6, 5), Verdict::Violation);
        assert_eq!(b(Direction::Upper, 6, 5), Verdict::UpperBoundHolds);
        assert_eq!(b(Direction::Upper, 4, 5), Verdict::Violation);
    }

    #[test]
    fn assemble_sorts_and_tallies() {
        let recs = vec![
            AuditRecord::equality("a", vec![2, 1], 1.into(), 1.into()),
            AuditRecord::equality("a", vec![1, 5], 1.into(), 2.into()),
            AuditRecord::equality("a", vec![1, 2], 0.into(), 0.into()),
        ];
        let r = AuditReport::assemble("a", "n = 1..=2", &["n", "i"], recs, vec![]);
        assert_eq!(r.records[0].point, vec![1, 2]);
        assert_eq!(r.count(Verdict::Match), 2);
        assert_eq!(r.count(Verdict::Violation), 1);
        assert_eq!(r.count(Verdict::Sharp), 0);
        assert_eq!(r.first_violation, Some(vec![1, 5]));
        assert_eq!(r.unexpected_violations().len(), 1);
    }

    #[test]
    fn json_fields_and_decimal_strings() {
        let rec = AuditRecord::bound(
            "path_upper",
            vec![7, 4],
            Direction::Upper,
            BigInt::from(22),
            BigInt::from(22),
        );
        let v: serde_json::Value = serde_json::to_value(&rec).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            [
                "oracle_value",
                "point",
                "printed_value",
                "slack",
                "subject",
                "verdict"
            ]
        );
        assert_eq!(v["printed_value"], "22");
        assert_eq!(v["slack"], "0");
        assert_eq!(v["verdict"], "sharp");
        let back: AuditRecord = serde_json::from_value(v).unwrap();
        assert_eq!(back, rec);
    }
}
