use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use super::{big, describe, ipoint, AuditRecord, AuditReport, Auditor};
use crate::bounds::{
    bound_cycle_lower, bound_cycle_recursive, bound_cycle_upper, bound_path_lower,
    bound_path_lower_alt, bound_path_upper, bound_path_vs_cycle, AccurateCounts, BoundId,
    OracleCounts,
};
use crate::error::{Error, Result};
use crate::table::{path_count_table, CountTable, TableFamily};

type Points = Vec<(usize, usize)>;

/// Points checked by the path/cycle comparison: the stated range
/// `⌊n/2⌋ <= i <= n` and, separately, every `1 <= i < ⌊n/2⌋` below it.
pub fn path_vs_cycle_points(n_range: RangeInclusive<usize>) -> (Points, Points) {
    let stated = BoundId::PathVsCycle.stated_points(n_range.clone());
    let below = n_range
        .filter(|&n| n >= 3)
        .flat_map(|n| (1..n / 2).map(move |i| (n, i)))
        .collect();
    (stated, below)
}

fn evaluate(
    id: BoundId,
    n: usize,
    i: usize,
    table: &CountTable,
    oracle: &OracleCounts,
) -> Result<BigInt> {
    Ok(match id {
        BoundId::PathLower => big(&bound_path_lower(n, i, table)?),
        BoundId::PathUpper => big(&bound_path_upper(n, i, table, oracle)?),
        BoundId::PathLowerAlt => bound_path_lower_alt(n, i, table)?,
        BoundId::CycleLower => big(&bound_cycle_lower(n, i, table)?),
        BoundId::CycleUpper => big(&bound_cycle_upper(n, i, table)?),
        BoundId::CycleRecursiveLower => big(&bound_cycle_recursive(n, i, oracle)?),
        BoundId::PathVsCycle => big(&bound_path_vs_cycle(n, i, oracle)?),
    })
}

fn truth(id: BoundId, n: usize, i: usize, oracle: &OracleCounts) -> Result<BigInt> {
    let (n, i) = (n as i64, i as i64);
    Ok(big(&match id.target() {
        TableFamily::Path => oracle.path(n, i)?,
        TableFamily::Cycle => oracle.cycle(n, i)?,
    }))
}

impl Auditor {
    fn bound_oracle(&self, n_max: usize) -> Result<OracleCounts> {
        if n_max > self.sweep.max_vertices {
            return Err(Error::Capacity {
                what: format!("bound sweep up to n = {n_max}"),
                n: n_max,
                limit: self.sweep.max_vertices,
                hint: "narrow the --n range".into(),
            });
        }
        let oracle = OracleCounts::with_sweep(self.sweep);
        let jobs: Vec<(TableFamily, usize)> = (1..=n_max)
            .map(|n| (TableFamily::Path, n))
            .chain((3..=n_max).map(|n| (TableFamily::Cycle, n)))
            .collect();
        jobs.par_iter()
            .try_for_each(|&(f, n)| oracle.polynomial(f, n).map(|_| ()))?;
        Ok(oracle)
    }

    /// Checks a bound at every point of its stated domain with `n` in
    /// `range`, plus any sharpness example inside `range`.
    pub fn bound(&self, id: BoundId, range: RangeInclusive<usize>) -> Result<AuditReport> {
        let mut points = id.stated_points(range.clone());
        points.extend(
            id.sharpness_witnesses()
                .iter()
                .filter(|(n, i)| range.contains(n) && !id.in_stated_domain(*n, *i)),
        );
        let records = self.bound_records(id, id.name(), &points)?;
        let mut notes = Vec::new();
        for &(n, i) in id.sharpness_witnesses() {
            if range.contains(&n) {
                notes.push(format!(
                    "({n}, {i}) is evaluated as a sharpness example outside the stated range"
                ));
            }
        }
        if id == BoundId::PathLowerAlt {
            let negative: Vec<String> = records
                .iter()
                .filter(|r| r.printed_value.is_negative())
                .map(|r| format!("{:?} = {}", r.point, r.printed_value))
                .collect();
            notes.push(if negative.is_empty() {
                "no negative evaluations".to_string()
            } else {
                format!("negative evaluations: {}", negative.join(", "))
            });
        }
        Ok(AuditReport::assemble(
            id.name(),
            describe(&range, "n"),
            &["n", "i"],
            records,
            notes,
        ))
    }

    fn bound_records(
        &self,
        id: BoundId,
        subject: &str,
        points: &[(usize, usize)],
    ) -> Result<Vec<AuditRecord>> {
        let n_max = points.iter().map(|p| p.0).max().unwrap_or(1);
        let table = path_count_table(n_max.max(1))?;
        let oracle = self.bound_oracle(n_max)?;
        let direction = id.direction();
        points
            .par_iter()
            .map(|&(n, i)| {
                let bound = if subject == id.name() {
                    evaluate(id, n, i, &table, &oracle)?
                } else {
                    // below the stated range the comparison is evaluated directly
                    big(&oracle.path(n as i64, i as i64)?)
                };
                Ok(AuditRecord::bound(
                    subject,
                    ipoint(&[n, i]),
                    direction,
                    bound,
                    truth(id, n, i, &oracle)?,
                ))
            })
            .collect()
    }

    /// `d_a(P_n, i) <= d_a(C_n, i)` on its stated range, and the same
    /// comparison below it, where the inequality is not claimed.
    pub fn path_vs_cycle(&self, range: RangeInclusive<usize>) -> Result<AuditReport> {
        let (stated, below) = path_vs_cycle_points(range.clone());
        let mut records =
            self.bound_records(BoundId::PathVsCycle, BoundId::PathVsCycle.name(), &stated)?;
        let low = self.bound_records(
            BoundId::PathVsCycle,
            "path_vs_cycle_below_threshold",
            &below,
        )?;
        let mut notes = Vec::new();
        if let Some(r) = low.iter().find(|r| r.point == [9, 3]) {
            notes.push(format!(
                "(9, 3): d_a(C_9, 3) = {} and d_a(P_9, 3) = {}",
                r.oracle_value, r.printed_value
            ));
        }
        records.extend(low);
        Ok(AuditReport::assemble(
            BoundId::PathVsCycle.name(),
            describe(&range, "n"),
            &["n", "i"],
            records,
            notes,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audit::Verdict;

    #[test]
    fn path_upper_sharp_at_seven_four() {
        let r = Auditor::default()
            .bound(BoundId::PathUpper, 6..=12)
            .unwrap();
        assert_eq!(r.record_at(&[7, 4]).unwrap().verdict, Verdict::Sharp);
        assert!(r.violations().next().is_none());
    }

    #[test]
    fn cycle_upper_sharp_at_ten_five() {
        let r = Auditor::default()
            .bound(BoundId::CycleUpper, 6..=12)
            .unwrap();
        assert!(r.sharp_points().contains(&[10i64, 5].as_slice()));
        assert!(r.violations().next().is_none());
    }

    #[test]
    fn path_vs_cycle_counterexample_below_range() {
        let r = Auditor::default().path_vs_cycle(9..=10).unwrap();
        let rec = r
            .records
            .iter()
            .find(|r| r.subject == "path_vs_cycle_below_threshold" && r.point == [9, 3])
            .unwrap();
        assert_eq!(rec.verdict, Verdict::Violation);
        assert_eq!(rec.slack, Some(BigInt::from(-1)));
        assert!(r.unexpected_violations().is_empty());
    }
}
