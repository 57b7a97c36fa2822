use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::checks::GraphSource;
use super::{big, describe, ipoint, AuditRecord, AuditReport, Auditor};
use crate::closed_forms::{
    corona_count, corona_polynomial, d_a_book, d_a_friendship_printed, d_a_hypercube,
    gamma_a_closed, llano_cycle_count, llano_path_count, CoronaVariant, FormulaId, GammaSubject,
    Interpretation,
};
use crate::count::CountPolynomial;
use crate::error::{Error, Result};
use crate::family::{make_family, FamilySpec};
use crate::graph::Graph;
use crate::ops::corona_k1;

/// Largest hypercube dimension the exhaustive oracle is asked to handle.
pub(crate) const MAX_HYPERCUBE_DIM: usize = 4;

/// Base graphs of order `n` used for corona audits, tagged 0 (complete),
/// 1 (path) and 2 (cycle). Duplicates such as `P_2 = K_2` are left out.
pub(crate) fn corona_bases(n: usize) -> Vec<(i64, FamilySpec)> {
    let mut out = vec![(0, FamilySpec::Complete(n))];
    if n >= 3 {
        out.push((1, FamilySpec::Path(n)));
    }
    if n >= 4 {
        out.push((2, FamilySpec::Cycle(n)));
    }
    out
}

const CORONA_NOTE: &str = "base codes: 0 = complete, 1 = path, 2 = cycle";

struct Case {
    point: Vec<i64>,
    graph: Graph,
}

impl Auditor {
    fn guard_all<'a>(&self, graphs: impl IntoIterator<Item = &'a Graph>) -> Result<()> {
        graphs.into_iter().try_for_each(|g| self.sweep.guard(g))
    }

    fn accurate_rows(&self, cases: &[Case]) -> Result<Vec<CountPolynomial>> {
        self.guard_all(cases.iter().map(|c| &c.graph))?;
        cases
            .par_iter()
            .map(|c| self.sweep.accurate_polynomial(&c.graph))
            .collect()
    }

    fn domination_rows(&self, cases: &[Case]) -> Result<Vec<CountPolynomial>> {
        self.guard_all(cases.iter().map(|c| &c.graph))?;
        cases
            .par_iter()
            .map(|c| self.sweep.domination_polynomial(&c.graph))
            .collect()
    }

    /// Compares one formula with the oracle over `range` of its leading
    /// parameter (`n`, or `d` for hypercubes); the remaining parameters are
    /// swept over their full printed range.
    pub fn formula(&self, id: FormulaId, range: RangeInclusive<usize>) -> Result<AuditReport> {
        use FormulaId::*;
        match id {
            GammaAComplete
            | GammaACompleteBipartiteEqual
            | GammaACompleteBipartiteUnequal
            | GammaACycle
            | GammaAPath
            | GammaALadder
            | GammaABook
            | GammaAHypercube
            | GammaAFriendship
            | GammaACorona => self.gamma_formula(id, range),
            DaBook | DaHypercube | DaFriendshipPrinted => self.family_count_formula(id, range),
            DaCoronaCount | CoronaPolyPrinted | CoronaPolyCorrected => {
                self.corona_formula(id, range)
            }
            LlanoPath | LlanoCycleSum | LlanoCycleProduct => self.llano_formula(id, range),
            PathRecurrence | CycleRecurrence => self.recurrence_formula(id, range),
            Threshold => {
                let mut report =
                    self.threshold_equality(&GraphSource::families_of_order(range.clone()))?;
                report.domain = describe(&range, "n");
                Ok(report)
            }
        }
    }

    fn gamma_formula(&self, id: FormulaId, range: RangeInclusive<usize>) -> Result<AuditReport> {
        let mut notes = Vec::new();
        let mut subjects: Vec<(Vec<i64>, GammaSubject, Graph)> = Vec::new();
        let mut params: &[&str] = &["n"];
        for n in range.clone() {
            let specs: Vec<(Vec<i64>, FamilySpec)> = match id {
                FormulaId::GammaAComplete => vec![(ipoint(&[n]), FamilySpec::Complete(n))],
                FormulaId::GammaACompleteBipartiteEqual => {
                    vec![(ipoint(&[n]), FamilySpec::CompleteBipartite(n, n))]
                }
                FormulaId::GammaACompleteBipartiteUnequal => {
                    // n is the total order m + n'
                    params = &["m", "n"];
                    (1..n)
                        .filter(|&m| 2 * m < n)
                        .map(|m| (ipoint(&[m, n - m]), FamilySpec::CompleteBipartite(m, n - m)))
                        .collect()
                }
                FormulaId::GammaACycle => vec![(ipoint(&[n]), FamilySpec::Cycle(n))],
                FormulaId::GammaAPath => vec![(ipoint(&[n]), FamilySpec::Path(n))],
                FormulaId::GammaALadder => vec![(ipoint(&[n]), FamilySpec::Ladder(n))],
                FormulaId::GammaABook => vec![(ipoint(&[n]), FamilySpec::Book(n))],
                FormulaId::GammaAHypercube => {
                    params = &["d"];
                    if n > MAX_HYPERCUBE_DIM {
                        return Err(hypercube_capacity(n));
                    }
                    vec![(ipoint(&[n]), FamilySpec::Hypercube(n))]
                }
                FormulaId::GammaAFriendship => vec![(ipoint(&[n]), FamilySpec::Friendship(n))],
                FormulaId::GammaACorona => {
                    params = &["n", "base"];
                    for (code, base) in corona_bases(n) {
                        if base.validate().is_err() {
                            continue;
                        }
                        let g = corona_k1(&make_family(base)?)?;
                        subjects.push((
                            vec![n as i64, code],
                            GammaSubject::Corona { base_order: n },
                            g,
                        ));
                    }
                    continue;
                }
                _ => unreachable!("gamma formulas only"),
            };
            for (point, spec) in specs {
                if spec.validate().is_err() {
                    notes.push(format!("{spec} skipped: not a valid family member"));
                    continue;
                }
                subjects.push((point, GammaSubject::Family(spec), make_family(spec)?));
            }
        }
        if id == FormulaId::GammaACorona {
            notes.push(CORONA_NOTE.to_string());
        }
        self.guard_all(subjects.iter().map(|s| &s.2))?;
        let mut kept = Vec::new();
        for (point, subject, g) in subjects {
            match gamma_a_closed(subject) {
                Ok(printed) => kept.push((point, printed, g)),
                Err(Error::Domain { reason, .. }) => {
                    notes.push(format!("point {point:?} skipped: formula {reason}"));
                }
                Err(e) => return Err(e),
            }
        }
        let records = kept
            .par_iter()
            .map(|(point, printed, g)| {
                let oracle = self.sweep.gamma_a(g)?;
                Ok(AuditRecord::equality(
                    id.name(),
                    point.clone(),
                    big(printed),
                    BigInt::from(oracle),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let axis = if id == FormulaId::GammaAHypercube {
            "d"
        } else {
            "n"
        };
        Ok(AuditReport::assemble(
            id.name(),
            describe(&range, axis),
            params,
            records,
            notes,
        ))
    }

    fn family_count_formula(
        &self,
        id: FormulaId,
        range: RangeInclusive<usize>,
    ) -> Result<AuditReport> {
        let mut notes = Vec::new();
        let mut cases = Vec::new();
        for n in range.clone() {
            let spec = match id {
                FormulaId::DaBook if n >= 3 => FamilySpec::Book(n),
                FormulaId::DaHypercube if n >= 1 => {
                    if n > MAX_HYPERCUBE_DIM {
                        return Err(hypercube_capacity(n));
                    }
                    FamilySpec::Hypercube(n)
                }
                FormulaId::DaFriendshipPrinted if n >= 1 => FamilySpec::Friendship(n),
                _ => {
                    notes.push(format!("{n} skipped: outside the printed domain"));
                    continue;
                }
            };
            cases.push(Case {
                point: ipoint(&[n]),
                graph: make_family(spec)?,
            });
        }
        let rows = self.accurate_rows(&cases)?;
        let mut records = Vec::new();
        for (case, row) in cases.iter().zip(&rows) {
            let n = case.point[0] as usize;
            let sizes: Vec<usize> = match id {
                FormulaId::DaBook => std::iter::once(2).chain(3..=n / 2).collect(),
                FormulaId::DaHypercube => (0..=1usize << n).collect(),
                _ => (1..=2 * n + 1).collect(),
            };
            for i in sizes {
                let printed = match id {
                    FormulaId::DaBook => d_a_book(n, i)?,
                    FormulaId::DaHypercube => d_a_hypercube(n, i)?,
                    _ => d_a_friendship_printed(n, i)?,
                };
                records.push(AuditRecord::equality(
                    id.name(),
                    ipoint(&[n, i]),
                    big(&printed),
                    big(&row.coeff(i)),
                ));
            }
        }
        let (axis, params): (&str, &[&str]) = if id == FormulaId::DaHypercube {
            ("d", &["d", "i"])
        } else {
            ("n", &["n", "i"])
        };
        Ok(AuditReport::assemble(
            id.name(),
            describe(&range, axis),
            params,
            records,
            notes,
        ))
    }

    fn corona_formula(&self, id: FormulaId, range: RangeInclusive<usize>) -> Result<AuditReport> {
        let mut cases = Vec::new();
        for n in range.clone().filter(|&n| n >= 1) {
            for (code, base) in corona_bases(n) {
                cases.push(Case {
                    point: vec![n as i64, code],
                    graph: corona_k1(&make_family(base)?)?,
                });
            }
        }
        let rows = self.accurate_rows(&cases)?;
        let mut records = Vec::new();
        for (case, row) in cases.iter().zip(&rows) {
            let n = case.point[0] as usize;
            let code = case.point[1];
            let mut push = |j: usize, printed: BigInt| {
                records.push(AuditRecord::equality(
                    id.name(),
                    vec![n as i64, code, j as i64],
                    printed,
                    big(&row.coeff(j)),
                ));
            };
            match id {
                FormulaId::DaCoronaCount => {
                    for m in n + 1..=2 * n {
                        push(m, big(&corona_count(n, m)?));
                    }
                }
                _ => {
                    let variant = if id == FormulaId::CoronaPolyPrinted {
                        CoronaVariant::Printed
                    } else {
                        CoronaVariant::Corrected
                    };
                    let poly = corona_polynomial(n, variant)?;
                    for j in 0..=2 * n {
                        push(j, big(&poly.coeff(j)));
                    }
                }
            }
        }
        let last = if id == FormulaId::DaCoronaCount {
            "m"
        } else {
            "j"
        };
        Ok(AuditReport::assemble(
            id.name(),
            describe(&range, "n"),
            &["n", "base", last],
            records,
            vec![CORONA_NOTE.to_string()],
        ))
    }

    fn llano_formula(&self, id: FormulaId, range: RangeInclusive<usize>) -> Result<AuditReport> {
        let path = id == FormulaId::LlanoPath;
        let first = if path { 1 } else { 3 };
        let mut cases = Vec::new();
        for n in range.clone().filter(|&n| n >= first) {
            let spec = if path {
                FamilySpec::Path(n)
            } else {
                FamilySpec::Cycle(n)
            };
            cases.push(Case {
                point: ipoint(&[n]),
                graph: make_family(spec)?,
            });
        }
        let rows = self.domination_rows(&cases)?;
        let mut records = Vec::new();
        for (case, row) in cases.iter().zip(&rows) {
            let n = case.point[0] as usize;
            for k in 1..=n {
                let printed = match id {
                    FormulaId::LlanoPath => big(&llano_path_count(n, k)?),
                    FormulaId::LlanoCycleSum => llano_cycle_count(n, k, Interpretation::Sum)?,
                    _ => llano_cycle_count(n, k, Interpretation::Product)?,
                };
                records.push(AuditRecord::equality(
                    id.name(),
                    ipoint(&[n, k]),
                    printed,
                    big(&row.coeff(k)),
                ));
            }
        }
        Ok(AuditReport::assemble(
            id.name(),
            describe(&range, "n"),
            &["n", "k"],
            records,
            vec![],
        ))
    }

    fn recurrence_formula(
        &self,
        id: FormulaId,
        range: RangeInclusive<usize>,
    ) -> Result<AuditReport> {
        // the recurrence needs three smaller members of the family
        let (first, family): (usize, fn(usize) -> FamilySpec) = if id == FormulaId::PathRecurrence {
            (4, FamilySpec::Path)
        } else {
            (6, FamilySpec::Cycle)
        };
        let targets: Vec<usize> = range.clone().filter(|&n| n >= first).collect();
        let Some(&lo) = targets.first() else {
            return Ok(AuditReport::assemble(
                id.name(),
                describe(&range, "n"),
                &["n", "i"],
                vec![],
                vec![],
            ));
        };
        let hi = *targets.last().expect("nonempty");
        let orders: Vec<usize> = (lo - 3..=hi).collect();
        let cases = orders
            .iter()
            .map(|&n| {
                Ok(Case {
                    point: ipoint(&[n]),
                    graph: make_family(family(n))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let rows = self.domination_rows(&cases)?;
        let row = |n: usize| &rows[n - (lo - 3)];
        let mut records = Vec::new();
        for &n in &targets {
            for i in 0..=n {
                let printed = if i == 0 {
                    BigInt::from(0)
                } else {
                    (1..=3).map(|b| big(&row(n - b).coeff(i - 1))).sum()
                };
                records.push(AuditRecord::equality(
                    id.name(),
                    ipoint(&[n, i]),
                    printed,
                    big(&row(n).coeff(i)),
                ));
            }
        }
        Ok(AuditReport::assemble(
            id.name(),
            describe(&range, "n"),
            &["n", "i"],
            records,
            vec![],
        ))
    }
}

fn hypercube_capacity(d: usize) -> Error {
    Error::Capacity {
        what: format!("hypercube:{d}"),
        n: 1usize << d.min(62),
        limit: 1 << MAX_HYPERCUBE_DIM,
        hint: "hypercube audits stop at d = 4".into(),
    }
}
