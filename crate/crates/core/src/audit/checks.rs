use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{big, describe, ipoint, AuditRecord, AuditReport, Auditor, Verdict};
use crate::closed_forms::{llano_cycle_count, threshold, Interpretation};
use crate::error::{Error, Result};
use crate::family::{make_family, FamilySpec, GraphSpec};
use crate::graph::{Graph, VertexSet};

/// Largest order the threshold audit accepts.
pub const THRESHOLD_MAX_ORDER: usize = 14;

/// Where the threshold audit gets its graphs.
#[derive(Clone, Debug)]
pub enum GraphSource {
    /// Every labeled graph on `1..=max_order` vertices.
    AllLabeled {
        max_order: usize,
    },
    /// `count` graphs with `G(n, 1/2)` edges, `n` uniform in `orders`.
    Random {
        seed: u64,
        count: usize,
        orders: RangeInclusive<usize>,
    },
    Specs(Vec<GraphSpec>),
    Graphs(Vec<(String, Graph)>),
}

impl GraphSource {
    /// Every family member whose order lies in `orders`.
    pub fn families_of_order(orders: RangeInclusive<usize>) -> Self {
        let mut specs = Vec::new();
        for n in orders {
            let mut add = |f: FamilySpec| {
                if f.validate().is_ok() && f.order() == n {
                    specs.push(GraphSpec::from(f));
                }
            };
            add(FamilySpec::Path(n));
            add(FamilySpec::Cycle(n));
            add(FamilySpec::Complete(n));
            add(FamilySpec::Star(n.saturating_sub(1)));
            for m in 2..=n / 2 {
                add(FamilySpec::CompleteBipartite(m, n - m));
            }
            if n % 2 == 0 {
                add(FamilySpec::Ladder(n / 2));
                add(FamilySpec::Book(n.saturating_sub(2) / 2));
            }
            if n.is_power_of_two() {
                add(FamilySpec::Hypercube(n.trailing_zeros() as usize));
            }
            if n % 2 == 1 {
                add(FamilySpec::Friendship(n / 2));
            }
        }
        GraphSource::Specs(specs)
    }

    pub fn graphs(&self) -> Result<Vec<(String, Graph)>> {
        match self {
            GraphSource::AllLabeled { max_order } => Ok((1..=*max_order)
                .flat_map(all_labeled_graphs)
                .map(|g| (label(&g), g))
                .collect()),
            GraphSource::Random {
                seed,
                count,
                orders,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok((0..*count)
                    .map(|_| {
                        let n = rng.gen_range(orders.clone());
                        let g = random_graph(&mut rng, n);
                        (label(&g), g)
                    })
                    .collect())
            }
            GraphSource::Specs(specs) => specs
                .iter()
                .map(|s| Ok((s.to_string(), s.build()?)))
                .collect(),
            GraphSource::Graphs(gs) => Ok(gs.clone()),
        }
    }
}

fn label(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("{}:[{}]", g.order(), edges.join(","))
}

/// Every labeled simple graph on `n` vertices, by edge bitmask over the
/// pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 32, "too many labeled graphs on {n} vertices");
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).expect("pairs are in range")
    })
}

/// A `G(n, 1/2)` graph; isolated vertices are kept.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("pairs are in range")
}

/// Whether `s` holds three cyclically consecutive vertices of `C_n`.
fn has_three_consecutive(s: VertexSet, n: usize) -> bool {
    let full = VertexSet::full(n).bits();
    let rot = |x: u64, k: usize| ((x >> k) | (x << (n - k))) & full;
    let b = s.bits();
    b & rot(b, 1) & rot(b, 2) != 0
}

/// One reading of the cycle closed form against the oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReadingOutcome {
    pub reading: Interpretation,
    pub points: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LlanoResolution {
    pub report: AuditReport,
    pub readings: Vec<ReadingOutcome>,
    /// The reading that matches at every point, if one does.
    pub matching: Option<Interpretation>,
}

impl Auditor {
    /// `d(G, i) = d_a(G, i)` for every `i >= ⌊n/2⌋ + 1`.
    ///
    /// Accurate sets are dominating sets, so equal counts mean every
    /// dominating set of such a size passes the accuracy test. Points are
    /// `[graph index, i]`; the notes map indices to graphs.
    pub fn threshold_equality(&self, source: &GraphSource) -> Result<AuditReport> {
        let graphs = source.graphs()?;
        if let Some((name, g)) = graphs.iter().find(|(_, g)| g.order() > THRESHOLD_MAX_ORDER) {
            return Err(Error::domain(
                "threshold",
                format!(
                    "{name} has {} vertices, the audit stops at {THRESHOLD_MAX_ORDER}",
                    g.order()
                ),
            ));
        }
        let per_graph: Vec<Vec<AuditRecord>> = graphs
            .par_iter()
            .enumerate()
            .map(|(idx, (_, g))| {
                let n = g.order();
                (threshold(n)..=n)
                    .map(|i| {
                        let d = self.sweep.count_dominating(g, i)?;
                        let da = self.sweep.count_accurate(g, i)?;
                        Ok(AuditRecord::equality(
                            "threshold",
                            ipoint(&[idx, i]),
                            big(&d),
                            big(&da),
                        ))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let notes = graphs
            .iter()
            .enumerate()
            .map(|(i, (name, _))| format!("graph {i}: {name}"))
            .collect();
        let domain = match source {
            GraphSource::AllLabeled { max_order } => {
                format!("all labeled graphs, n = 1..={max_order}")
            }
            GraphSource::Random {
                seed,
                count,
                orders,
            } => format!(
                "{count} random graphs, p = 1/2, n = {}..={}, seed = {seed}",
                orders.start(),
                orders.end()
            ),
            _ => format!("{} listed graphs", graphs.len()),
        };
        Ok(AuditReport::assemble(
            "threshold",
            domain,
            &["graph", "i"],
            per_graph.into_iter().flatten().collect(),
            notes,
        ))
    }

    /// For each `C_n`, `n` in `range`, and `1 <= i <= n/2`: how many
    /// accurate `i`-sets there are (`printed_value`) and how many of them
    /// hold three cyclically consecutive vertices (`oracle_value`).
    pub fn cycle_consecutive(&self, range: RangeInclusive<usize>) -> Result<AuditReport> {
        let orders: Vec<usize> = range.clone().filter(|&n| n >= 3).collect();
        let cycles = orders
            .iter()
            .map(|&n| make_family(FamilySpec::Cycle(n)))
            .collect::<Result<Vec<_>>>()?;
        cycles.iter().try_for_each(|g| self.sweep.guard(g))?;
        let points: Vec<(usize, usize)> = orders
            .iter()
            .enumerate()
            .flat_map(|(idx, &n)| (1..=n / 2).map(move |i| (idx, i)))
            .collect();
        let records = points
            .par_iter()
            .map(|&(idx, i)| {
                let n = orders[idx];
                let sets = self.sweep.enumerate_accurate(&cycles[idx], i)?;
                let hit = sets
                    .iter()
                    .filter(|&&s| has_three_consecutive(s, n))
                    .count();
                Ok(AuditRecord::equality(
                    "cycle_consecutive",
                    ipoint(&[n, i]),
                    sets.len().into(),
                    hit.into(),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AuditReport::assemble(
            "cycle_consecutive",
            describe(&range, "n"),
            &["n", "i"],
            records,
            vec![],
        ))
    }

    /// Evaluates all three readings of the cycle closed form against
    /// `d(C_n, k)` for `n` in `range`, `1 <= k <= n`.
    pub fn llano_cycle_resolution(&self, range: RangeInclusive<usize>) -> Result<LlanoResolution> {
        let orders: Vec<usize> = range.clone().filter(|&n| n >= 3).collect();
        let cycles = orders
            .iter()
            .map(|&n| make_family(FamilySpec::Cycle(n)))
            .collect::<Result<Vec<_>>>()?;
        cycles.iter().try_for_each(|g| self.sweep.guard(g))?;
        let rows = cycles
            .par_iter()
            .map(|g| self.sweep.domination_polynomial(g))
            .collect::<Result<Vec<_>>>()?;
        let mut records = Vec::new();
        let mut readings = Vec::new();
        for reading in Interpretation::ALL {
            let subject = format!("llano_cycle_{}", reading.name());
            let mut outcome = ReadingOutcome {
                reading,
                points: 0,
                mismatches: 0,
                first_mismatch: None,
            };
            for (&n, row) in orders.iter().zip(&rows) {
                for k in 1..=n {
                    let rec = AuditRecord::equality(
                        &subject,
                        ipoint(&[n, k]),
                        llano_cycle_count(n, k, reading)?,
                        big(&row.coeff(k)),
                    );
                    outcome.points += 1;
                    if rec.verdict == Verdict::Violation {
                        outcome.mismatches += 1;
                        outcome
                            .first_mismatch
                            .get_or_insert_with(|| rec.point.clone());
                    }
                    records.push(rec);
                }
            }
            readings.push(outcome);
        }
        let matching = readings
            .iter()
            .find(|o| o.mismatches == 0 && o.points > 0)
            .map(|o| o.reading);
        let mut notes: Vec<String> = readings
            .iter()
            .map(|o| match &o.first_mismatch {
                Some(p) => format!(
                    "{}: {} of {} points differ, first at {:?}",
                    o.reading, o.mismatches, o.points, p
                ),
                None => format!("{}: all {} points match", o.reading, o.points),
            })
            .collect();
        notes.push(match matching {
            Some(r) => format!("matching reading: {r}"),
            None => "no reading matches".to_string(),
        });
        let report = AuditReport::assemble(
            "llano_cycle_resolution",
            describe(&range, "n"),
            &["n", "k"],
            records,
            notes,
        );
        Ok(LlanoResolution {
            report,
            readings,
            matching,
        })
    }
}

/// For a `d_a_hypercube` report: per dimension, the smallest `i` from which
/// every audited size matches, or `None` when even `i = 2^d` fails.
pub fn hypercube_validity(report: &AuditReport) -> BTreeMap<i64, Option<i64>> {
    let mut by_dim: BTreeMap<i64, Vec<(i64, bool)>> = BTreeMap::new();
    for r in report
        .records
        .iter()
        .filter(|r| r.subject == "d_a_hypercube")
    {
        by_dim
            .entry(r.point[0])
            .or_default()
            .push((r.point[1], r.verdict == Verdict::Match));
    }
    by_dim
        .into_iter()
        .map(|(d, mut sizes)| {
            sizes.sort();
            let mut first = None;
            for &(i, ok) in sizes.iter().rev() {
                if !ok {
                    break;
                }
                first = Some(i);
            }
            (d, first)
        })
        .collect()
}
