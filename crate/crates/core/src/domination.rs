//! Ground-truth domination: membership, exhaustive counts, the domination
//! polynomial, and branch-and-bound minimum dominating sets.

use rayon::prelude::*;

use crate::count::{Count, CountPolynomial};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::subsets::{self, SubsetRange};

/// Default vertex guard for exhaustive sweeps.
pub const DEFAULT_SWEEP_LIMIT: usize = 22;

/// Capacity and partitioning knobs for the exhaustive sweeps.
///
/// `parts` only controls how a sweep is cut into canonical-order ranges;
/// results are identical for every value. The ranges run on the current
/// rayon pool, so callers pick the worker count by installing a pool.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub max_vertices: usize,
    pub parts: usize,
}

impl Default for Sweep {
    fn default() -> Self {
        Sweep {
            max_vertices: DEFAULT_SWEEP_LIMIT,
            parts: 1,
        }
    }
}

impl Sweep {
    pub fn with_parts(parts: usize) -> Self {
        Sweep {
            parts: parts.max(1),
            ..Sweep::default()
        }
    }

    pub(crate) fn guard(&self, g: &Graph) -> Result<()> {
        if g.order() > self.max_vertices {
            Err(Error::Capacity {
                what: "graph".into(),
                n: g.order(),
                limit: self.max_vertices,
                hint: "use the closed forms or the path/cycle tables for large paths and cycles"
                    .into(),
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn ranges(&self, n: usize, k: usize) -> Vec<SubsetRange> {
        subsets::split(n, k, self.parts)
    }

    /// Number of `k`-subsets satisfying `pred`, summed over the ranges.
    pub(crate) fn count_where<F>(&self, n: usize, k: usize, pred: F) -> Count
    where
        F: Fn(VertexSet) -> bool + Sync,
    {
        let ranges = self.ranges(n, k);
        let partial: Vec<u64> = if ranges.len() <= 1 {
            ranges.iter().map(|r| count_range(r, &pred)).collect()
        } else {
            ranges.par_iter().map(|r| count_range(r, &pred)).collect()
        };
        Count::from(partial.iter().sum::<u64>())
    }

    /// All `k`-subsets satisfying `pred`, in ascending canonical order.
    pub(crate) fn collect_where<F>(&self, n: usize, k: usize, pred: F) -> Vec<VertexSet>
    where
        F: Fn(VertexSet) -> bool + Sync,
    {
        let ranges = self.ranges(n, k);
        let chunks: Vec<Vec<VertexSet>> = if ranges.len() <= 1 {
            ranges
                .iter()
                .map(|r| r.iter().filter(|&s| pred(s)).collect())
                .collect()
        } else {
            ranges
                .par_iter()
                .map(|r| r.iter().filter(|&s| pred(s)).collect())
                .collect()
        };
        chunks.into_iter().flatten().collect()
    }

    pub fn count_dominating(&self, g: &Graph, i: usize) -> Result<Count> {
        self.guard(g)?;
        if i > g.order() {
            return Ok(Count::zero());
        }
        Ok(self.count_where(g.order(), i, |s| dominates(g, s)))
    }

    pub fn enumerate_dominating(&self, g: &Graph, i: usize) -> Result<Vec<VertexSet>> {
        self.guard(g)?;
        if i > g.order() {
            return Ok(Vec::new());
        }
        Ok(self.collect_where(g.order(), i, |s| dominates(g, s)))
    }

    pub fn domination_polynomial(&self, g: &Graph) -> Result<CountPolynomial> {
        self.guard(g)?;
        let coeffs = (0..=g.order())
            .map(|i| self.count_dominating(g, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(CountPolynomial::new(coeffs))
    }
}

fn count_range<F: Fn(VertexSet) -> bool>(range: &SubsetRange, pred: &F) -> u64 {
    range.iter().filter(|&s| pred(s)).count() as u64
}

/// Union of the closed neighborhoods of `d`.
#[inline]
pub fn coverage(g: &Graph, d: VertexSet) -> VertexSet {
    let closed = g.closed_neighborhoods();
    d.iter().fold(VertexSet::EMPTY, |acc, v| acc | closed[v])
}

/// Unchecked domination test; `d` must be a subset of the vertices.
#[inline]
pub fn dominates(g: &Graph, d: VertexSet) -> bool {
    coverage(g, d) == g.vertices()
}

/// Whether every vertex outside `d` has a neighbor in `d`.
pub fn is_dominating(g: &Graph, d: VertexSet) -> Result<bool> {
    g.check_subset(d)?;
    Ok(dominates(g, d))
}

/// `d(G, i)`: number of dominating sets of size `i`, by exhaustive sweep.
pub fn count_dominating(g: &Graph, i: usize) -> Result<Count> {
    Sweep::default().count_dominating(g, i)
}

/// Every dominating set of size `i`, ascending by encoding.
pub fn enumerate_dominating(g: &Graph, i: usize) -> Result<Vec<VertexSet>> {
    Sweep::default().enumerate_dominating(g, i)
}

/// `D(G, x)` with `coeffs[i] = d(G, i)`.
pub fn domination_polynomial(g: &Graph) -> Result<CountPolynomial> {
    Sweep::default().domination_polynomial(g)
}

/// Whether some `S ⊆ allowed` with `|S| <= budget` dominates every vertex
/// outside `covered`.
///
/// Branches on the smallest uncovered vertex `u`: some member of
/// `N[u] ∩ allowed` must be chosen. After a candidate `w` fails it is dropped
/// from `allowed` for the later siblings, since any solution using `w` was
/// already explored.
pub fn dominated_within_budget(
    g: &Graph,
    allowed: VertexSet,
    covered: VertexSet,
    budget: usize,
) -> bool {
    let uncovered = g.vertices() - covered;
    let Some(u) = uncovered.first() else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    // cheap bound: the largest closed neighborhood still available caps how
    // much one pick can cover
    let closed = g.closed_neighborhoods();
    let best = allowed
        .iter()
        .map(|w| (closed[w] & uncovered).len())
        .max()
        .unwrap_or(0);
    if best == 0 || best * budget < uncovered.len() {
        return false;
    }
    let mut allowed = allowed;
    for w in (closed[u] & allowed).iter() {
        if dominated_within_budget(
            g,
            allowed - VertexSet::singleton(w),
            covered | closed[w],
            budget - 1,
        ) {
            return true;
        }
        allowed.remove(w);
    }
    false
}

/// Size of a smallest dominating set drawn from `allowed`, or `None` when
/// `allowed` itself does not dominate.
pub fn min_dominating_within(g: &Graph, allowed: VertexSet) -> Result<Option<usize>> {
    g.check_subset(allowed)?;
    if !dominates(g, allowed) {
        return Ok(None);
    }
    Ok((0..=allowed.len()).find(|&k| dominated_within_budget(g, allowed, VertexSet::EMPTY, k)))
}

/// `γ(G)`, by branch-and-bound with increasing budget.
pub fn gamma(g: &Graph) -> usize {
    (0..=g.order())
        .find(|&k| dominated_within_budget(g, g.vertices(), VertexSet::EMPTY, k))
        .expect("the full vertex set always dominates")
}
