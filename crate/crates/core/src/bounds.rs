//! Published inequalities for `d_a(P_n, i)` and `d_a(C_n, i)`.
//!
//! Each bound takes its count tables and accurate-count provider as
//! arguments, so a bound audit never depends on recomputing the tables it
//! reads from.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;

use crate::count::{Count, CountPolynomial};
use crate::domination::Sweep;
use crate::error::{Error, Result};
use crate::family::make_family;
use crate::table::{CountTable, TableFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    PathLower,
    PathUpper,
    PathLowerAlt,
    CycleLower,
    CycleUpper,
    CycleRecursiveLower,
    PathVsCycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// bound <= true value
    Lower,
    /// bound >= true value
    Upper,
}

impl BoundId {
    pub const ALL: [BoundId; 7] = [
        BoundId::PathLower,
        BoundId::PathUpper,
        BoundId::PathLowerAlt,
        BoundId::CycleLower,
        BoundId::CycleUpper,
        BoundId::CycleRecursiveLower,
        BoundId::PathVsCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::PathLower => "path_lower",
            BoundId::PathUpper => "path_upper",
            BoundId::PathLowerAlt => "path_lower_alt",
            BoundId::CycleLower => "cycle_lower",
            BoundId::CycleUpper => "cycle_upper",
            BoundId::CycleRecursiveLower => "cycle_recursive_lower",
            BoundId::PathVsCycle => "path_vs_cycle",
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            BoundId::PathUpper | BoundId::CycleUpper => Direction::Upper,
            _ => Direction::Lower,
        }
    }

    /// The family whose `d_a` the bound constrains.
    pub fn target(self) -> TableFamily {
        match self {
            BoundId::PathLower | BoundId::PathUpper | BoundId::PathLowerAlt => TableFamily::Path,
            _ => TableFamily::Cycle,
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            BoundId::PathLower => {
                "d_a(P_n,i) ≥ Σ_{k=3}^{i} d(P_{n−k},i−k+1) + Σ_{k=5}^{i+1} d(P_{n−k},i−k+2), ⌈n/3⌉ ≤ i ≤ ⌊n/2⌋"
            }
            BoundId::PathUpper => {
                "d_a(P_n,i) ≤ d_a(P_{n−2},i−1) + d_a(P_{n−3},i−1) + d_a(P_{n−4},i−2) + (path_lower sums), ⌈n/3⌉ ≤ i ≤ ⌊n/2⌋"
            }
            BoundId::PathLowerAlt => "d_a(P_n,i) ≥ 2d(P_{n−3},i−2) − d(P_{n−6},i−4)",
            BoundId::CycleLower => {
                "d_a(C_n,i) ≥ Σ_{k=3}^{i−1} (k+2) d(P_{n−k−2},i−k), n ≥ 6, ⌊n/3⌋+2 ≤ i ≤ ⌊n/2⌋"
            }
            BoundId::CycleUpper => {
                "d_a(C_n,i) ≤ Σ_{k=3}^{i−1} n d(P_{n−k−2},i−k), n ≥ 6, ⌊n/3⌋+2 ≤ i ≤ ⌊n/2⌋"
            }
            BoundId::CycleRecursiveLower => "d_a(C_n,i) ≥ (n−i+1) d_a(C_{n−1},i−1), n ≥ 6",
            BoundId::PathVsCycle => "d_a(P_n,i) ≤ d_a(C_n,i), n ≥ 3, i ≥ ⌊n/2⌋",
        }
    }

    /// Whether `(n, i)` lies in the range the inequality is stated for.
    pub fn in_stated_domain(self, n: usize, i: usize) -> bool {
        match self {
            BoundId::PathLower | BoundId::PathUpper => n >= 1 && n.div_ceil(3) <= i && i <= n / 2,
            BoundId::PathLowerAlt => n >= 4 && (2..=n).contains(&i),
            BoundId::CycleLower | BoundId::CycleUpper => n >= 6 && n / 3 + 2 <= i && i <= n / 2,
            BoundId::CycleRecursiveLower => n >= 6 && (1..=n).contains(&i),
            BoundId::PathVsCycle => n >= 3 && n / 2 <= i && i <= n,
        }
    }

    /// Points outside the stated range at which a sharpness example is
    /// worked. The path upper bound's equality example, `(7, 4)`, has
    /// `i = ⌊7/2⌋ + 1`.
    pub fn sharpness_witnesses(self) -> &'static [(usize, usize)] {
        match self {
            BoundId::PathUpper => &[(7, 4)],
            _ => &[],
        }
    }

    /// Stated range plus sharpness witnesses: where evaluation is allowed.
    pub fn in_domain(self, n: usize, i: usize) -> bool {
        self.in_stated_domain(n, i) || self.sharpness_witnesses().contains(&(n, i))
    }

    /// Stated-range points with `n` in `n_range`, ascending, followed by
    /// nothing else; witnesses are listed separately.
    pub fn stated_points(self, n_range: std::ops::RangeInclusive<usize>) -> Vec<(usize, usize)> {
        n_range
            .flat_map(|n| (0..=n).map(move |i| (n, i)))
            .filter(|&(n, i)| self.in_stated_domain(n, i))
            .collect()
    }

    fn check(self, n: usize, i: usize) -> Result<()> {
        if self.in_domain(n, i) {
            Ok(())
        } else {
            Err(Error::domain(
                self.name(),
                format!("(n, i) = ({n}, {i}) is outside {}", self.statement()),
            ))
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::parse(s, "unknown bound id"))
    }
}

/// Source of `d_a(P_n, i)` and `d_a(C_n, i)` values for the bounds that
/// recurse on accurate counts.
pub trait AccurateCounts {
    fn path(&self, n: i64, i: i64) -> Result<Count>;
    fn cycle(&self, n: i64, i: i64) -> Result<Count>;
}

/// Exhaustive-oracle [`AccurateCounts`], memoized per order.
///
/// Degenerate sizes follow the count-table conventions: `d_a(P_0, 0) = 1`,
/// zero for negative orders, for `i` outside `0..=n`, and for cycles below
/// order 3.
#[derive(Debug, Default)]
pub struct OracleCounts {
    sweep: Sweep,
    cache: Mutex<HashMap<(TableFamily, usize), CountPolynomial>>,
}

impl OracleCounts {
    pub fn new() -> Self {
        OracleCounts::default()
    }

    pub fn with_sweep(sweep: Sweep) -> Self {
        OracleCounts {
            sweep,
            cache: Mutex::default(),
        }
    }

    /// `D_a` of `P_n` or `C_n`.
    pub fn polynomial(&self, family: TableFamily, n: usize) -> Result<CountPolynomial> {
        if let Some(p) = self.cache.lock().expect("cache lock").get(&(family, n)) {
            return Ok(p.clone());
        }
        let p = self
            .sweep
            .accurate_polynomial(&make_family(family.spec(n))?)?;
        self.cache
            .lock()
            .expect("cache lock")
            .insert((family, n), p.clone());
        Ok(p)
    }

    fn lookup(&self, family: TableFamily, n: i64, i: i64) -> Result<Count> {
        if n < 0 || i < 0 || i > n {
            return Ok(Count::zero());
        }
        if n == 0 {
            return Ok(if family == TableFamily::Path {
                Count::one()
            } else {
                Count::zero()
            });
        }
        if (n as usize) < family.first_order() {
            return Ok(Count::zero());
        }
        Ok(self.polynomial(family, n as usize)?.coeff(i as usize))
    }
}

impl AccurateCounts for OracleCounts {
    fn path(&self, n: i64, i: i64) -> Result<Count> {
        self.lookup(TableFamily::Path, n, i)
    }

    fn cycle(&self, n: i64, i: i64) -> Result<Count> {
        self.lookup(TableFamily::Cycle, n, i)
    }
}

fn path_d(table: &CountTable, n: i64, i: i64) -> Result<Count> {
    if table.family() != TableFamily::Path {
        return Err(Error::domain("bound", "expected a path count table"));
    }
    table.get(n, i).ok_or_else(|| {
        Error::domain(
            "bound",
            format!("path table stops at n = {}, needs n = {n}", table.n_max()),
        )
    })
}

fn path_sums(n: i64, i: i64, table: &CountTable) -> Result<Count> {
    let mut total = Count::zero();
    for k in 3..=i {
        total += path_d(table, n - k, i - k + 1)?;
    }
    for k in 5..=i + 1 {
        total += path_d(table, n - k, i - k + 2)?;
    }
    Ok(total)
}

/// `Σ_{k=3}^{i} d(P_{n-k}, i-k+1) + Σ_{k=5}^{i+1} d(P_{n-k}, i-k+2)`.
pub fn bound_path_lower(n: usize, i: usize, table: &CountTable) -> Result<Count> {
    BoundId::PathLower.check(n, i)?;
    path_sums(n as i64, i as i64, table)
}

/// `d_a(P_{n-2},i-1) + d_a(P_{n-3},i-1) + d_a(P_{n-4},i-2)` plus the two
/// sums of [`bound_path_lower`].
pub fn bound_path_upper(
    n: usize,
    i: usize,
    table: &CountTable,
    accurate: &dyn AccurateCounts,
) -> Result<Count> {
    BoundId::PathUpper.check(n, i)?;
    let (n, i) = (n as i64, i as i64);
    Ok(accurate.path(n - 2, i - 1)?
        + accurate.path(n - 3, i - 1)?
        + accurate.path(n - 4, i - 2)?
        + path_sums(n, i, table)?)
}

/// `2 d(P_{n-3}, i-2) - d(P_{n-6}, i-4)`, reported signed.
pub fn bound_path_lower_alt(n: usize, i: usize, table: &CountTable) -> Result<BigInt> {
    BoundId::PathLowerAlt.check(n, i)?;
    let (n, i) = (n as i64, i as i64);
    Ok(path_d(table, n - 3, i - 2)?.to_bigint() * 2 - path_d(table, n - 6, i - 4)?.to_bigint())
}

fn cycle_sum(n: usize, i: usize, table: &CountTable, weight: impl Fn(i64) -> u64) -> Result<Count> {
    let (n, i) = (n as i64, i as i64);
    let mut total = Count::zero();
    for k in 3..i {
        total += path_d(table, n - k - 2, i - k)? * weight(k);
    }
    Ok(total)
}

/// `Σ_{k=3}^{i-1} (k+2) d(P_{n-k-2}, i-k)`.
pub fn bound_cycle_lower(n: usize, i: usize, table: &CountTable) -> Result<Count> {
    BoundId::CycleLower.check(n, i)?;
    cycle_sum(n, i, table, |k| (k + 2) as u64)
}

/// `Σ_{k=3}^{i-1} n d(P_{n-k-2}, i-k)`.
pub fn bound_cycle_upper(n: usize, i: usize, table: &CountTable) -> Result<Count> {
    BoundId::CycleUpper.check(n, i)?;
    cycle_sum(n, i, table, |_| n as u64)
}

/// `(n-i+1) d_a(C_{n-1}, i-1)`.
pub fn bound_cycle_recursive(n: usize, i: usize, accurate: &dyn AccurateCounts) -> Result<Count> {
    BoundId::CycleRecursiveLower.check(n, i)?;
    Ok(accurate.cycle(n as i64 - 1, i as i64 - 1)? * (n - i + 1) as u64)
}

/// `d_a(P_n, i)`, the claimed lower bound for `d_a(C_n, i)`.
pub fn bound_path_vs_cycle(n: usize, i: usize, accurate: &dyn AccurateCounts) -> Result<Count> {
    BoundId::PathVsCycle.check(n, i)?;
    accurate.path(n as i64, i as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::path_count_table;

    #[test]
    fn path_upper_at_the_sharpness_example() {
        let t = path_count_table(8).unwrap();
        let oracle = OracleCounts::new();
        // 8 + 4 + 3 + (4 + 1) + 2
        assert_eq!(
            bound_path_upper(7, 4, &t, &oracle).unwrap(),
            Count::from(22u64)
        );
        assert!(!BoundId::PathUpper.in_stated_domain(7, 4));
        assert!(bound_path_upper(7, 5, &t, &oracle).is_err());
    }

    #[test]
    fn path_lower_alt_values() {
        let t = path_count_table(9).unwrap();
        assert_eq!(bound_path_lower_alt(6, 3, &t).unwrap(), BigInt::from(2));
        assert_eq!(bound_path_lower_alt(7, 4, &t).unwrap(), BigInt::from(8));
        assert_eq!(bound_path_lower_alt(9, 3, &t).unwrap(), BigInt::from(0));
        assert!(bound_path_lower_alt(3, 2, &t).is_err());
    }

    #[test]
    fn cycle_bounds_at_c10() {
        let t = path_count_table(10).unwrap();
        assert_eq!(bound_cycle_lower(10, 5, &t).unwrap(), Count::from(15u64));
        assert_eq!(bound_cycle_upper(10, 5, &t).unwrap(), Count::from(30u64));
        assert!(bound_cycle_upper(10, 6, &t).is_err());
    }

    #[test]
    fn recursive_bound_at_full_set() {
        let oracle = OracleCounts::new();
        for n in 6..=10 {
            assert_eq!(bound_cycle_recursive(n, n, &oracle).unwrap(), Count::one());
        }
        assert!(bound_cycle_recursive(5, 3, &oracle).is_err());
    }

    #[test]
    fn short_table_is_a_domain_error() {
        let t = path_count_table(3).unwrap();
        assert!(bound_path_lower(12, 5, &t).is_err());
    }

    #[test]
    fn oracle_conventions() {
        let o = OracleCounts::new();
        assert_eq!(o.path(0, 0).unwrap(), Count::one());
        assert_eq!(o.path(-1, 0).unwrap(), Count::zero());
        assert_eq!(o.path(3, 2).unwrap(), Count::from(3u64));
        assert_eq!(o.cycle(2, 1).unwrap(), Count::zero());
        assert_eq!(o.cycle(10, 5).unwrap(), Count::from(30u64));
    }

    #[test]
    fn stated_domains() {
        assert_eq!(
            BoundId::PathLower.stated_points(6..=8),
            vec![(6, 2), (6, 3), (7, 3), (8, 3), (8, 4)]
        );
        assert_eq!(
            BoundId::CycleUpper.stated_points(6..=10),
            vec![(8, 4), (10, 5)]
        );
    }
}
