//! Memoized `d(P_n, i)` and `d(C_n, i)` tables built from exhaustive base
//! rows and the three-term recurrence, with CSV import/export.
//!
//! The CSV layout is `family,n,i,count` with exact decimal integers.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::count::{Count, CountPolynomial};
use crate::domination::domination_polynomial;
use crate::error::{Error, Result};
use crate::family::{make_family, FamilySpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableFamily {
    Path,
    Cycle,
}

impl TableFamily {
    pub fn name(self) -> &'static str {
        match self {
            TableFamily::Path => "path",
            TableFamily::Cycle => "cycle",
        }
    }

    /// Smallest order with a real row.
    pub fn first_order(self) -> usize {
        match self {
            TableFamily::Path => 1,
            TableFamily::Cycle => 3,
        }
    }

    /// Orders whose rows come from the exhaustive oracle.
    fn base_orders(self) -> std::ops::RangeInclusive<usize> {
        match self {
            TableFamily::Path => 1..=3,
            TableFamily::Cycle => 3..=5,
        }
    }

    pub fn spec(self, n: usize) -> FamilySpec {
        match self {
            TableFamily::Path => FamilySpec::Path(n),
            TableFamily::Cycle => FamilySpec::Cycle(n),
        }
    }
}

impl fmt::Display for TableFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(TableFamily::Path),
            "cycle" => Ok(TableFamily::Cycle),
            _ => Err(Error::parse(s, "table family must be path or cycle")),
        }
    }
}

/// Rows `d(F_n, 0..=n)` for `n` up to `n_max`.
///
/// Lookups follow the degenerate-size conventions the bound sums rely on:
/// `d(P_0, 0) = 1`, `d(P_0, j) = 0` for `j >= 1`, `d(P_n, ·) = 0` for
/// `n < 0`, and `d(G, i) = 0` for `i < 0` or `i > n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    family: TableFamily,
    /// `rows[n]`; rows below the family's first order are empty except
    /// the path's `P_0` row.
    rows: Vec<CountPolynomial>,
}

impl CountTable {
    pub fn family(&self) -> TableFamily {
        self.family
    }

    pub fn n_max(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn row(&self, n: usize) -> Option<&CountPolynomial> {
        if n < self.family.first_order() {
            return None;
        }
        self.rows.get(n)
    }

    /// `d(F_n, i)` with the conventions above; `None` past `n_max`.
    pub fn get(&self, n: i64, i: i64) -> Option<Count> {
        if n < 0 || i < 0 {
            return Some(Count::zero());
        }
        let (n, i) = (n as usize, i as usize);
        if n == 0 && self.family == TableFamily::Path {
            return Some(if i == 0 { Count::one() } else { Count::zero() });
        }
        if n < self.family.first_order() {
            return Some(Count::zero());
        }
        self.rows.get(n).map(|row| row.coeff(i))
    }

    /// Builds a table from explicit rows `first_order..=n_max`.
    pub fn from_rows(family: TableFamily, rows: BTreeMap<usize, CountPolynomial>) -> Result<Self> {
        let mut out = vec![CountPolynomial::zeros(0); family.first_order()];
        if family == TableFamily::Path {
            out[0] = CountPolynomial::from_u64s(&[1]);
        }
        for (expected, (n, row)) in (family.first_order()..).zip(rows) {
            if n != expected {
                return Err(Error::Cache(format!(
                    "{family} table is missing row n = {expected}"
                )));
            }
            if row.len() != n + 1 {
                return Err(Error::Cache(format!(
                    "{family} row n = {n} has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
            out.push(row);
        }
        Ok(CountTable { family, rows: out })
    }

    pub fn write_csv<W: Write>(&self, w: W, with_header: bool) -> Result<()> {
        let mut wtr = csv::WriterBuilder::new().has_headers(false).from_writer(w);
        if with_header {
            wtr.write_record(["family", "n", "i", "count"])?;
        }
        for n in self.family.first_order()..=self.n_max() {
            for (i, c) in self.rows[n].coeffs().iter().enumerate() {
                wtr.write_record([
                    self.family.name(),
                    &n.to_string(),
                    &i.to_string(),
                    &c.to_string(),
                ])?;
            }
        }
        wtr.flush()?;
        Ok(())
    }

    /// The same table cut back to `n_max`; `None` if it is shorter.
    pub fn truncated(&self, n_max: usize) -> Option<CountTable> {
        if n_max > self.n_max() || n_max < self.family.first_order() {
            return None;
        }
        Some(CountTable {
            family: self.family,
            rows: self.rows[..=n_max].to_vec(),
        })
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf, true)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("csv output is utf-8")
    }
}

/// Writes several tables into one CSV under a single header.
pub fn write_tables<'a, W: Write>(
    mut w: W,
    tables: impl IntoIterator<Item = &'a CountTable>,
) -> Result<()> {
    let mut header = true;
    for t in tables {
        t.write_csv(&mut w, header)?;
        header = false;
    }
    if header {
        writeln!(w, "family,n,i,count")?;
    }
    Ok(())
}

#[derive(Debug, Deserialize)]
struct CsvRow {
    family: String,
    n: usize,
    i: usize,
    count: String,
}

/// Reads every table in a `family,n,i,count` CSV.
pub fn read_tables<R: Read>(r: R) -> Result<BTreeMap<TableFamily, CountTable>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(r);
    let headers = rdr.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["family", "n", "i", "count"] {
        return Err(Error::Cache(format!("unexpected header {:?}", headers)));
    }
    let mut grouped: BTreeMap<TableFamily, BTreeMap<usize, Vec<Option<Count>>>> = BTreeMap::new();
    for rec in rdr.deserialize() {
        let rec: CsvRow = rec?;
        let family: TableFamily = rec.family.parse()?;
        let count: Count = rec
            .count
            .parse()
            .map_err(|_| Error::Cache(format!("bad count `{}`", rec.count)))?;
        if rec.i > rec.n {
            return Err(Error::Cache(format!("i = {} exceeds n = {}", rec.i, rec.n)));
        }
        let row = grouped
            .entry(family)
            .or_default()
            .entry(rec.n)
            .or_insert_with(|| vec![None; rec.n + 1]);
        if row[rec.i].replace(count).is_some() {
            return Err(Error::Cache(format!(
                "duplicate entry {family} n = {} i = {}",
                rec.n, rec.i
            )));
        }
    }
    let mut out = BTreeMap::new();
    for (family, rows) in grouped {
        let mut complete = BTreeMap::new();
        for (n, row) in rows {
            let row: Option<Vec<Count>> = row.into_iter().collect();
            let row =
                row.ok_or_else(|| Error::Cache(format!("{family} row n = {n} is incomplete")))?;
            complete.insert(n, CountPolynomial::new(row));
        }
        out.insert(family, CountTable::from_rows(family, complete)?);
    }
    Ok(out)
}

fn build(family: TableFamily, n_max: usize) -> Result<CountTable> {
    let mut rows = BTreeMap::new();
    for n in family.base_orders().filter(|&n| n <= n_max) {
        rows.insert(n, domination_polynomial(&make_family(family.spec(n))?)?);
    }
    let last_base = *family.base_orders().end();
    for n in last_base + 1..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        row.push(Count::zero());
        for i in 1..=n {
            let c = (1..=3).map(|back| rows[&(n - back)].coeff(i - 1)).sum();
            row.push(c);
        }
        rows.insert(n, CountPolynomial::new(row));
    }
    CountTable::from_rows(family, rows)
}

/// `d(P_n, i)` for `1 <= n <= n_max`: rows `P_1..P_3` from the exhaustive
/// oracle, later rows from `d(P_n,i) = d(P_{n-1},i-1) + d(P_{n-2},i-1) +
/// d(P_{n-3},i-1)`.
pub fn path_count_table(n_max: usize) -> Result<CountTable> {
    if n_max == 0 {
        return Err(Error::domain("path_count_table", "n_max >= 1"));
    }
    build(TableFamily::Path, n_max)
}

/// `d(C_n, i)` for `3 <= n <= n_max`, seeded with `C_3..C_5`.
pub fn cycle_count_table(n_max: usize) -> Result<CountTable> {
    if n_max < 3 {
        return Err(Error::domain("cycle_count_table", "n_max >= 3"));
    }
    build(TableFamily::Cycle, n_max)
}

/// Table for either family.
pub fn count_table(family: TableFamily, n_max: usize) -> Result<CountTable> {
    match family {
        TableFamily::Path => path_count_table(n_max),
        TableFamily::Cycle => cycle_count_table(n_max),
    }
}
