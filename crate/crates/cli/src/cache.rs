//! CSV cache for the recurrence tables.
//!
//! A hit is trusted only after two randomly chosen rows with `n <= 18`
//! agree with the exhaustive oracle. Unreadable or inconsistent caches are
//! rebuilt with a warning on stderr.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use accdom::domination::DEFAULT_SWEEP_LIMIT;
use accdom::{
    count_table, make_family, read_tables, write_tables, CountTable, Error, Sweep, TableFamily,
};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Rows above this order are not re-derived when checking a cache.
const CHECK_MAX_ORDER: usize = 18;

pub fn load_or_build(
    family: TableFamily,
    n_max: usize,
    cache: Option<&Path>,
    seed: u64,
    sweep: &Sweep,
) -> Result<CountTable, Error> {
    let Some(path) = cache else {
        return count_table(family, n_max);
    };
    let mut tables = BTreeMap::new();
    if path.exists() {
        match fs::File::open(path)
            .map_err(Error::from)
            .and_then(read_tables)
        {
            Ok(found) => tables = found,
            Err(e) => eprintln!(
                "warning: cache {} is corrupt ({e}); regenerating",
                path.display()
            ),
        }
    }
    if let Some(cached) = tables.get(&family) {
        if let Some(cut) = cached.truncated(n_max) {
            match spot_check(cached, seed, sweep)? {
                Ok(rows) => {
                    eprintln!(
                        "cache hit: {} {family} rows {rows:?} verified",
                        path.display()
                    );
                    return Ok(cut);
                }
                Err(n) => eprintln!(
                    "warning: cache {} has a wrong {family} row n = {n}; regenerating",
                    path.display()
                ),
            }
            tables.remove(&family);
        }
    }
    let table = count_table(family, n_max)?;
    tables.insert(family, table.clone());
    let tmp = path.with_extension("csv.tmp");
    let mut buf = Vec::new();
    write_tables(&mut buf, tables.values())?;
    fs::write(&tmp, buf)?;
    fs::rename(&tmp, path)?;
    Ok(table)
}

/// Recomputes two seeded random rows; `Err(n)` names the first bad row.
fn spot_check(
    table: &CountTable,
    seed: u64,
    sweep: &Sweep,
) -> Result<Result<Vec<usize>, usize>, Error> {
    let family = table.family();
    let first = family.first_order();
    let last = table.n_max().min(CHECK_MAX_ORDER);
    if last < first {
        return Ok(Ok(Vec::new()));
    }
    let span = last - first + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<usize> = sample(&mut rng, span, span.min(2))
        .into_iter()
        .map(|k| first + k)
        .collect();
    rows.sort_unstable();
    let oracle = Sweep {
        max_vertices: DEFAULT_SWEEP_LIMIT,
        ..*sweep
    };
    for &n in &rows {
        let truth = oracle.domination_polynomial(&make_family(family.spec(n))?)?;
        if table.row(n) != Some(&truth) {
            return Ok(Err(n));
        }
    }
    Ok(Ok(rows))
}
