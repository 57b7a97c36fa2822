use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use accdom::audit::{AuditReport, Auditor, GraphSource};
use accdom::domination::DEFAULT_SWEEP_LIMIT;
use accdom::{BoundId, Error, FormulaId, Graph, Sweep, TableFamily, VertexSet};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

mod cache;

const EXIT_USAGE: u8 = 1;
const EXIT_UNEXPECTED: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "accdom",
    version,
    about = "Count, enumerate and audit accurate dominating sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; audit defaults to json, table to csv, the rest to human.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads for the exhaustive sweeps.
    #[arg(long, global = true, default_value_t = 1, value_parser = positive)]
    workers: usize,

    /// Seed for random graph sources and cache spot checks.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Vertex guard for exhaustive sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SWEEP_LIMIT)]
    capacity: usize,

    /// Required to raise --capacity above the default guard.
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of (accurate) dominating sets of one size.
    Count(GraphArgs),
    /// List the (accurate) dominating sets of one size, 1-indexed.
    Enumerate(GraphArgs),
    /// Coefficients of D(G, x) or D_a(G, x).
    Poly {
        /// Family spec such as `path:7`, or `@file` with an edge list.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        accurate: bool,
    },
    /// Compare a published formula, bound or claim with the oracle.
    Audit(AuditArgs),
    /// d(P_n, i) or d(C_n, i) table from the recurrence, optionally cached.
    Table {
        #[arg(long)]
        family: TableFamily,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Family spec such as `path:7`, or `@file` with an edge list.
    #[arg(long)]
    graph: String,
    #[arg(long)]
    size: usize,
    #[arg(long)]
    accurate: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("subject").required(true).args(["formula", "bound", "check"])))]
struct AuditArgs {
    #[arg(long)]
    formula: Option<FormulaId>,
    #[arg(long)]
    bound: Option<BoundId>,
    #[arg(long, value_enum)]
    check: Option<Check>,
    /// Range of the leading parameter, `a..b` (inclusive) or a single value.
    #[arg(long = "n", value_parser = parse_range)]
    n: Option<RangeInclusive<usize>>,
    /// Graphs for `--check threshold`.
    #[arg(long, value_enum, default_value_t = Source::Random)]
    source: Source,
    /// Number of random graphs for `--check threshold --source random`.
    #[arg(long, default_value_t = 100)]
    count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Check {
    Threshold,
    CycleConsecutive,
    PathVsCycle,
    LlanoCycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Source {
    Random,
    Labeled,
    Families,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{t}` is not a number"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

/// Failure of a command, already mapped to its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => EXIT_CAPACITY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn load_graph(arg: &str) -> Result<Graph, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
            Ok(Graph::parse_edge_list(&text)?)
        }
        None => Ok(accdom::parse_graph_spec(arg)?.build()?),
    }
}

fn one_indexed(s: VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

struct Ctx {
    format: Option<Format>,
    sweep: Sweep,
    seed: u64,
}

impl Ctx {
    fn format(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if cli.capacity > DEFAULT_SWEEP_LIMIT && !cli.allow_large {
        eprintln!(
            "error: --capacity {} exceeds the default guard {DEFAULT_SWEEP_LIMIT}; pass --allow-large to confirm",
            cli.capacity
        );
        return ExitCode::from(EXIT_USAGE);
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let ctx = Ctx {
        format: cli.format,
        sweep: Sweep {
            max_vertices: cli.capacity,
            parts: cli.workers,
        },
        seed: cli.seed.unwrap_or(0),
    };
    let mut out = Vec::new();
    let result = pool.install(|| run(&cli.command, &ctx, &mut out));
    let _ = io::stdout().write_all(&out);
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: &Command, ctx: &Ctx, out: &mut Vec<u8>) -> Result<u8, Failure> {
    match command {
        Command::Count(a) => {
            let g = load_graph(&a.graph)?;
            let c = if a.accurate {
                ctx.sweep.count_accurate(&g, a.size)?
            } else {
                ctx.sweep.count_dominating(&g, a.size)?
            };
            match ctx.format(Format::Human) {
                Format::Human => writeln!(out, "{c}")?,
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::json!({
                        "graph": a.graph,
                        "size": a.size,
                        "accurate": a.accurate,
                        "count": c.to_string(),
                    })
                )?,
                Format::Csv => {
                    writeln!(out, "graph,size,accurate,count")?;
                    writeln!(out, "{},{},{},{c}", a.graph, a.size, a.accurate)?;
                }
            }
        }
        Command::Enumerate(a) => {
            let g = load_graph(&a.graph)?;
            let sets = if a.accurate {
                ctx.sweep.enumerate_accurate(&g, a.size)?
            } else {
                ctx.sweep.enumerate_dominating(&g, a.size)?
            };
            let sets: Vec<Vec<usize>> = sets.into_iter().map(one_indexed).collect();
            match ctx.format(Format::Human) {
                Format::Human => {
                    for s in &sets {
                        let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                        writeln!(out, "{{{}}}", items.join(", "))?;
                    }
                }
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&sets).expect("serializable")
                )?,
                Format::Csv => {
                    writeln!(out, "index,vertices")?;
                    for (i, s) in sets.iter().enumerate() {
                        let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                        writeln!(out, "{i},{}", items.join(" "))?;
                    }
                }
            }
        }
        Command::Poly { graph, accurate } => {
            let g = load_graph(graph)?;
            let p = if *accurate {
                ctx.sweep.accurate_polynomial(&g)?
            } else {
                ctx.sweep.domination_polynomial(&g)?
            };
            let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
            match ctx.format(Format::Human) {
                Format::Human => writeln!(out, "[{}]", coeffs.join(","))?,
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&coeffs).expect("serializable")
                )?,
                Format::Csv => {
                    writeln!(out, "i,count")?;
                    for (i, c) in coeffs.iter().enumerate() {
                        writeln!(out, "{i},{c}")?;
                    }
                }
            }
        }
        Command::Audit(a) => return run_audit(a, ctx, out),
        Command::Table {
            family,
            n_max,
            cache,
        } => {
            let table =
                cache::load_or_build(*family, *n_max, cache.as_deref(), ctx.seed, &ctx.sweep)?;
            match ctx.format(Format::Csv) {
                Format::Csv => out.extend_from_slice(table.to_csv_string().as_bytes()),
                Format::Json => {
                    let rows: Vec<Vec<String>> = (family.first_order()..=table.n_max())
                        .map(|n| {
                            table
                                .row(n)
                                .expect("row")
                                .coeffs()
                                .iter()
                                .map(|c| c.to_string())
                                .collect()
                        })
                        .collect();
                    let v = serde_json::json!({
                        "family": family.name(),
                        "first_order": family.first_order(),
                        "rows": rows,
                    });
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&v).expect("serializable")
                    )?;
                }
                Format::Human => {
                    for n in family.first_order()..=table.n_max() {
                        let row = table.row(n).expect("row");
                        let items: Vec<String> =
                            row.coeffs().iter().map(|c| c.to_string()).collect();
                        writeln!(out, "{n:>3}: {}", items.join(" "))?;
                    }
                }
            }
        }
    }
    Ok(0)
}

fn default_formula_range(id: FormulaId) -> RangeInclusive<usize> {
    use FormulaId::*;
    match id {
        GammaAHypercube | DaHypercube => 1..=4,
        GammaACompleteBipartiteEqual => 1..=6,
        GammaALadder | GammaABook | DaBook => 2..=8,
        GammaAFriendship | DaFriendshipPrinted => 1..=4,
        GammaACorona | DaCoronaCount | CoronaPolyPrinted | CoronaPolyCorrected => 1..=4,
        LlanoPath => 1..=16,
        Threshold => 1..=10,
        _ => 1..=12,
    }
}

fn run_audit(a: &AuditArgs, ctx: &Ctx, out: &mut Vec<u8>) -> Result<u8, Failure> {
    let auditor = Auditor::new(ctx.sweep);
    let report: AuditReport = if let Some(id) = a.formula {
        auditor.formula(id, a.n.clone().unwrap_or_else(|| default_formula_range(id)))?
    } else if let Some(id) = a.bound {
        auditor.bound(id, a.n.clone().unwrap_or(1..=14))?
    } else {
        match a.check.expect("clap requires one subject") {
            Check::Threshold => {
                let source = match a.source {
                    Source::Random => GraphSource::Random {
                        seed: ctx.seed,
                        count: a.count,
                        orders: a.n.clone().unwrap_or(5..=10),
                    },
                    Source::Labeled => GraphSource::AllLabeled {
                        max_order: *a.n.clone().unwrap_or(1..=4).end(),
                    },
                    Source::Families => {
                        GraphSource::families_of_order(a.n.clone().unwrap_or(1..=12))
                    }
                };
                if let GraphSource::AllLabeled { max_order } = source {
                    if max_order > 6 {
                        return Err(usage("--source labeled stops at 6 vertices"));
                    }
                }
                auditor.threshold_equality(&source)?
            }
            Check::CycleConsecutive => auditor.cycle_consecutive(a.n.clone().unwrap_or(6..=14))?,
            Check::PathVsCycle => auditor.path_vs_cycle(a.n.clone().unwrap_or(3..=14))?,
            Check::LlanoCycle => {
                auditor
                    .llano_cycle_resolution(a.n.clone().unwrap_or(3..=14))?
                    .report
            }
        }
    };
    match ctx.format(Format::Json) {
        Format::Json => writeln!(out, "{}", report.to_json())?,
        Format::Csv => write_report_csv(&report, out)?,
        Format::Human => write_report_human(&report, out)?,
    }
    let unexpected = report.unexpected_violations();
    if unexpected.is_empty() {
        Ok(0)
    } else {
        for r in unexpected {
            eprintln!("unexpected violation: {} at {:?}", r.subject, r.point);
        }
        Ok(EXIT_UNEXPECTED)
    }
}

fn write_report_csv(report: &AuditReport, out: &mut Vec<u8>) -> io::Result<()> {
    writeln!(
        out,
        "subject,point,printed_value,oracle_value,verdict,slack"
    )?;
    for r in &report.records {
        let point: Vec<String> = r.point.iter().map(|p| p.to_string()).collect();
        let slack = r.slack.as_ref().map(|s| s.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{slack}",
            r.subject,
            point.join(" "),
            r.printed_value,
            r.oracle_value,
            r.verdict
        )?;
    }
    Ok(())
}

fn write_report_human(report: &AuditReport, out: &mut Vec<u8>) -> io::Result<()> {
    writeln!(out, "subject: {}", report.subject)?;
    writeln!(out, "domain: {}", report.domain)?;
    let tally: Vec<String> = report
        .summary
        .iter()
        .map(|(v, c)| format!("{v} {c}"))
        .collect();
    writeln!(out, "summary: {}", tally.join(", "))?;
    let sharp = report.sharp_points();
    if !sharp.is_empty() {
        let pts: Vec<String> = sharp.iter().map(|p| format!("{p:?}")).collect();
        writeln!(out, "sharp at: {}", pts.join(" "))?;
    }
    for k in &report.known_findings {
        writeln!(
            out,
            "known finding {}: {} point(s), {}",
            k.id,
            k.points.len(),
            k.description
        )?;
    }
    let unexpected = report.unexpected_violations();
    if unexpected.is_empty() {
        writeln!(out, "unexpected violations: none")?;
    } else {
        for r in unexpected {
            writeln!(
                out,
                "unexpected violation at {:?}: printed {}, oracle {}",
                r.point, r.printed_value, r.oracle_value
            )?;
        }
    }
    for n in report.notes.iter().filter(|n| !n.starts_with("graph ")) {
        writeln!(out, "note: {n}")?;
    }
    Ok(())
}
