//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Duration;

use borel_core::enumerate::{enumerate_with_limits, SearchLimits};
use borel_core::region::{default_size_filter, region_slice, window_component_count};
use borel_core::scan::{k_of_l, ScanKey};
use borel_core::tangent::{
    graded_dimension_oracle, tangent_dimension_oracle_capped, TangentComputer, ORACLE_DEFAULT_CAP,
};
use borel_core::{format_ideal, parse_ideal, EnumFilter, MonomialIdeal};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cache::{Cache, CACHE_DIR_ENV};
use crate::error::{CliError, Result};
use crate::formats::{scan_csv, GradedJson, IdealJson, RegionJson, ScanCsvRow, ScanJson, TangentJson};
use crate::report::{discrepancy_rows, rows_to_jsonl, ReportSummary, REPORT_MAX_L};
use crate::runner::{budget_error, ScanOptions, ScanRecord, ScanService, Scanner};
use crate::table::{reproduce_table, TableCell, TABLE_LMAX, TABLE_LMIN};

#[derive(Debug, Parser)]
#[command(name = "borel", version, about = "Tangent spaces of strongly stable monomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Jsonl,
    Csv,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long)]
    pub workers: Option<usize>,
    /// Results cache directory.
    #[arg(long, env = CACHE_DIR_ENV)]
    pub cache: Option<PathBuf>,
    /// Ignore the cache entirely.
    #[arg(long)]
    pub no_cache: bool,
    /// Cross-check results with the elimination oracle.
    #[arg(long)]
    pub verify: bool,
    /// Wall-clock budget per scan key, in seconds.
    #[arg(long)]
    pub budget_seconds: Option<f64>,
    /// Limit on ideals scanned per key.
    #[arg(long)]
    pub max_ideals: Option<u64>,
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    #[arg(long)]
    pub vars: usize,
    /// Generators such as "x^2,x*y,y^2", or the JSON form {"vars":..,"gens":..}.
    #[arg(long)]
    pub ideal: String,
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    #[arg(long, default_value_t = 3)]
    pub vars: usize,
    #[arg(long, conflicts_with_all = ["lmin", "lmax"])]
    pub l: Option<usize>,
    #[arg(long, requires = "lmax")]
    pub lmin: Option<usize>,
    #[arg(long, requires = "lmin")]
    pub lmax: Option<usize>,
}

impl RangeArgs {
    fn range(&self) -> Result<std::ops::RangeInclusive<usize>> {
        match (self.l, self.lmin, self.lmax) {
            (Some(l), _, _) => Ok(l..=l),
            (None, Some(a), Some(b)) if a <= b => Ok(a..=b),
            (None, Some(_), Some(_)) => Err(CliError::Usage("--lmin must not exceed --lmax".into())),
            _ => Err(CliError::Usage("give --l or both --lmin and --lmax".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List strongly stable Artinian ideals of colength l.
    Enumerate {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m1: Option<u32>,
        /// Keep only ideals with this many minimal generators.
        #[arg(long)]
        gens: Option<usize>,
        #[arg(long)]
        max_results: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension of the tangent space at an ideal.
    Tangent {
        #[command(flatten)]
        ideal: IdealArgs,
        #[command(flatten)]
        common: Common,
    },
    /// One graded piece of the tangent space.
    Graded {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Comma-separated shift, one entry per variable.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[command(flatten)]
        common: Common,
    },
    /// Grid-region components for a three-variable ideal, or the full
    /// comparison report with --report.
    Region {
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, required_unless_present = "report")]
        ideal: Option<String>,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "report")]
        alpha: Option<String>,
        /// Largest component size that is counted.
        #[arg(long)]
        size_filter: Option<usize>,
        /// Generate the comparison report over all ideals up to colength 8.
        #[arg(long)]
        report: bool,
        /// Largest colength in the report.
        #[arg(long, default_value_t = REPORT_MAX_L, requires = "report")]
        report_max_l: usize,
        /// Write the report to this file instead of standard output.
        #[arg(long, requires = "report")]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Maximum tangent dimension per m1 class.
    Scan {
        #[command(flatten)]
        range: RangeArgs,
        /// Restrict to one class; all classes 1..=k otherwise.
        #[arg(long)]
        m1: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Recompute the expected three-variable table and compare cell by cell.
    Table {
        #[arg(long, default_value_t = TABLE_LMIN)]
        lmin: usize,
        #[arg(long, default_value_t = TABLE_LMAX)]
        lmax: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Is T_max,m1(l) increasing in m1?
    CheckMonotonic {
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Do all global maximizers have m1 = k?
    CheckNecessary {
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Does m^k attain the maximum at its own colength?
    CheckTetrahedral {
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        common: Common,
    },
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli.command, &mut out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    code
}

fn parse_input_ideal(text: &str, nvars: usize) -> Result<MonomialIdeal> {
    if nvars == 0 {
        return Err(CliError::Usage("--vars must be at least 1".into()));
    }
    let ideal = if text.trim_start().starts_with('{') {
        let j: IdealJson = serde_json::from_str(text)
            .map_err(|e| CliError::InvalidIdeal(borel_core::Error::InvalidArgument(e.to_string())))?;
        if j.vars != nvars {
            return Err(CliError::InvalidIdeal(borel_core::Error::DimensionMismatch {
                expected: nvars,
                found: j.vars,
            }));
        }
        j.to_ideal().map_err(CliError::InvalidIdeal)?
    } else {
        parse_ideal(text, nvars).map_err(CliError::InvalidIdeal)?.ideal
    };
    if !ideal.is_artinian() {
        let missing = ideal.pure_powers().iter().position(Option::is_none).unwrap_or(0);
        return Err(CliError::InvalidIdeal(borel_core::Error::NotArtinian {
            missing_var: missing,
        }));
    }
    Ok(ideal)
}

fn parse_alpha(text: &str, nvars: usize) -> Result<Vec<i32>> {
    let alpha = text
        .split(',')
        .map(|s| s.trim().parse::<i32>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(format!("bad --alpha {text:?}: {e}")))?;
    if alpha.len() != nvars {
        return Err(CliError::Usage(format!(
            "--alpha needs {nvars} entries, got {}",
            alpha.len()
        )));
    }
    Ok(alpha)
}

fn service(common: &Common) -> Result<ScanService> {
    let workers = common
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let budget = match common.budget_seconds {
        Some(s) if !(s.is_finite() && s >= 0.0) => {
            return Err(CliError::Usage("--budget-seconds must be a nonnegative number".into()))
        }
        s => s.map(Duration::from_secs_f64),
    };
    let scanner = Scanner::new(ScanOptions {
        workers,
        budget,
        max_ideals: common.max_ideals,
        ..ScanOptions::default()
    })?;
    let cache = match (&common.cache, common.no_cache) {
        (Some(dir), false) => Some(Cache::new(dir)),
        _ => None,
    };
    Ok(ScanService::new(scanner, cache, common.verify))
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T, pretty: bool) -> Result<()> {
    if pretty {
        serde_json::to_writer_pretty(&mut *out, value)?;
    } else {
        serde_json::to_writer(&mut *out, value)?;
    }
    writeln!(out)?;
    Ok(())
}

fn unsupported(format: Format, cmd: &str) -> CliError {
    CliError::Usage(format!("--format {format:?} is not available for {cmd}").to_lowercase())
}

pub fn run(cmd: Command, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Enumerate {
            vars,
            l,
            m1,
            gens,
            max_results,
            common,
        } => {
            let filter = EnumFilter {
                m1,
                num_generators: gens,
                max_results,
            };
            let limits = SearchLimits {
                max_nodes: common.max_ideals.map(|m| m as usize),
            };
            let ideals = enumerate_with_limits(vars, l, &filter, limits)?;
            match common.format {
                Format::Text => {
                    for i in &ideals {
                        writeln!(out, "{}", format_ideal(i))?;
                    }
                }
                Format::Jsonl => {
                    for i in &ideals {
                        write_json(out, &IdealJson::from_ideal(i), false)?;
                    }
                }
                Format::Json => {
                    let all: Vec<IdealJson> = ideals.iter().map(IdealJson::from_ideal).collect();
                    write_json(out, &all, true)?;
                }
                Format::Csv => {
                    writeln!(out, "ideal")?;
                    for i in &ideals {
                        writeln!(out, "\"{}\"", format_ideal(i))?;
                    }
                }
            }
            Ok(())
        }
        Command::Tangent { ideal, common } => {
            let i = parse_input_ideal(&ideal.ideal, ideal.vars)?;
            let report = TangentComputer::new(&i)?.report();
            if common.verify {
                let oracle = tangent_dimension_oracle_capped(&i, ORACLE_DEFAULT_CAP)?;
                if oracle != report.total {
                    return Err(CliError::Consistency(format!(
                        "graded route {}, elimination route {oracle}",
                        report.total
                    )));
                }
            }
            match common.format {
                Format::Text => {
                    writeln!(out, "ideal {}", format_ideal(&i))?;
                    writeln!(out, "colength {}", report.l)?;
                    writeln!(out, "generators {}", report.g)?;
                    writeln!(out, "total {}", report.total)?;
                    writeln!(out, "zero_rank {}", report.zero_rank)?;
                    for (alpha, d) in &report.per_alpha {
                        writeln!(out, "graded {} {d}", join(alpha))?;
                    }
                }
                Format::Json | Format::Jsonl => {
                    write_json(out, &TangentJson::from_report(&report), common.format == Format::Json)?
                }
                Format::Csv => {
                    writeln!(out, "alpha,dim")?;
                    for (alpha, d) in &report.per_alpha {
                        writeln!(out, "\"{}\",{d}", join(alpha))?;
                    }
                }
            }
            Ok(())
        }
        Command::Graded { ideal, alpha, common } => {
            let i = parse_input_ideal(&ideal.ideal, ideal.vars)?;
            let alpha = parse_alpha(&alpha, ideal.vars)?;
            let dim = TangentComputer::new(&i)?.graded_dimension(&alpha)?;
            if common.verify {
                let oracle = graded_dimension_oracle(&i, &alpha, ORACLE_DEFAULT_CAP)?;
                if oracle != dim {
                    return Err(CliError::Consistency(format!(
                        "graded route {dim}, elimination route {oracle}"
                    )));
                }
            }
            match common.format {
                Format::Text => writeln!(out, "{dim}")?,
                Format::Json | Format::Jsonl => write_json(
                    out,
                    &GradedJson {
                        ideal: IdealJson::from_ideal(&i),
                        alpha,
                        dim,
                    },
                    common.format == Format::Json,
                )?,
                Format::Csv => writeln!(out, "alpha,dim\n\"{}\",{dim}", join(&alpha))?,
            }
            Ok(())
        }
        Command::Region {
            vars,
            ideal,
            alpha,
            size_filter,
            report,
            report_max_l,
            out: out_path,
            common,
        } => {
            if vars != 3 {
                return Err(CliError::Usage("region is defined for three variables only".into()));
            }
            if report {
                return region_report(report_max_l, out_path, common.format, out);
            }
            let i = parse_input_ideal(ideal.as_deref().unwrap_or_default(), 3)?;
            let a = parse_alpha(alpha.as_deref().unwrap_or_default(), 3)?;
            let a = [a[0], a[1], a[2]];
            let filter = size_filter.unwrap_or_else(|| default_size_filter(&i));
            let slice = region_slice(&i, a, Some(filter))?;
            match common.format {
                Format::Text => {
                    writeln!(out, "cells {}", slice.cells.len())?;
                    writeln!(out, "components {}", slice.components.len())?;
                    writeln!(out, "counted {}", slice.counted)?;
                    writeln!(out, "window_counted {}", window_component_count(&i, a, Some(filter))?)?;
                    writeln!(out, "graded {}", TangentComputer::new(&i)?.graded_dimension(&a)?)?;
                }
                Format::Json | Format::Jsonl => {
                    write_json(out, &RegionJson::new(&i, slice, filter), common.format == Format::Json)?
                }
                Format::Csv => return Err(unsupported(common.format, "region")),
            }
            Ok(())
        }
        Command::Scan { range, m1, common } => {
            let svc = service(&common)?;
            let mut keys = Vec::new();
            for l in range.range()? {
                let (k, _) = k_of_l(range.vars, l as u64);
                match m1 {
                    Some(m) => keys.push(ScanKey {
                        nvars: range.vars,
                        l,
                        m1: m,
                    }),
                    None => keys.extend((1..=k).map(|m| ScanKey {
                        nvars: range.vars,
                        l,
                        m1: m,
                    })),
                }
            }
            scan_keys(&svc, &keys, common.format, out)
        }
        Command::Table { lmin, lmax, common } => {
            if lmin > lmax {
                return Err(CliError::Usage("--lmin must not exceed --lmax".into()));
            }
            let svc = service(&common)?;
            table(&svc, lmin, lmax, common.format, out)
        }
        Command::CheckMonotonic { range, common } => {
            let svc = service(&common)?;
            let mut all = Vec::new();
            for l in range.range()? {
                let (v, _) = svc.check_monotonicity(range.vars, l)?;
                let row = MonotonicRow {
                    n: range.vars,
                    l,
                    sequence: v.sequence.clone(),
                    strictly_increasing: v.strictly_increasing,
                    weakly_increasing: v.weakly_increasing,
                };
                emit_row(out, common.format, &row, &mut all, || {
                    let seq: Vec<String> = row.sequence.iter().map(|(m, t)| format!("{m}:{t}")).collect();
                    let verdict = if row.strictly_increasing {
                        "STRICTLY INCREASING"
                    } else if row.weakly_increasing {
                        "WEAKLY INCREASING"
                    } else {
                        "NOT MONOTONE"
                    };
                    format!("N={} l={} {} [{}]", row.n, row.l, verdict, seq.join(", "))
                })?;
            }
            finish_rows(out, common.format, &all)
        }
        Command::CheckNecessary { range, common } => {
            let svc = service(&common)?;
            let mut all = Vec::new();
            for l in range.range()? {
                let v = svc.check_necessary(range.vars, l)?;
                let row = NecessaryRow {
                    n: range.vars,
                    l,
                    k: v.k,
                    global_max: v.global_max,
                    argmax_m1: v.argmax_m1.clone(),
                    argmax: v.argmax.iter().map(format_ideal).collect(),
                    holds: v.holds,
                    unique: v.unique,
                };
                emit_row(out, common.format, &row, &mut all, || {
                    format!(
                        "N={} l={} k={} max={} argmax_m1={:?} {} {}",
                        row.n,
                        row.l,
                        row.k,
                        row.global_max,
                        row.argmax_m1,
                        if row.holds { "HOLDS" } else { "FAILS" },
                        if row.unique { "unique" } else { "not unique" }
                    )
                })?;
            }
            finish_rows(out, common.format, &all)
        }
        Command::CheckTetrahedral { vars, k, common } => {
            let svc = service(&common)?;
            let v = svc.check_tetrahedral(vars, k)?;
            let row = TetrahedralRow {
                n: vars,
                k,
                l: v.l,
                power_t: v.power_t,
                global_max: v.global_max,
                attains_max: v.attains_max,
                unique: v.unique,
                argmax: v.argmax.iter().map(format_ideal).collect(),
            };
            let mut all = Vec::new();
            emit_row(out, common.format, &row, &mut all, || {
                format!(
                    "N={} k={} l={} T(m^k)={} max={} {} {}",
                    row.n,
                    row.k,
                    row.l,
                    row.power_t,
                    row.global_max,
                    if row.attains_max { "ATTAINS" } else { "DOES NOT ATTAIN" },
                    if row.unique { "unique" } else { "not unique" }
                )
            })?;
            finish_rows(out, common.format, &all)
        }
    }
}

fn join(alpha: &[i32]) -> String {
    alpha.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Serialize)]
struct MonotonicRow {
    #[serde(rename = "N")]
    n: usize,
    l: usize,
    sequence: Vec<(u32, u64)>,
    strictly_increasing: bool,
    weakly_increasing: bool,
}

#[derive(Debug, Serialize)]
struct NecessaryRow {
    #[serde(rename = "N")]
    n: usize,
    l: usize,
    k: u32,
    global_max: u64,
    argmax_m1: Vec<u32>,
    argmax: Vec<String>,
    holds: bool,
    unique: bool,
}

#[derive(Debug, Serialize)]
struct TetrahedralRow {
    #[serde(rename = "N")]
    n: usize,
    k: u32,
    l: u64,
    power_t: u64,
    global_max: u64,
    attains_max: bool,
    unique: bool,
    argmax: Vec<String>,
}

/// Streams a verdict row in text or JSONL form, or collects it for JSON.
fn emit_row<T: Serialize>(
    out: &mut dyn Write,
    format: Format,
    row: &T,
    all: &mut Vec<serde_json::Value>,
    text: impl FnOnce() -> String,
) -> Result<()> {
    match format {
        Format::Text => writeln!(out, "{}", text())?,
        Format::Jsonl => write_json(out, row, false)?,
        Format::Json => all.push(serde_json::to_value(row)?),
        Format::Csv => return Err(unsupported(format, "this check")),
    }
    out.flush()?;
    Ok(())
}

fn finish_rows(out: &mut dyn Write, format: Format, all: &[serde_json::Value]) -> Result<()> {
    if format == Format::Json {
        write_json(out, &all, true)?;
    }
    Ok(())
}

fn scan_keys(svc: &ScanService, keys: &[ScanKey], format: Format, out: &mut dyn Write) -> Result<()> {
    let mut done: Vec<ScanRecord> = Vec::new();
    if format == Format::Csv {
        // header even when nothing completes
        write!(out, "{}", scan_csv(&[])?.lines().next().unwrap_or_default())?;
        writeln!(out)?;
    }
    for &key in keys {
        let (rec, complete) = match svc.try_record(key)? {
            Ok(r) => (r, true),
            Err(partial) => (partial, false),
        };
        match format {
            Format::Text => writeln!(out, "{}{}", scan_text(&rec), if complete { "" } else { " (partial)" })?,
            Format::Jsonl => write_json(out, &ScanJson::from_record(&rec, complete), false)?,
            Format::Csv => {
                if complete {
                    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
                    w.serialize(ScanCsvRow::from_record(&rec))?;
                    out.write_all(&w.into_inner().map_err(|e| e.into_error())?)?;
                }
            }
            Format::Json => {}
        }
        out.flush()?;
        if !complete {
            if format == Format::Json {
                let mut all: Vec<ScanJson> = done.iter().map(|r| ScanJson::from_record(r, true)).collect();
                all.push(ScanJson::from_record(&rec, false));
                write_json(out, &all, true)?;
            }
            return Err(budget_error(&rec));
        }
        done.push(rec);
    }
    if format == Format::Json {
        let all: Vec<ScanJson> = done.iter().map(|r| ScanJson::from_record(r, true)).collect();
        write_json(out, &all, true)?;
    }
    Ok(())
}

fn scan_text(r: &ScanRecord) -> String {
    let t = r.t_max.map_or_else(|| "-".to_string(), |t| t.to_string());
    let mut s = format!(
        "N={} l={} k={} m1={} ideals={} t_max={} argmax={}",
        r.key.nvars,
        r.key.l,
        r.k,
        r.key.m1,
        r.ideal_count,
        t,
        r.argmax.len()
    );
    for i in &r.argmax {
        s.push_str("\n  ");
        s.push_str(&format_ideal(i));
    }
    s
}

fn table(svc: &ScanService, lmin: usize, lmax: usize, format: Format, out: &mut dyn Write) -> Result<()> {
    if format == Format::Text {
        writeln!(
            out,
            "{:>3} {:>2} {:>3} {:>6} {:>8} result",
            "l", "k", "m1", "T_max", "expected"
        )?;
    }
    if format == Format::Csv {
        writeln!(out, "l,k,m1,expected,computed,pass")?;
    }
    let mut all = Vec::new();
    let result = reproduce_table(svc, lmin, lmax, |c: &TableCell, _| {
        match format {
            Format::Text => writeln!(
                out,
                "{:>3} {:>2} {:>3} {:>6} {:>8} {}",
                c.l,
                c.k,
                c.m1,
                c.computed.map_or_else(|| "-".into(), |t| t.to_string()),
                c.expected,
                if c.pass { "PASS" } else { "FAIL" }
            )?,
            Format::Jsonl => write_json(out, c, false)?,
            Format::Csv => writeln!(
                out,
                "{},{},{},{},{},{}",
                c.l,
                c.k,
                c.m1,
                c.expected,
                c.computed.map_or_else(String::new, |t| t.to_string()),
                c.pass
            )?,
            Format::Json => all.push(c.clone()),
        }
        out.flush()?;
        Ok(())
    });
    if format == Format::Json {
        write_json(out, &all, true)?;
    }
    let cells = result?;
    let failed = cells.iter().filter(|c| !c.pass).count();
    if format == Format::Text {
        writeln!(
            out,
            "{} cells, {} passed, {} failed",
            cells.len(),
            cells.len() - failed,
            failed
        )?;
    }
    if failed > 0 {
        return Err(CliError::Consistency(format!(
            "{failed} table cells differ from the expected values"
        )));
    }
    Ok(())
}

fn region_report(max_l: usize, path: Option<PathBuf>, format: Format, out: &mut dyn Write) -> Result<()> {
    let rows = discrepancy_rows(max_l)?;
    let summary = ReportSummary::from_rows(&rows);
    if let Some(path) = &path {
        std::fs::write(path, rows_to_jsonl(&rows)?)?;
    }
    match format {
        Format::Text => {
            writeln!(out, "ideals {}", summary.ideals)?;
            writeln!(out, "pairs {}", summary.pairs)?;
            writeln!(out, "region_mismatches {}", summary.region_mismatches)?;
            writeln!(out, "window_mismatches {}", summary.window_mismatches)?;
            writeln!(out, "region_total_matches {}", summary.region_total_matches)?;
            writeln!(out, "window_total_matches {}", summary.window_total_matches)?;
        }
        Format::Jsonl if path.is_none() => out.write_all(rows_to_jsonl(&rows)?.as_bytes())?,
        Format::Json | Format::Jsonl => write_json(out, &summary, format == Format::Json)?,
        Format::Csv => return Err(unsupported(format, "region --report")),
    }
    Ok(())
}
