//! JSON and CSV shapes written by the command line.

use borel_core::region::RegionSlice;
use borel_core::{format_ideal, ExponentVector, GradedTangentReport, MonomialIdeal};
use serde::{Deserialize, Serialize};

use crate::runner::ScanRecord;

/// `{"vars": N, "gens": [[e1, ..., eN], ...]}` in canonical generator order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub vars: usize,
    pub gens: Vec<Vec<u32>>,
}

impl IdealJson {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        IdealJson {
            vars: ideal.nvars(),
            gens: ideal.generators().iter().map(|g| g.exps().to_vec()).collect(),
        }
    }

    pub fn to_ideal(&self) -> borel_core::Result<MonomialIdeal> {
        MonomialIdeal::new(self.vars, self.gens.iter().cloned().map(ExponentVector::new).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedEntry {
    pub alpha: Vec<i32>,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentJson {
    pub ideal: IdealJson,
    pub l: usize,
    pub g: usize,
    pub total: u64,
    pub zero_rank: u64,
    pub graded: Vec<GradedEntry>,
}

impl TangentJson {
    pub fn from_report(r: &GradedTangentReport) -> Self {
        TangentJson {
            ideal: IdealJson::from_ideal(&r.ideal),
            l: r.l,
            g: r.g,
            total: r.total,
            zero_rank: r.zero_rank,
            graded: r
                .per_alpha
                .iter()
                .map(|(alpha, dim)| GradedEntry {
                    alpha: alpha.clone(),
                    dim: *dim,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedJson {
    pub ideal: IdealJson,
    pub alpha: Vec<i32>,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionJson {
    pub ideal: IdealJson,
    pub alpha: [i32; 3],
    pub cells: Vec<[i64; 3]>,
    pub components: Vec<Vec<[i64; 3]>>,
    pub counted: usize,
    pub size_filter: usize,
}

impl RegionJson {
    pub fn new(ideal: &MonomialIdeal, slice: RegionSlice, size_filter: usize) -> Self {
        RegionJson {
            ideal: IdealJson::from_ideal(ideal),
            alpha: slice.alpha,
            cells: slice.cells,
            components: slice.components,
            counted: slice.counted,
            size_filter,
        }
    }
}

/// A scan record as written under `--format json` and `jsonl`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub l: usize,
    pub k: u32,
    pub delta: u64,
    pub m1: u32,
    pub ideal_count: u64,
    pub t_max: Option<u64>,
    pub argmax: Vec<String>,
    /// False when the scan stopped on its budget.
    pub complete: bool,
}

impl ScanJson {
    pub fn from_record(r: &ScanRecord, complete: bool) -> Self {
        ScanJson {
            n: r.key.nvars,
            l: r.key.l,
            k: r.k,
            delta: r.delta,
            m1: r.key.m1,
            ideal_count: r.ideal_count,
            t_max: r.t_max,
            argmax: r.argmax.iter().map(format_ideal).collect(),
            complete,
        }
    }
}

/// One row of the scan table CSV.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub struct ScanCsvRow {
    #[serde(rename = "N")]
    pub n: usize,
    pub l: usize,
    pub k: u32,
    pub delta: u64,
    pub m1: u32,
    pub ideal_count: u64,
    pub t_max: Option<u64>,
    pub n_argmax: usize,
    pub first_argmax: String,
}

impl ScanCsvRow {
    pub fn from_record(r: &ScanRecord) -> Self {
        ScanCsvRow {
            n: r.key.nvars,
            l: r.key.l,
            k: r.k,
            delta: r.delta,
            m1: r.key.m1,
            ideal_count: r.ideal_count,
            t_max: r.t_max,
            n_argmax: r.argmax.len(),
            first_argmax: r.argmax.first().map(format_ideal).unwrap_or_default(),
        }
    }
}

/// Writes scan records as CSV with a header line.
pub fn scan_csv(records: &[ScanRecord]) -> crate::error::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(ScanCsvRow::from_record(r))?;
    }
    if records.is_empty() {
        w.write_record([
            "N",
            "l",
            "k",
            "delta",
            "m1",
            "ideal_count",
            "t_max",
            "n_argmax",
            "first_argmax",
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
