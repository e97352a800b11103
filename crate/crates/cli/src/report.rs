//! Comparison of the grid-region component counts with the graded tangent
//! dimensions, over every strongly stable ideal in three variables up to a
//! given colength and every shift in its support box.

use std::fmt::Write as _;

use borel_core::region::{region_component_count, window_component_count};
use borel_core::tangent::TangentComputer;
use borel_core::{enumerate_strongly_stable, format_ideal, EnumFilter};
use serde::{Deserialize, Serialize};

use crate::error::Result;

pub const REPORT_MAX_L: usize = 8;

/// The committed report, regenerated by `borel region --report`.
pub const COMMITTED_REPORT: &str = include_str!("../data/region3d_discrepancies.jsonl");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyRow {
    pub ideal: String,
    pub l: usize,
    pub alpha: [i32; 3],
    pub graded: u64,
    pub region: u64,
    pub window: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub ideals: u64,
    pub pairs: u64,
    pub region_mismatches: u64,
    pub window_mismatches: u64,
    /// Ideals whose region counts sum to the tangent dimension.
    pub region_total_matches: u64,
    pub window_total_matches: u64,
}

impl ReportSummary {
    pub fn from_rows(rows: &[DiscrepancyRow]) -> Self {
        let mut s = ReportSummary::default();
        let mut i = 0;
        while i < rows.len() {
            let j = i + rows[i..].iter().take_while(|r| r.ideal == rows[i].ideal).count();
            let group = &rows[i..j];
            let graded: u64 = group.iter().map(|r| r.graded).sum();
            s.ideals += 1;
            s.region_total_matches += u64::from(group.iter().map(|r| r.region).sum::<u64>() == graded);
            s.window_total_matches += u64::from(group.iter().map(|r| r.window).sum::<u64>() == graded);
            i = j;
        }
        s.pairs = rows.len() as u64;
        s.region_mismatches = rows.iter().filter(|r| r.region != r.graded).count() as u64;
        s.window_mismatches = rows.iter().filter(|r| r.window != r.graded).count() as u64;
        s
    }
}

/// One row per (ideal, alpha); ideals in enumeration order, shifts in
/// lexicographic order.
pub fn discrepancy_rows(max_l: usize) -> Result<Vec<DiscrepancyRow>> {
    let mut rows = Vec::new();
    for l in 1..=max_l {
        for ideal in enumerate_strongly_stable(3, l, &EnumFilter::default())? {
            let text = format_ideal(&ideal);
            let tc = TangentComputer::new(&ideal)?;
            for a in tc.support_box().points() {
                let alpha = [a[0], a[1], a[2]];
                rows.push(DiscrepancyRow {
                    ideal: text.clone(),
                    l,
                    alpha,
                    graded: tc.graded_dimension(&a)?,
                    region: region_component_count(&ideal, alpha, None)? as u64,
                    window: window_component_count(&ideal, alpha, None)? as u64,
                });
            }
        }
    }
    Ok(rows)
}

pub fn rows_to_jsonl(rows: &[DiscrepancyRow]) -> Result<String> {
    let mut out = String::new();
    for r in rows {
        writeln!(out, "{}", serde_json::to_string(r)?).expect("writing to a string");
    }
    Ok(out)
}

pub fn parse_jsonl(text: &str) -> Result<Vec<DiscrepancyRow>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(Into::into))
        .collect()
}
