//! Parallel scans over strongly stable ideals, with per-key budgets and an
//! optional results cache.
//!
//! Work is split at a fixed depth of the enumeration tree; the resulting
//! subtrees are independent, and their [`ClassMax`] values are merged with an
//! associative, commutative reduction, so results do not depend on the number
//! of workers.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use borel_core::enumerate::{frontier, visit_subtree, SearchLimits};
use borel_core::scan::{
    k_of_l, tetrahedral, ClassMax, MonotonicityVerdict, NecessaryVerdict, ScanKey, TetrahedralVerdict,
};
use borel_core::tangent::{tangent_dimension_oracle_capped, TangentComputer, ORACLE_DEFAULT_CAP};
use borel_core::{format_ideal, MonomialIdeal};
use rayon::prelude::*;

use crate::cache::Cache;
use crate::error::{CliError, Result};

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub workers: usize,
    /// Wall-clock limit per scan key.
    pub budget: Option<Duration>,
    /// Limit on the number of ideals scanned per key.
    pub max_ideals: Option<u64>,
    /// Size of the staircases at which the search is split between workers.
    pub split_depth: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            workers: 1,
            budget: None,
            max_ideals: None,
            split_depth: 8,
        }
    }
}

/// `T_max,m1(l)` for one key together with its maximizers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub key: ScanKey,
    pub k: u32,
    pub delta: u64,
    pub ideal_count: u64,
    pub t_max: Option<u64>,
    /// All maximizers in canonical text order.
    pub argmax: Vec<MonomialIdeal>,
    pub elapsed: Duration,
}

impl ScanRecord {
    pub fn new(key: ScanKey, class: ClassMax, elapsed: Duration) -> Self {
        let (k, delta) = k_of_l(key.nvars, key.l as u64);
        ScanRecord {
            key,
            k,
            delta,
            ideal_count: class.ideal_count,
            t_max: class.t_max,
            argmax: class.argmax,
            elapsed,
        }
    }

    /// Equality of everything except the timing.
    pub fn same_result(&self, other: &ScanRecord) -> bool {
        ScanRecord {
            elapsed: Duration::ZERO,
            ..self.clone()
        } == ScanRecord {
            elapsed: Duration::ZERO,
            ..other.clone()
        }
    }

    pub fn class(&self) -> ClassMax {
        ClassMax {
            ideal_count: self.ideal_count,
            t_max: self.t_max,
            argmax: self.argmax.clone(),
        }
    }

    /// Re-derives colength, `m1` and `T` of every maximizer.
    pub fn recheck(&self) -> std::result::Result<(), String> {
        for ideal in &self.argmax {
            let text = format_ideal(ideal);
            if ideal.colength().map_err(|e| e.to_string())? != self.key.l {
                return Err(format!("{text}: wrong colength"));
            }
            if ideal.pure_powers()[0] != Some(self.key.m1) {
                return Err(format!("{text}: wrong m1"));
            }
            let t = TangentComputer::new(ideal).map_err(|e| e.to_string())?.total();
            if Some(t) != self.t_max {
                return Err(format!("{text}: T = {t}, record says {:?}", self.t_max));
            }
        }
        if self.ideal_count > 0 && self.argmax.is_empty() {
            return Err("nonempty class without maximizers".into());
        }
        Ok(())
    }
}

/// Runs scans on a private thread pool.
pub struct Scanner {
    pool: rayon::ThreadPool,
    opts: ScanOptions,
}

/// A scan that stopped before finishing.
#[derive(Debug)]
pub struct BudgetExceeded {
    pub partial: ClassMax,
    pub elapsed: Duration,
}

impl Scanner {
    pub fn new(opts: ScanOptions) -> Result<Self> {
        if opts.workers == 0 {
            return Err(CliError::Usage("worker count must be at least 1".into()));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(Scanner { pool, opts })
    }

    pub fn options(&self) -> &ScanOptions {
        &self.opts
    }

    /// Maximum of `T(I)` over the class; `m1 = None` means all classes.
    pub fn class_max(
        &self,
        nvars: usize,
        l: usize,
        m1: Option<u32>,
    ) -> Result<std::result::Result<ClassMax, BudgetExceeded>> {
        let start = Instant::now();
        let deadline = self.opts.budget.map(|b| start + b);
        let parts = frontier(nvars, l, self.opts.split_depth, m1)?;
        let stop = AtomicBool::new(false);
        let seen = AtomicU64::new(0);
        let max_ideals = self.opts.max_ideals;
        let merged = self.pool.install(|| {
            parts
                .par_iter()
                .map(|part| {
                    let mut acc = ClassMax::default();
                    if stop.load(Ordering::Relaxed) {
                        return Ok(acc);
                    }
                    visit_subtree(part, l, m1, SearchLimits::default(), |st| {
                        let n = seen.fetch_add(1, Ordering::Relaxed) + 1;
                        if deadline.is_some_and(|d| Instant::now() > d) || max_ideals.is_some_and(|m| n > m) {
                            stop.store(true, Ordering::Relaxed);
                        }
                        if stop.load(Ordering::Relaxed) {
                            return false;
                        }
                        let ideal = st.ideal();
                        let t = TangentComputer::new(&ideal)
                            .expect("enumerated ideals are artinian")
                            .total();
                        acc.observe(ideal, t);
                        true
                    })?;
                    Ok(acc.finish())
                })
                .try_reduce(ClassMax::default, |a, b| Ok(a.merge(b)))
        });
        let merged: ClassMax = merged.map_err(CliError::Core)?;
        if stop.load(Ordering::Relaxed) {
            return Ok(Err(BudgetExceeded {
                partial: merged,
                elapsed: start.elapsed(),
            }));
        }
        Ok(Ok(merged))
    }

    pub fn t_max(&self, key: ScanKey) -> Result<std::result::Result<ScanRecord, BudgetExceeded>> {
        let start = Instant::now();
        Ok(self
            .class_max(key.nvars, key.l, Some(key.m1))?
            .map(|c| ScanRecord::new(key, c, start.elapsed())))
    }
}

pub fn budget_error(partial: &ScanRecord) -> CliError {
    CliError::Budget(format!(
        "N={} l={} m1={} stopped after {:.1}s with {} ideals scanned",
        partial.key.nvars,
        partial.key.l,
        partial.key.m1,
        partial.elapsed.as_secs_f64(),
        partial.ideal_count
    ))
}

/// Scanner plus cache: the entry point used by every scan-style command.
pub struct ScanService {
    pub scanner: Scanner,
    pub cache: Option<Cache>,
    /// Run the elimination oracle on every maximizer.
    pub verify: bool,
}

impl ScanService {
    pub fn new(scanner: Scanner, cache: Option<Cache>, verify: bool) -> Self {
        ScanService { scanner, cache, verify }
    }

    /// Cached record for `key`, computing and storing it when absent.
    pub fn record(&self, key: ScanKey) -> Result<ScanRecord> {
        self.try_record(key)?.map_err(|partial| budget_error(&partial))
    }

    /// Like [`ScanService::record`], but a scan that runs out of budget
    /// yields its partial record as `Err`. Partial records are not cached.
    pub fn try_record(&self, key: ScanKey) -> Result<std::result::Result<ScanRecord, ScanRecord>> {
        if let Some(cache) = &self.cache {
            if let Some(rec) = cache.load(key)? {
                self.verify_record(&rec)?;
                return Ok(Ok(rec));
            }
        }
        let rec = match self.scanner.t_max(key)? {
            Ok(rec) => rec,
            Err(b) => return Ok(Err(ScanRecord::new(key, b.partial, b.elapsed))),
        };
        self.verify_record(&rec)?;
        if let Some(cache) = &self.cache {
            cache.store(&rec)?;
        }
        Ok(Ok(rec))
    }

    fn verify_record(&self, rec: &ScanRecord) -> Result<()> {
        if !self.verify {
            return Ok(());
        }
        rec.recheck().map_err(CliError::Consistency)?;
        for ideal in &rec.argmax {
            let oracle = tangent_dimension_oracle_capped(ideal, ORACLE_DEFAULT_CAP)?;
            if Some(oracle) != rec.t_max {
                return Err(CliError::Consistency(format!(
                    "{}: graded route {:?}, elimination route {oracle}",
                    format_ideal(ideal),
                    rec.t_max
                )));
            }
        }
        Ok(())
    }

    /// One record per realizable `m1` (that is `1..=k`).
    pub fn all_classes(&self, nvars: usize, l: usize) -> Result<Vec<ScanRecord>> {
        let (k, _) = k_of_l(nvars, l as u64);
        (1..=k).map(|m1| self.record(ScanKey { nvars, l, m1 })).collect()
    }

    pub fn check_monotonicity(&self, nvars: usize, l: usize) -> Result<(MonotonicityVerdict, Vec<ScanRecord>)> {
        let records = self.all_classes(nvars, l)?;
        let seq = records.iter().filter_map(|r| r.t_max.map(|t| (r.key.m1, t))).collect();
        Ok((MonotonicityVerdict::from_sequence(seq), records))
    }

    pub fn check_necessary(&self, nvars: usize, l: usize) -> Result<NecessaryVerdict> {
        let records = self.all_classes(nvars, l)?;
        let classes: Vec<(u32, ClassMax)> = records.iter().map(|r| (r.key.m1, r.class())).collect();
        NecessaryVerdict::from_classes(nvars, l, &classes)
            .ok_or_else(|| CliError::Usage(format!("no strongly stable ideals of colength {l}")))
    }

    pub fn check_tetrahedral(&self, nvars: usize, k: u32) -> Result<TetrahedralVerdict> {
        if k == 0 {
            return Err(CliError::Usage("k must be at least 1".into()));
        }
        let l = tetrahedral(nvars, k) as usize;
        let global = self
            .all_classes(nvars, l)?
            .into_iter()
            .fold(ClassMax::default(), |acc, r| acc.merge(r.class()));
        TetrahedralVerdict::from_global(nvars, k, &global)
            .ok_or_else(|| CliError::Usage(format!("no strongly stable ideals of colength {l}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scanner(workers: usize) -> Scanner {
        Scanner::new(ScanOptions {
            workers,
            ..Default::default()
        })
        .unwrap()
    }

    #[test]
    fn matches_sequential_scan() {
        let seq = borel_core::scan::class_max(3, 14, Some(2), SearchLimits::default()).unwrap();
        let par = scanner(3).class_max(3, 14, Some(2)).unwrap().unwrap();
        assert_eq!(seq, par);
        assert_eq!(par.t_max, Some(64));
    }

    #[test]
    fn zero_budget_stops() {
        let s = Scanner::new(ScanOptions {
            workers: 1,
            budget: Some(Duration::ZERO),
            max_ideals: None,
            split_depth: 4,
        })
        .unwrap();
        let r = s.class_max(3, 20, None).unwrap();
        assert!(r.is_err());
    }

    #[test]
    fn ideal_count_limit_stops() {
        let s = Scanner::new(ScanOptions {
            workers: 2,
            max_ideals: Some(10),
            ..Default::default()
        })
        .unwrap();
        assert!(s.class_max(3, 14, None).unwrap().is_err());
        let s = Scanner::new(ScanOptions {
            max_ideals: Some(1000),
            ..Default::default()
        })
        .unwrap();
        assert!(s.class_max(3, 14, None).unwrap().is_ok());
    }

    #[test]
    fn zero_workers_is_a_usage_error() {
        let err = Scanner::new(ScanOptions {
            workers: 0,
            ..Default::default()
        })
        .err()
        .unwrap();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn empty_class_has_no_maximum() {
        let rec = scanner(1).t_max(ScanKey { nvars: 3, l: 10, m1: 4 }).unwrap().unwrap();
        assert_eq!(rec.ideal_count, 0);
        assert_eq!(rec.t_max, None);
        assert!(rec.argmax.is_empty());
        assert!(rec.recheck().is_ok());
    }

    #[test]
    fn verified_service() {
        let svc = ScanService::new(scanner(2), None, true);
        let rec = svc.record(ScanKey { nvars: 3, l: 10, m1: 2 }).unwrap();
        assert_eq!(rec.t_max, Some(46));
        let v = svc.check_tetrahedral(3, 2).unwrap();
        assert!(v.attains_max);
        assert_eq!(v.l, 4);
    }
}
