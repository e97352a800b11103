//! On-disk scan results: one JSONL file per `(N, l)`, one record per line.
//!
//! Records are append-only. Lines with another schema version, or that fail
//! to parse, are ignored on load, so an older cache is recomputed rather than
//! trusted.

use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use borel_core::scan::ScanKey;
use borel_core::{format_ideal, parse_ideal};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::runner::ScanRecord;

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "BOREL_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheLine {
    pub schema_version: u32,
    #[serde(rename = "N")]
    pub n: usize,
    pub l: usize,
    pub m1: u32,
    pub k: u32,
    pub delta: u64,
    pub ideal_count: u64,
    pub t_max: Option<u64>,
    pub argmax: Vec<String>,
    pub elapsed_ms: u64,
}

impl CacheLine {
    pub fn from_record(r: &ScanRecord) -> Self {
        CacheLine {
            schema_version: SCHEMA_VERSION,
            n: r.key.nvars,
            l: r.key.l,
            m1: r.key.m1,
            k: r.k,
            delta: r.delta,
            ideal_count: r.ideal_count,
            t_max: r.t_max,
            argmax: r.argmax.iter().map(format_ideal).collect(),
            elapsed_ms: r.elapsed.as_millis() as u64,
        }
    }

    pub fn to_record(&self) -> Result<ScanRecord> {
        let key = ScanKey {
            nvars: self.n,
            l: self.l,
            m1: self.m1,
        };
        let argmax = self
            .argmax
            .iter()
            .map(|s| parse_ideal(s, self.n).map(|p| p.ideal))
            .collect::<borel_core::Result<Vec<_>>>()?;
        Ok(ScanRecord {
            key,
            k: self.k,
            delta: self.delta,
            ideal_count: self.ideal_count,
            t_max: self.t_max,
            argmax,
            elapsed: Duration::from_millis(self.elapsed_ms),
        })
    }
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn file_for(&self, nvars: usize, l: usize) -> PathBuf {
        self.dir.join(format!("scan-N{nvars}-l{l}.jsonl"))
    }

    fn lines(&self, nvars: usize, l: usize) -> Result<Vec<CacheLine>> {
        let path = self.file_for(nvars, l);
        let file = match fs::File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for line in BufReader::new(file).lines() {
            let line = line?;
            if let Ok(rec) = serde_json::from_str::<CacheLine>(&line) {
                if rec.schema_version == SCHEMA_VERSION && rec.n == nvars && rec.l == l {
                    out.push(rec);
                }
            }
        }
        Ok(out)
    }

    /// The first stored record for `key`, if any.
    pub fn load(&self, key: ScanKey) -> Result<Option<ScanRecord>> {
        match self.lines(key.nvars, key.l)?.into_iter().find(|r| r.m1 == key.m1) {
            Some(line) => Ok(Some(line.to_record()?)),
            None => Ok(None),
        }
    }

    /// Appends `rec` unless a record for its key is already present.
    pub fn store(&self, rec: &ScanRecord) -> Result<()> {
        if self.load(rec.key)?.is_some() {
            return Ok(());
        }
        fs::create_dir_all(&self.dir)
            .map_err(|e| CliError::Usage(format!("cache directory {} is not writable: {e}", self.dir.display())))?;
        let mut text = serde_json::to_string(&CacheLine::from_record(rec))?;
        text.push('\n');
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(self.file_for(rec.key.nvars, rec.key.l))?;
        f.write_all(text.as_bytes())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::runner::{ScanOptions, Scanner};

    #[test]
    fn store_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("c"));
        let key = ScanKey { nvars: 3, l: 11, m1: 2 };
        assert!(cache.load(key).unwrap().is_none());
        let rec = Scanner::new(ScanOptions::default())
            .unwrap()
            .t_max(key)
            .unwrap()
            .unwrap();
        cache.store(&rec).unwrap();
        cache.store(&rec).unwrap();
        let back = cache.load(key).unwrap().unwrap();
        assert!(back.same_result(&rec));
        let text = fs::read_to_string(cache.file_for(3, 11)).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert!(text.ends_with('\n'));
        assert!(text.contains("\"schema_version\":1"));
    }

    #[test]
    fn foreign_lines_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let path = cache.file_for(3, 10);
        fs::write(
            &path,
            "not json\n{\"schema_version\":0,\"N\":3,\"l\":10,\"m1\":2,\"k\":3,\"delta\":0,\"ideal_count\":1,\"t_max\":1,\"argmax\":[],\"elapsed_ms\":0}\n",
        )
        .unwrap();
        assert!(cache.load(ScanKey { nvars: 3, l: 10, m1: 2 }).unwrap().is_none());
    }
}
