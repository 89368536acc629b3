//! Append-only JSON-lines result cache.
//!
//! Each line is `{"version": ..., "key": ..., "value": ...}`. The file is read
//! once when opened; workers look entries up concurrently and hand fresh
//! results back, and only the owner of the [`Cache`] appends to the file.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::hash::{DefaultHasher, Hash, Hasher};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::{Error, Result};

pub const CACHE_VERSION: &str = "nfkit.cache/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: String,
    pub key: String,
    pub value: Value,
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: usize,
    pub misses: usize,
    pub verified: usize,
    pub skipped_lines: usize,
}

#[derive(Debug)]
pub struct Cache {
    path: Option<PathBuf>,
    entries: HashMap<String, Value>,
    verify_rate: Option<f64>,
    fresh: Mutex<Vec<(String, Value)>>,
    mismatches: Mutex<Vec<String>>,
    hits: AtomicUsize,
    misses: AtomicUsize,
    verified: AtomicUsize,
    skipped_lines: usize,
}

impl Cache {
    /// A cache that stores nothing.
    pub fn disabled() -> Self {
        Cache::with_entries(None, HashMap::new(), None, 0)
    }

    fn with_entries(
        path: Option<PathBuf>,
        entries: HashMap<String, Value>,
        verify_rate: Option<f64>,
        skipped_lines: usize,
    ) -> Self {
        Cache {
            path,
            entries,
            verify_rate,
            fresh: Mutex::new(Vec::new()),
            mismatches: Mutex::new(Vec::new()),
            hits: AtomicUsize::new(0),
            misses: AtomicUsize::new(0),
            verified: AtomicUsize::new(0),
            skipped_lines,
        }
    }

    /// Load `path` if it exists. Lines with another version or that fail to
    /// parse are counted and ignored. With `verify_rate`, that fraction of hits
    /// (chosen by key hash) is recomputed and compared.
    pub fn open(path: &Path, verify_rate: Option<f64>) -> Result<Self> {
        let mut entries = HashMap::new();
        let mut skipped = 0;
        if path.exists() {
            let file = File::open(path).map_err(|e| io_error(path, e))?;
            for line in BufReader::new(file).lines() {
                let line = line.map_err(|e| io_error(path, e))?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<CacheEntry>(&line) {
                    Ok(e) if e.version == CACHE_VERSION => {
                        entries.insert(e.key, e.value);
                    }
                    _ => skipped += 1,
                }
            }
        }
        Ok(Cache::with_entries(
            Some(path.to_path_buf()),
            entries,
            verify_rate,
            skipped,
        ))
    }

    pub fn is_enabled(&self) -> bool {
        self.path.is_some()
    }

    fn sampled(&self, key: &str) -> bool {
        let Some(rate) = self.verify_rate else {
            return false;
        };
        let mut h = DefaultHasher::new();
        key.hash(&mut h);
        ((h.finish() % 1_000_000) as f64) < rate * 1_000_000.0
    }

    /// Cached value for `key`, or the result of `compute`. Safe to call from
    /// many threads; fresh values are queued for [`Cache::flush`].
    pub fn get_or_compute(&self, key: &str, compute: impl FnOnce() -> Result<Value>) -> Result<Value> {
        if !self.is_enabled() {
            return compute();
        }
        if let Some(v) = self.entries.get(key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            if self.sampled(key) {
                let fresh = compute()?;
                self.verified.fetch_add(1, Ordering::Relaxed);
                if &fresh != v {
                    self.mismatches.lock().expect("cache lock").push(key.to_string());
                    return Ok(fresh);
                }
            }
            return Ok(v.clone());
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let v = compute()?;
        self.fresh
            .lock()
            .expect("cache lock")
            .push((key.to_string(), v.clone()));
        Ok(v)
    }

    /// Keys whose cached value differed from a recomputation.
    pub fn mismatches(&self) -> Vec<String> {
        let mut m = self.mismatches.lock().expect("cache lock").clone();
        m.sort();
        m
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            verified: self.verified.load(Ordering::Relaxed),
            skipped_lines: self.skipped_lines,
        }
    }

    /// Append queued entries to the file, sorted by key so that the file
    /// contents do not depend on thread scheduling.
    pub fn flush(&mut self) -> Result<()> {
        let Some(path) = self.path.clone() else {
            return Ok(());
        };
        let mut fresh = std::mem::take(&mut *self.fresh.lock().expect("cache lock"));
        if fresh.is_empty() {
            return Ok(());
        }
        fresh.sort_by(|a, b| a.0.cmp(&b.0));
        fresh.dedup_by(|a, b| a.0 == b.0);
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&path)
            .map_err(|e| io_error(&path, e))?;
        let mut buf = String::new();
        for (key, value) in fresh {
            if self.entries.contains_key(&key) {
                continue;
            }
            let entry = CacheEntry {
                version: CACHE_VERSION.to_string(),
                key: key.clone(),
                value: value.clone(),
            };
            buf.push_str(&serde_json::to_string(&entry).expect("cache entries serialize"));
            buf.push('\n');
            self.entries.insert(key, value);
        }
        file.write_all(buf.as_bytes()).map_err(|e| io_error(&path, e))
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Domain(format!("cache file {}: {e}", path.display()))
}
