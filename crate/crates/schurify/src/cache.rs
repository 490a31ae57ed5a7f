//! On-disk Littlewood-Richardson cache.
//!
//! The file `lr_cache.jsonl` holds one JSON object per line,
//! `{"lambda": [3, 1], "factors": [[1], [2, 1]], "value": "1"}`, where the factors are the
//! already transposed (twisted) partitions in sorted order. Lines are written sorted, so the file
//! only depends on the set of cached coefficients.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use schur_core::charac::{Lr, Partition};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "SCHURIFY_CACHE_DIR";
pub const CACHE_FILE: &str = "lr_cache.jsonl";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheLine {
    pub lambda: Partition,
    pub factors: Vec<Partition>,
    pub value: String,
}

/// A cache file location; `None` disables persistence.
#[derive(Clone, Debug, Default)]
pub struct LrCache {
    pub path: Option<PathBuf>,
}

impl LrCache {
    /// Use `dir`, falling back to the environment variable.
    pub fn locate(dir: Option<&Path>) -> Self {
        let dir = dir
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
        LrCache {
            path: dir.map(|d| d.join(CACHE_FILE)),
        }
    }

    /// Seed `lr` from the file; returns the number of lines read.
    pub fn load(&self, lr: &Lr) -> Result<usize, CliError> {
        let Some(path) = &self.path else { return Ok(0) };
        if !path.exists() {
            return Ok(0);
        }
        let text = fs::read_to_string(path)?;
        let mut entries = Vec::new();
        for (k, line) in text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
        {
            let c: CacheLine = serde_json::from_str(line)
                .map_err(|e| CliError::Format(format!("{}:{}: {e}", path.display(), k + 1)))?;
            let v: u64 = c.value.parse().map_err(|_| {
                CliError::Format(format!("{}:{}: bad value", path.display(), k + 1))
            })?;
            entries.push((c.lambda, c.factors, v));
        }
        let n = entries.len();
        lr.preload(entries);
        Ok(n)
    }

    /// Write every memoized coefficient of `lr`, replacing the file atomically.
    pub fn save(&self, lr: &Lr) -> Result<(), CliError> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("jsonl.tmp");
        {
            let mut f = std::io::BufWriter::new(fs::File::create(&tmp)?);
            for (lambda, factors, v) in lr.entries() {
                let line = CacheLine {
                    lambda,
                    factors,
                    value: v.to_string(),
                };
                writeln!(f, "{}", serde_json::to_string(&line)?)?;
            }
            f.flush()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = LrCache::locate(Some(dir.path()));
        let lr = Lr::new();
        assert_eq!(
            lr.lr_coeff(&[3, 2, 1], &[vec![2, 1], vec![2, 1]], &[false, false])
                .unwrap(),
            2
        );
        assert_eq!(
            lr.lr_coeff(
                &[2, 2, 1],
                &[vec![1], vec![2], vec![1, 1]],
                &[false, true, false]
            )
            .unwrap(),
            2
        );
        cache.save(&lr).unwrap();
        let first = fs::read_to_string(dir.path().join(CACHE_FILE)).unwrap();
        let fresh = Lr::new();
        assert_eq!(cache.load(&fresh).unwrap(), first.lines().count());
        assert_eq!(fresh.entries(), lr.entries());
        cache.save(&fresh).unwrap();
        assert_eq!(
            fs::read_to_string(dir.path().join(CACHE_FILE)).unwrap(),
            first
        );
    }

    #[test]
    fn malformed_cache_is_reported() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join(CACHE_FILE), "{\"lambda\": [1]}\n").unwrap();
        let err = LrCache::locate(Some(dir.path()))
            .load(&Lr::new())
            .unwrap_err();
        assert!(err.to_string().contains(":1:"), "{err}");
    }
}
