//! Content-addressed result cache. The key is the digest of the invocation
//! (subcommand and the flags that affect output); the stored artifact keeps
//! the emitted bytes and the exit code. Corrupted entries are recomputed and
//! overwritten with a warning, never silently trusted.

use std::path::PathBuf;

use anyhow::Context;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Serialize, Deserialize)]
pub struct Entry {
    pub exit_code: i32,
    pub bytes: String,
}

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// Resolve the cache directory: `--cache-dir`, else `$DPT_CACHE_DIR`,
    /// else disabled. `--no-cache` always disables.
    pub fn resolve(flag: Option<PathBuf>, no_cache: bool) -> anyhow::Result<Cache> {
        if no_cache {
            return Ok(Cache { dir: None });
        }
        let dir = flag.or_else(|| std::env::var_os("DPT_CACHE_DIR").map(PathBuf::from));
        if let Some(d) = &dir {
            std::fs::create_dir_all(d)
                .with_context(|| format!("cannot create cache directory {}", d.display()))?;
        }
        Ok(Cache { dir })
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("dpt-{key}.json")))
    }

    pub fn lookup(&self, key: &str) -> Option<Entry> {
        let path = self.path(key)?;
        let raw = std::fs::read(&path).ok()?;
        match serde_json::from_slice::<Entry>(&raw) {
            Ok(entry) => Some(entry),
            Err(e) => {
                eprintln!(
                    "warning: corrupted cache entry {} ({e}); recomputing",
                    path.display()
                );
                None
            }
        }
    }

    pub fn store(&self, key: &str, bytes: &str, exit_code: i32) -> anyhow::Result<()> {
        let Some(path) = self.path(key) else {
            return Ok(());
        };
        let entry = Entry {
            exit_code,
            bytes: bytes.to_string(),
        };
        let blob = serde_json::to_vec(&entry)?;
        std::fs::write(&path, blob)
            .with_context(|| format!("cannot write cache entry {}", path.display()))?;
        Ok(())
    }
}

/// Digest of the output-relevant part of the invocation.
pub fn invocation_digest<T: Serialize>(cli: &T) -> anyhow::Result<String> {
    let canonical = serde_json::to_vec(cli)?;
    let mut hasher = Sha256::new();
    hasher.update(&canonical);
    Ok(hex_prefix(&hasher.finalize(), 16))
}

fn hex_prefix(bytes: &[u8], n: usize) -> String {
    bytes[..n].iter().map(|b| format!("{b:02x}")).collect()
}
