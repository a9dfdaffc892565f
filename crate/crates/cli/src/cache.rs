//! On-disk cache of enumerated bases, keyed by (kind, variant, n). Entries
//! are versioned JSON; a corrupt or version-mismatched entry is regenerated
//! and overwritten with a warning on stderr.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    version: u32,
    kind: String,
    variant: String,
    n: usize,
    items: Vec<String>,
}

fn entry_path(dir: &Path, kind: &str, variant: &str, n: usize) -> PathBuf {
    dir.join(format!("{kind}-{variant}-{n}.json"))
}

/// Returns the cached list or builds, stores, and returns it. The builder
/// must be deterministic so that cache hits are byte-identical to
/// regeneration.
pub fn get_or_build(
    dir: Option<&Path>,
    kind: &str,
    variant: &str,
    n: usize,
    build: impl FnOnce() -> Result<Vec<String>>,
) -> Result<Vec<String>> {
    let Some(dir) = dir else {
        return build();
    };
    let path = entry_path(dir, kind, variant, n);
    if path.exists() {
        match std::fs::read_to_string(&path)
            .map_err(anyhow::Error::from)
            .and_then(|text| serde_json::from_str::<CacheEntry>(&text).map_err(Into::into))
        {
            Ok(entry)
                if entry.version == CACHE_FORMAT_VERSION
                    && entry.kind == kind
                    && entry.variant == variant
                    && entry.n == n =>
            {
                return Ok(entry.items);
            }
            Ok(_) => {
                eprintln!(
                    "warning: cache entry {} does not match its key; regenerating",
                    path.display()
                );
            }
            Err(err) => {
                eprintln!(
                    "warning: corrupt cache entry {} ({err}); regenerating",
                    path.display()
                );
            }
        }
    }
    let items = build()?;
    std::fs::create_dir_all(dir)
        .with_context(|| format!("creating cache directory {}", dir.display()))?;
    let entry = CacheEntry {
        version: CACHE_FORMAT_VERSION,
        kind: kind.to_string(),
        variant: variant.to_string(),
        n,
        items: items.clone(),
    };
    std::fs::write(&path, serde_json::to_string_pretty(&entry)?)
        .with_context(|| format!("writing cache entry {}", path.display()))?;
    Ok(items)
}
