//! On-disk cache of Kostka-Macdonald tables, one `kostka_n<N>.json` per `n`.
//!
//! A valid file seeds the in-memory table in the core crate; a missing or
//! unreadable one is regenerated. Files are written through a temporary name
//! and renamed, so a concurrent reader never sees a partial file.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use cherednik_core::macdonald::{install_kostka_table, kostka_table, kostka_table_is_loaded, KostkaTable};

use crate::CliError;

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("kostka_n{n}.json"))
}

/// What happened when the table was requested; diagnostics only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheEvent {
    InMemory,
    Loaded,
    Written,
    Rewritten,
}

pub fn ensure_kostka(dir: &Path, n: usize) -> Result<(Arc<KostkaTable>, CacheEvent), CliError> {
    let path = cache_path(dir, n);
    if kostka_table_is_loaded(n) {
        let table = kostka_table(n)?;
        if path.exists() {
            return Ok((table, CacheEvent::InMemory));
        }
        write_atomic(&path, &table.to_cache_json())?;
        return Ok((table, CacheEvent::Written));
    }
    let mut stale = false;
    if let Ok(text) = fs::read_to_string(&path) {
        match KostkaTable::from_cache_json(&text) {
            Ok(table) if table.n() == n => {
                install_kostka_table(table)?;
                return Ok((kostka_table(n)?, CacheEvent::Loaded));
            }
            _ => stale = true,
        }
    }
    let table = kostka_table(n)?;
    write_atomic(&path, &table.to_cache_json())?;
    Ok((table, if stale { CacheEvent::Rewritten } else { CacheEvent::Written }))
}

fn write_atomic(path: &Path, text: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}
