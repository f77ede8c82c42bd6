//! On-disk cache of `w_BCR` class tables.
//!
//! Enabled only when `BCR_CACHE_DIR` is set. One file per degree,
//! `wbcr-<version>-k<degree>.json`:
//!
//! ```json
//! {"version":"0.1.0","degree":3,"entries":[{"key":[0,2,1,...],"value":"1/2"}]}
//! ```
//!
//! Entries are sorted by key. Files that fail to parse are ignored and
//! rewritten.

use std::fs;
use std::path::PathBuf;

use bcr_core::bridge::{BcrWeights, WeightTable};
use bcr_core::rational::{format_pq, parse_pq};
use bcr_core::CanonicalKey;
use serde_json::{json, Value};

pub const ENV_VAR: &str = "BCR_CACHE_DIR";
const VERSION: &str = env!("CARGO_PKG_VERSION");

fn path(k: usize) -> Option<PathBuf> {
    let dir = std::env::var_os(ENV_VAR)?;
    Some(PathBuf::from(dir).join(format!("wbcr-{VERSION}-k{k}.json")))
}

fn decode(text: &str, k: usize) -> Option<WeightTable> {
    let v: Value = serde_json::from_str(text).ok()?;
    if v["version"] != VERSION || v["degree"].as_u64()? != k as u64 {
        return None;
    }
    let mut entries = Vec::new();
    for e in v["entries"].as_array()? {
        let codes = e["key"]
            .as_array()?
            .iter()
            .map(|c| c.as_u64().and_then(|c| u16::try_from(c).ok()))
            .collect::<Option<Vec<u16>>>()?;
        let key = CanonicalKey::from_jacobi_codes(codes)?;
        if key.degree() != k {
            return None;
        }
        entries.push((key, parse_pq(e["value"].as_str()?)?));
    }
    Some(WeightTable::from_entries(entries))
}

fn encode(table: &WeightTable, k: usize) -> String {
    let mut entries: Vec<_> = table.iter().collect();
    entries.sort_by(|a, b| a.0.cmp(b.0));
    let entries: Vec<Value> = entries
        .into_iter()
        .map(|(key, q)| json!({"key": key.as_slice(), "value": format_pq(q)}))
        .collect();
    let v = json!({"version": VERSION, "degree": k, "entries": entries});
    serde_json::to_string(&v).expect("serializable")
}

/// Seeds `weights` with the cached table of degree `k`, if any. Returns
/// whether a table was loaded.
pub fn load(weights: &BcrWeights, k: usize) -> bool {
    let Some(p) = path(k) else { return false };
    let Some(table) = fs::read_to_string(&p).ok().and_then(|t| decode(&t, k)) else {
        return false;
    };
    weights.preload(k, table);
    true
}

/// Writes the (already computed) table of degree `k`. Failures are
/// reported on stderr and otherwise ignored.
pub fn store(weights: &BcrWeights, k: usize) {
    let Some(p) = path(k) else { return };
    let Ok(table) = weights.table(k) else { return };
    if let Some(dir) = p.parent() {
        let _ = fs::create_dir_all(dir);
    }
    let tmp = p.with_extension("json.tmp");
    let res = fs::write(&tmp, encode(&table, k)).and_then(|_| fs::rename(&tmp, &p));
    if let Err(e) = res {
        eprintln!("warning: cannot write cache {}: {e}", p.display());
    }
}
