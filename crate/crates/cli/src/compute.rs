//! Per-knot invariant assembly with caching and enumeration budgets.

use num_bigint::BigInt;
use persieve_core::alexander::alexander;
use persieve_core::cache::{form_digest, parse_dtable, serialize_dtable};
use persieve_core::dtable::{box_volume, d_table, DTable};
use persieve_core::goeritz::goeritz;
use persieve_core::group::GroupPresentation;
use persieve_core::obstruct::KnotInvariants;
use persieve_core::pd::KnotDiagram;
use std::fs;
use std::io;
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};

/// Lattice points assumed enumerable per budget second; fixes the
/// deterministic box-volume cap for a given --budget value.
pub const POINTS_PER_SECOND: u64 = 20_000_000;

#[derive(Clone, Debug)]
pub enum KnotFailure {
    /// enumeration box larger than the budget allows
    Budget,
    Hard(String),
}

pub fn budget_cap(budget_seconds: Option<u64>) -> Option<BigInt> {
    budget_seconds.map(|s| BigInt::from(s) * POINTS_PER_SECOND)
}

/// Computes the invariants the verdict pipeline needs. The correction-term
/// table is looked up in the cache directory by form digest first; a fresh
/// computation is written back with an atomic create-rename.
pub fn compute_invariants(
    d: &KnotDiagram,
    need_dtable: bool,
    cache_dir: Option<&Path>,
    max_box: Option<&BigInt>,
) -> Result<KnotInvariants, KnotFailure> {
    let hard = |e: persieve_core::Error| KnotFailure::Hard(e.to_string());
    let delta = alexander(d);
    let form = goeritz(d).map_err(hard)?;
    let pres = GroupPresentation::from_matrix(&form.matrix).map_err(hard)?;
    let group_type = pres.group_type();
    let dtable = if need_dtable {
        if let Some(cap) = max_box {
            if box_volume(&form) > *cap {
                return Err(KnotFailure::Budget);
            }
        }
        Some(cached_d_table(&form, cache_dir).map_err(hard)?)
    } else {
        None
    };
    Ok(KnotInvariants { name: d.name.clone(), delta, group_type, dtable })
}

fn cached_d_table(
    form: &persieve_core::goeritz::GoeritzForm,
    cache_dir: Option<&Path>,
) -> persieve_core::error::Result<DTable> {
    let digest = form_digest(&form.matrix);
    let path = cache_dir.map(|dir| dir.join(format!("{digest}.dt")));
    if let Some(p) = &path {
        if let Ok(text) = fs::read_to_string(p) {
            if let Ok(table) = parse_dtable(&text, &digest) {
                return Ok(table);
            }
            // corrupt or stale entry: fall through and recompute
        }
    }
    let table = d_table(form)?;
    if let Some(p) = &path {
        if let Some(dir) = p.parent() {
            fs::create_dir_all(dir)?;
        }
        write_atomic(p, &serialize_dtable(&digest, &table))?;
    }
    Ok(table)
}

/// Writes via a unique temporary file in the target directory, then renames;
/// concurrent writers of the same path leave one complete copy.
pub fn write_atomic(path: &Path, text: &str) -> io::Result<()> {
    static COUNTER: AtomicU64 = AtomicU64::new(0);
    let n = COUNTER.fetch_add(1, Ordering::Relaxed);
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(format!(".tmp.{}.{}", std::process::id(), n));
    let tmp = path.with_file_name(name);
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}
