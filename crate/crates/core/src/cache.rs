//! Versioned text serialization of correction-term tables for the on-disk
//! cache: a header with the form digest and global convention, the
//! invariant factors, then one `label value` line per spin-centered label.

use crate::dtable::DTable;
use crate::error::{Error, Result};
use crate::snf::Mat;
use num_rational::Rational64;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

pub const CACHE_VERSION: &str = "dtable-cache v1";

pub fn convention_flag() -> String {
    format!("corner-parity={}", crate::goeritz::POSITIVE_CORNER_PARITY)
}

/// Digest of a Goeritz matrix, keying cache entries to the exact form.
pub fn form_digest(matrix: &Mat) -> String {
    let mut h = Sha256::new();
    for row in matrix {
        for e in row {
            h.update(e.to_string().as_bytes());
            h.update(b",");
        }
        h.update(b";");
    }
    let out = h.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn serialize_dtable(digest: &str, table: &DTable) -> String {
    let mut s = String::new();
    s.push_str(CACHE_VERSION);
    s.push('\n');
    s.push_str(&format!("form {digest}\n"));
    s.push_str(&format!("convention {}\n", convention_flag()));
    if table.orders.is_empty() {
        s.push_str("factors -\n");
    } else {
        let fs: Vec<String> = table.orders.iter().map(|f| f.to_string()).collect();
        s.push_str(&format!("factors {}\n", fs.join(",")));
    }
    for (label, v) in &table.values {
        let l = if label.is_empty() {
            "-".to_string()
        } else {
            label.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
        };
        s.push_str(&format!("{l} {}/{}\n", v.numer(), v.denom()));
    }
    s
}

pub fn parse_dtable(text: &str, expected_digest: &str) -> Result<DTable> {
    let corrupt = |msg: &str| Error::CorruptCache(msg.to_string());
    let mut lines = text.lines();
    let version = lines.next().ok_or_else(|| corrupt("empty cache entry"))?;
    if version != CACHE_VERSION {
        return Err(Error::VersionMismatch {
            found: version.to_string(),
            expected: CACHE_VERSION.to_string(),
        });
    }
    let form = lines.next().ok_or_else(|| corrupt("missing form line"))?;
    let digest = form.strip_prefix("form ").ok_or_else(|| corrupt("bad form line"))?;
    if digest != expected_digest {
        return Err(corrupt("form digest mismatch"));
    }
    let conv = lines.next().ok_or_else(|| corrupt("missing convention line"))?;
    let conv = conv.strip_prefix("convention ").ok_or_else(|| corrupt("bad convention line"))?;
    if conv != convention_flag() {
        return Err(Error::VersionMismatch {
            found: conv.to_string(),
            expected: convention_flag(),
        });
    }
    let factors = lines.next().ok_or_else(|| corrupt("missing factors line"))?;
    let factors = factors.strip_prefix("factors ").ok_or_else(|| corrupt("bad factors line"))?;
    let orders: Vec<u64> = if factors == "-" {
        vec![]
    } else {
        factors
            .split(',')
            .map(|f| f.parse().map_err(|_| corrupt("bad invariant factor")))
            .collect::<Result<_>>()?
    };
    let mut values = BTreeMap::new();
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let (l, v) = line.split_once(' ').ok_or_else(|| corrupt("bad value line"))?;
        let label: Vec<u64> = if l == "-" {
            vec![]
        } else {
            l.split(',')
                .map(|r| r.parse().map_err(|_| corrupt("bad label residue")))
                .collect::<Result<_>>()?
        };
        if label.len() != orders.len() {
            return Err(corrupt("label width does not match factors"));
        }
        let (n, d) = v.split_once('/').ok_or_else(|| corrupt("value not in p/q form"))?;
        let n: i64 = n.parse().map_err(|_| corrupt("bad value numerator"))?;
        let d: i64 = d.parse().map_err(|_| corrupt("bad value denominator"))?;
        if d <= 0 {
            return Err(corrupt("nonpositive value denominator"));
        }
        values.insert(label, Rational64::new(n, d));
    }
    let table = DTable { orders, values };
    let expected: u64 = table.group_order();
    if table.values.len() as u64 != expected {
        return Err(corrupt("wrong number of labels"));
    }
    Ok(table)
}
