//! Text rendering: homology group names, two-row correction-term tables,
//! natural ordering for knot names.

use num_bigint::BigInt;
use num_traits::One;
use persieve_core::dtable::DTable;
use std::cmp::Ordering;

/// "Z5+Z45" style name from the invariant factor chain; "0" when trivial.
pub fn group_name(factors: &[BigInt]) -> String {
    let parts: Vec<String> =
        factors.iter().filter(|f| !f.is_one()).map(|f| format!("Z{f}")).collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// Two-row table: value row sorted ascending, multiplicity row aligned.
pub fn dtable_rows(table: &DTable, exclude_zero: bool) -> String {
    let tally = table.multiplicity_tally(exclude_zero);
    let cells: Vec<(String, String)> =
        tally.iter().map(|(v, m)| (v.to_string(), m.to_string())).collect();
    let head = ["d(Y,s)", "multiplicity"];
    let label_w = head.iter().map(|h| h.len()).max().unwrap();
    let mut top = format!("{:<label_w$}", head[0]);
    let mut bot = format!("{:<label_w$}", head[1]);
    for (v, m) in &cells {
        let w = v.len().max(m.len());
        top.push_str(&format!(" | {v:>w$}"));
        bot.push_str(&format!(" | {m:>w$}"));
    }
    format!("{top}\n{bot}\n")
}

/// Orders names so that 12a100 sorts after 12a99: digit runs compare
/// numerically, everything else byte-wise.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (ab, bb) = (a.as_bytes(), b.as_bytes());
    let (mut i, mut j) = (0, 0);
    while i < ab.len() && j < bb.len() {
        if ab[i].is_ascii_digit() && bb[j].is_ascii_digit() {
            let si = i;
            let sj = j;
            while i < ab.len() && ab[i].is_ascii_digit() {
                i += 1;
            }
            while j < bb.len() && bb[j].is_ascii_digit() {
                j += 1;
            }
            let na = a[si..i].trim_start_matches('0');
            let nb = b[sj..j].trim_start_matches('0');
            let ord = na.len().cmp(&nb.len()).then_with(|| na.cmp(nb));
            if ord != Ordering::Equal {
                return ord;
            }
        } else {
            let ord = ab[i].cmp(&bb[j]);
            if ord != Ordering::Equal {
                return ord;
            }
            i += 1;
            j += 1;
        }
    }
    (ab.len() - i).cmp(&(bb.len() - j))
}
