//! Batch orchestration: compute invariants for a knot list (in parallel,
//! with caching and budgets), run the verdict pipeline per period, and
//! assemble a deterministic text report.
//!
//! Correction-term tables are only computed for knots that survive the
//! homological stages for at least one requested period; everything else is
//! decided from the cheap invariants alone.

use crate::compute::{budget_cap, compute_invariants, KnotFailure};
use crate::render::natural_cmp;
use persieve_core::dtable::DTable;
use persieve_core::obstruct::{verdict, KnotInvariants, Outcome};
use persieve_core::pd::KnotDiagram;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

#[derive(Clone, Debug)]
pub struct SieveConfig {
    pub periods: Vec<u64>,
    pub cache: Option<PathBuf>,
    pub jobs: usize,
    pub homological_only: bool,
    pub budget_seconds: Option<u64>,
}

enum TableState {
    NotNeeded,
    Ready(Box<DTable>),
    OverBudget,
}

struct KnotComputed {
    inv: KnotInvariants,
    table: TableState,
}

enum KnotResult {
    Ready(Box<KnotComputed>),
    Failed(String),
}

pub struct SieveOutcome {
    pub report: String,
    pub hard_errors: usize,
    /// per period, survivor names in natural order
    pub survivors: BTreeMap<u64, Vec<String>>,
    pub inconclusive: BTreeMap<u64, Vec<String>>,
}

fn compute_one(cfg: &SieveConfig, cap: Option<&num_bigint::BigInt>, d: &KnotDiagram) -> KnotResult {
    let inv = match compute_invariants(d, false, None, None) {
        Ok(inv) => inv,
        Err(KnotFailure::Hard(msg)) => return KnotResult::Failed(msg),
        Err(KnotFailure::Budget) => unreachable!("no budget without a table"),
    };
    let needs_table = !cfg.homological_only
        && cfg
            .periods
            .iter()
            .any(|&q| verdict(&inv, q, true).outcome == Outcome::NotObstructed);
    let table = if needs_table {
        match compute_invariants(d, true, cfg.cache.as_deref(), cap) {
            Ok(full) => TableState::Ready(Box::new(full.dtable.expect("table requested"))),
            Err(KnotFailure::Budget) => TableState::OverBudget,
            Err(KnotFailure::Hard(msg)) => return KnotResult::Failed(msg),
        }
    } else {
        TableState::NotNeeded
    };
    KnotResult::Ready(Box::new(KnotComputed { inv, table }))
}

pub fn run_sieve(cfg: &SieveConfig, knots: &[KnotDiagram]) -> SieveOutcome {
    let cap = budget_cap(cfg.budget_seconds);
    let jobs = cfg.jobs.max(1);

    let results: Vec<KnotResult> = {
        let slots: Mutex<Vec<Option<KnotResult>>> =
            Mutex::new((0..knots.len()).map(|_| None).collect());
        let next = AtomicUsize::new(0);
        std::thread::scope(|s| {
            for _ in 0..jobs.min(knots.len().max(1)) {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= knots.len() {
                        break;
                    }
                    let r = compute_one(cfg, cap.as_ref(), &knots[i]);
                    slots.lock().unwrap()[i] = Some(r);
                });
            }
        });
        slots.into_inner().unwrap().into_iter().map(|r| r.unwrap()).collect()
    };

    let mut report = String::new();
    report.push_str("sieve report v1\n");
    report.push_str(&format!("convention: {}\n", persieve_core::cache::convention_flag()));
    let periods: Vec<String> = cfg.periods.iter().map(|q| q.to_string()).collect();
    report.push_str(&format!("periods: {}\n", periods.join(",")));
    report.push_str(&format!(
        "mode: {}\n",
        if cfg.homological_only { "homological-only" } else { "full" }
    ));
    report.push_str(&format!(
        "budget: {}\n",
        cfg.budget_seconds.map_or("none".to_string(), |s| format!("{s}s"))
    ));
    report.push_str(&format!("knots: {}\n", knots.len()));

    let mut survivors_by_period = BTreeMap::new();
    let mut inconclusive_by_period = BTreeMap::new();
    let mut hard_errors = 0;
    let mut total_inconclusive = 0;
    for &q in &cfg.periods {
        report.push_str(&format!("\n[period {q}]\n"));
        let mut survivors: Vec<String> = vec![];
        let mut inconclusive: Vec<String> = vec![];
        let mut errors: Vec<String> = vec![];
        for (d, r) in knots.iter().zip(&results) {
            let kc = match r {
                KnotResult::Ready(kc) => kc,
                KnotResult::Failed(msg) => {
                    report.push_str(&format!("{} error: {msg}\n", d.name));
                    errors.push(d.name.clone());
                    continue;
                }
            };
            let homological = verdict(&kc.inv, q, true);
            let v = match (&homological.outcome, &kc.table) {
                (Outcome::Obstructed, _) => homological,
                _ if cfg.homological_only => homological,
                (Outcome::NotObstructed, TableState::Ready(t)) => {
                    let mut full = kc.inv.clone();
                    full.dtable = Some((**t).clone());
                    verdict(&full, q, false)
                }
                (Outcome::NotObstructed, TableState::OverBudget) => {
                    report.push_str(&format!("{} inconclusive: budget\n", d.name));
                    inconclusive.push(d.name.clone());
                    continue;
                }
                (Outcome::NotObstructed, TableState::NotNeeded) => {
                    unreachable!("table is computed for every homological survivor")
                }
            };
            match v.outcome {
                Outcome::Obstructed => {
                    let stage = v.stage.expect("obstructed verdict has a stage");
                    report.push_str(&format!("{} obstructed stage={stage}\n", d.name));
                }
                Outcome::NotObstructed => {
                    report.push_str(&format!(
                        "{} not-obstructed candidates={}\n",
                        d.name,
                        v.survivors.len()
                    ));
                    survivors.push(d.name.clone());
                }
            }
        }
        survivors.sort_by(|a, b| natural_cmp(a, b));
        report.push_str(&format!("survivors ({}): {}\n", survivors.len(), survivors.join(" ")));
        report.push_str(&format!(
            "inconclusive ({}): {}\n",
            inconclusive.len(),
            inconclusive.join(" ")
        ));
        report.push_str(&format!("errors ({}): {}\n", errors.len(), errors.join(" ")));
        hard_errors += errors.len();
        total_inconclusive += inconclusive.len();
        survivors_by_period.insert(q, survivors);
        inconclusive_by_period.insert(q, inconclusive);
    }

    let total_survivors: usize = survivors_by_period.values().map(|v| v.len()).sum();
    report.push_str(&format!(
        "\nsummary: periods={} knots={} survivors={} inconclusive={} errors={}\n",
        cfg.periods.len(),
        knots.len(),
        total_survivors,
        total_inconclusive,
        hard_errors,
    ));

    SieveOutcome {
        report,
        hard_errors,
        survivors: survivors_by_period,
        inconclusive: inconclusive_by_period,
    }
}
