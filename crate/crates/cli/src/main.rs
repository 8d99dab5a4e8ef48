use clap::{Parser, Subcommand};
use persieve::compute::{budget_cap, compute_invariants, write_atomic, KnotFailure};
use persieve::render::{dtable_rows, group_name};
use persieve::sieve::{run_sieve, SieveConfig};
use persieve_core::knotlist::{find, parse_knot_list};
use persieve_core::pd::KnotDiagram;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "persieve", about = "periodicity obstruction sieve for alternating knots")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print basic invariants for one knot or a whole list
    Invariants {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        knot: Option<String>,
    },
    /// Print the correction-term table of a knot
    Dtable {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        knot: String,
        /// restrict to the ell-primary labels
        #[arg(long)]
        ell: Option<u64>,
        /// drop the zero label from the tally
        #[arg(long)]
        nonzero: bool,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Run the full obstruction pipeline for one knot and period
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        knot: String,
        #[arg(long)]
        period: u64,
        /// print the stage-by-stage trace
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        cache: Option<PathBuf>,
        /// per-knot enumeration budget in seconds
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Sweep a knot list over one or more periods and write a report
    Sieve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        periods: Vec<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// skip the correction-term stage (no lattice enumeration)
        #[arg(long)]
        homological_only: bool,
        /// per-knot enumeration budget in seconds
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn is_odd_prime(q: u64) -> bool {
    q > 2 && q % 2 == 1 && (3..).take_while(|d| d * d <= q).step_by(2).all(|d| q % d != 0)
}

fn load(input: &PathBuf) -> Result<Vec<KnotDiagram>, String> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
    parse_knot_list(&text).map_err(|e| e.to_string())
}

fn config_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Invariants { input, knot } => {
            let knots = match load(&input) {
                Ok(k) => k,
                Err(e) => return config_error(&e),
            };
            let selected: Vec<&KnotDiagram> = match &knot {
                Some(name) => match find(&knots, name) {
                    Ok(d) => vec![d],
                    Err(e) => return config_error(&e.to_string()),
                },
                None => knots.iter().collect(),
            };
            let mut failed = false;
            for d in selected {
                match compute_invariants(d, false, None, None) {
                    Ok(inv) => println!(
                        "{}: crossings={} det={} genus={} homology={} alexander={}",
                        inv.name,
                        d.n_crossings(),
                        inv.det(),
                        inv.genus(),
                        group_name(&inv.group_type.invariant_factors()),
                        inv.delta.to_canonical_string(),
                    ),
                    Err(KnotFailure::Hard(msg)) => {
                        println!("{}: error: {msg}", d.name);
                        failed = true;
                    }
                    Err(KnotFailure::Budget) => unreachable!("no budget configured"),
                }
            }
            ExitCode::from(if failed { 2 } else { 0 })
        }
        Cmd::Dtable { input, knot, ell, nonzero, cache } => {
            let knots = match load(&input) {
                Ok(k) => k,
                Err(e) => return config_error(&e),
            };
            let d = match find(&knots, &knot) {
                Ok(d) => d,
                Err(e) => return config_error(&e.to_string()),
            };
            if let Some(l) = ell {
                if !is_odd_prime(l) && l != 2 {
                    return config_error(&format!("--ell {l} is not prime"));
                }
            }
            match compute_invariants(d, true, cache.as_deref(), None) {
                Ok(inv) => {
                    let table = inv.dtable.as_ref().unwrap();
                    let shown = match ell {
                        Some(l) => table.restrict_primary(l),
                        None => table.clone(),
                    };
                    let scope = match ell {
                        Some(l) => format!(" ell={l}"),
                        None => String::new(),
                    };
                    println!(
                        "{}{} group={} labels={}",
                        d.name,
                        scope,
                        group_name(&inv.group_type.invariant_factors()),
                        shown.values.len(),
                    );
                    print!("{}", dtable_rows(&shown, nonzero));
                    ExitCode::from(0)
                }
                Err(KnotFailure::Hard(msg)) => {
                    eprintln!("{}: error: {msg}", d.name);
                    ExitCode::from(2)
                }
                Err(KnotFailure::Budget) => unreachable!("no budget configured"),
            }
        }
        Cmd::Check { input, knot, period, trace, cache, budget } => {
            if !is_odd_prime(period) {
                return config_error(&format!("--period {period} is not an odd prime"));
            }
            if budget == Some(0) {
                return config_error("--budget must be positive");
            }
            let knots = match load(&input) {
                Ok(k) => k,
                Err(e) => return config_error(&e),
            };
            let d = match find(&knots, &knot) {
                Ok(d) => d,
                Err(e) => return config_error(&e.to_string()),
            };
            let cap = budget_cap(budget);
            match compute_invariants(d, true, cache.as_deref(), cap.as_ref()) {
                Ok(inv) => {
                    let v = persieve_core::obstruct::verdict(&inv, period, false);
                    if trace {
                        for line in &v.trace {
                            println!("{line}");
                        }
                    }
                    match v.stage {
                        Some(stage) => println!("{}: {} stage={stage}", d.name, v.outcome),
                        None => println!(
                            "{}: {} candidates={}",
                            d.name,
                            v.outcome,
                            v.survivors.len()
                        ),
                    }
                    for w in &v.witnesses {
                        println!("  witness: {w}");
                    }
                    ExitCode::from(0)
                }
                Err(KnotFailure::Budget) => {
                    println!("{}: inconclusive: budget", d.name);
                    ExitCode::from(0)
                }
                Err(KnotFailure::Hard(msg)) => {
                    eprintln!("{}: error: {msg}", d.name);
                    ExitCode::from(2)
                }
            }
        }
        Cmd::Sieve { input, periods, out, cache, jobs, homological_only, budget } => {
            if periods.is_empty() {
                return config_error("--periods must list at least one odd prime");
            }
            if let Some(q) = periods.iter().find(|&&q| !is_odd_prime(q)) {
                return config_error(&format!("period {q} is not an odd prime"));
            }
            if budget == Some(0) {
                return config_error("--budget must be positive");
            }
            if jobs == 0 {
                return config_error("--jobs must be positive");
            }
            let knots = match load(&input) {
                Ok(k) => k,
                Err(e) => return config_error(&e),
            };
            let cfg = SieveConfig {
                periods,
                cache,
                jobs,
                homological_only,
                budget_seconds: budget,
            };
            let outcome = run_sieve(&cfg, &knots);
            match &out {
                Some(path) => {
                    if let Err(e) = write_atomic(path, &outcome.report) {
                        return config_error(&format!("cannot write {}: {e}", path.display()));
                    }
                    for (q, s) in &outcome.survivors {
                        println!("period {q}: {} survivors", s.len());
                    }
                }
                None => print!("{}", outcome.report),
            }
            ExitCode::from(if outcome.hard_errors > 0 { 2 } else { 0 })
        }
    }
}
