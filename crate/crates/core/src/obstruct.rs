//! Periodicity obstruction tests and the per-knot, per-period verdict
//! pipeline: genus bounds, quotient-polynomial congruences, the homology
//! condition, and the correction-term multiplicity tests.

use crate::dtable::DTable;
use crate::group::{self, AbelianGroupType};
use crate::laurent::{FpPoly, LaurentPoly};
use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Signed;
use std::collections::BTreeMap;
use std::fmt;

/// Smallest g >= 1 with ell^g = +-1 mod q.
pub fn g_ql(q: u64, ell: u64) -> u32 {
    assert!(ell % q != 0);
    let mut pow = ell % q;
    for g in 1.. {
        if pow == 1 || pow == q - 1 {
            return g;
        }
        pow = pow * ell % q;
    }
    unreachable!()
}

/// Genus-based conditions on a candidate period q: q <= 2g+1 with q <= g or
/// q in {g+1, 2g+1}, plus 2g >= q * (degree of the quotient polynomial).
pub fn edmonds_check(genus: i64, q: u64, quotient_span: i64) -> bool {
    let q = q as i64;
    let g = genus;
    if q > 2 * g + 1 {
        return false;
    }
    if q > g && q != g + 1 && q != 2 * g + 1 {
        return false;
    }
    2 * g >= q * quotient_span
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MurasugiCandidate {
    pub quotient_poly: LaurentPoly,
    pub lambda: u64,
    /// per prime l dividing the cover's homology order: v_l(|quotient(-1)|)
    pub m_per_prime: BTreeMap<u64, u32>,
}

impl fmt::Display for MurasugiCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, lambda={})", self.quotient_poly, self.lambda)
    }
}

/// All quotient-polynomial candidates surviving the divisibility, span,
/// congruence, and genus conditions.
pub fn murasugi_candidates(
    delta: &LaurentPoly,
    q: u64,
    genus: i64,
) -> Vec<MurasugiCandidate> {
    let det = delta.eval_at_minus_one().abs();
    let det_primes: Vec<u64> = group::factorize(&u64::try_from(&det).expect("huge determinant"))
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    let delta_q = delta.mod_prime(q);
    let mut out = vec![];
    for div in crate::factor::symmetric_divisors(delta) {
        let div_q = div.mod_prime(q);
        if div_q.is_zero() {
            continue;
        }
        let num = delta_q.span() - (q as i64) * div_q.span();
        if num % (q as i64 - 1) != 0 {
            continue;
        }
        let lambda = 1 + num / (q as i64 - 1);
        if lambda < 1 || lambda as u64 % q == 0 {
            continue;
        }
        // full congruence delta = div^q * (1+t+...+t^(lambda-1))^(q-1) in F_q
        // up to a unit
        let cyclic = FpPoly::from_coeffs(q, vec![1; lambda as usize]);
        let rhs = div_q.pow(q as u32).mul(&cyclic.pow(q as u32 - 1));
        if !delta_q.eq_up_to_unit(&rhs) {
            continue;
        }
        if !edmonds_check(genus, q, div.span()) {
            continue;
        }
        let div_det = div.eval_at_minus_one().abs();
        let div_det_u = u64::try_from(&div_det).expect("huge quotient determinant");
        let m_per_prime = det_primes
            .iter()
            .map(|&l| {
                let mut m = 0;
                let mut n = div_det_u;
                while n % l == 0 {
                    n /= l;
                    m += 1;
                }
                (l, m)
            })
            .collect();
        out.push(MurasugiCandidate { quotient_poly: div, lambda: lambda as u64, m_per_prime });
    }
    out
}

/// The homology condition: for every prime l != q dividing the cover's
/// homology order, the l-primary type must admit a suitable quotient shape.
pub fn homology_check(
    group_type: &AbelianGroupType,
    cand: &MurasugiCandidate,
    q: u64,
) -> std::result::Result<(), Witness> {
    for ell in group_type.primes() {
        if ell == q {
            continue;
        }
        let g = g_ql(q, ell);
        let m = cand.m_per_prime.get(&ell).copied().unwrap_or(0);
        let lambda = group_type.partition(ell);
        if !group::quotient_type_feasible(lambda, q, ell, g, m) {
            return Err(Witness::Homology { lambda: lambda.to_vec(), q, ell, g, m });
        }
    }
    Ok(())
}

/// Multiplicity divisibility over the nonzero labels of an l-primary slice
/// (the case of trivial quotient homology at l).
pub fn thm13_test(slice: &DTable, ell: u64, q: u64) -> std::result::Result<(), Witness> {
    let tally = slice.multiplicity_tally(true);
    for (value, mult) in tally {
        if mult % q != 0 {
            return Err(Witness::MultiplicityNotDivisible { ell, q, value, multiplicity: mult });
        }
    }
    Ok(())
}

/// Bound on the sum of multiplicity residues over the full l-primary slice
/// (the case of quotient homology of order h_order at l).
pub fn thm16_test(
    slice: &DTable,
    ell: u64,
    q: u64,
    h_order: u64,
) -> std::result::Result<(), Witness> {
    let tally = slice.multiplicity_tally(false);
    let sum: u64 = tally.values().map(|m| m % q).sum();
    if sum > h_order {
        Err(Witness::ResidueSumExceeds { ell, q, sum, bound: h_order })
    } else {
        Ok(())
    }
}

/// Largest feasible order of the fixed subgroup, as an exponent of q:
/// maximize |mu| over subgroup types mu <= lambda_q with
/// |mu| <= #parts(mu) + m_q.
pub fn max_fix_exponent(lambda_q: &[u32], m_q: u32) -> u32 {
    group::sub_partitions(lambda_q)
        .iter()
        .filter(|mu| mu.iter().sum::<u32>() <= mu.len() as u32 + m_q)
        .map(|mu| mu.iter().sum::<u32>())
        .max()
        .unwrap_or(0)
}

/// Fixed-point count bound on the q-primary slice: at least
/// q^|lambda_q| - maxFix labels must carry values whose multiplicity is
/// divisible by q.
pub fn thm18_test(
    slice: &DTable,
    lambda_q: &[u32],
    q: u64,
    m_q: u32,
) -> std::result::Result<(), Witness> {
    let total: u32 = lambda_q.iter().sum();
    let max_fix = q.pow(max_fix_exponent(lambda_q, m_q));
    let required = q.pow(total) as i64 - max_fix as i64;
    if required <= 0 {
        return Ok(());
    }
    let tally = slice.multiplicity_tally(false);
    let divisible: u64 = tally.values().filter(|&&m| m % q == 0).sum();
    if (divisible as i64) < required {
        Err(Witness::TooFewDivisibleLabels {
            q,
            m_q,
            lambda_q: lambda_q.to_vec(),
            required: required as u64,
            divisible,
        })
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// genus conditions exclude the period outright
    Edmonds { genus: i64, q: u64 },
    /// no quotient polynomial satisfies the congruence conditions
    NoCandidates { q: u64, genus: i64 },
    /// homology condition infeasible at prime ell
    Homology { lambda: Vec<u32>, q: u64, ell: u64, g: u32, m: u32 },
    MultiplicityNotDivisible { ell: u64, q: u64, value: Rational64, multiplicity: u64 },
    ResidueSumExceeds { ell: u64, q: u64, sum: u64, bound: u64 },
    TooFewDivisibleLabels { q: u64, m_q: u32, lambda_q: Vec<u32>, required: u64, divisible: u64 },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Edmonds { genus, q } => {
                write!(f, "genus bound: q={q} incompatible with genus {genus}")
            }
            Witness::NoCandidates { q, genus } => {
                write!(f, "no quotient polynomial candidate for q={q} at genus {genus}")
            }
            Witness::Homology { lambda, q, ell, g, m } => write!(
                f,
                "homology condition fails at ell={ell}: type {lambda:?}, q={q}, g={g}, m={m}"
            ),
            Witness::MultiplicityNotDivisible { ell, q, value, multiplicity } => write!(
                f,
                "multiplicity {multiplicity} of value {value} in the {ell}-primary slice \
                 is not divisible by {q}"
            ),
            Witness::ResidueSumExceeds { ell, q, sum, bound } => write!(
                f,
                "sum of multiplicity residues mod {q} over the {ell}-primary slice \
                 is {sum} > {bound}"
            ),
            Witness::TooFewDivisibleLabels { q, m_q, lambda_q, required, divisible } => write!(
                f,
                "{q}-primary slice (type {lambda_q:?}, m={m_q}): {divisible} labels with \
                 {q}-divisible multiplicity, need {required}"
            ),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Edmonds,
    Murasugi,
    Homology,
    CorrectionTerms,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Stage::Edmonds => "edmonds",
            Stage::Murasugi => "murasugi",
            Stage::Homology => "homology",
            Stage::CorrectionTerms => "correction-terms",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Obstructed,
    NotObstructed,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Obstructed => write!(f, "obstructed"),
            Outcome::NotObstructed => write!(f, "not-obstructed"),
        }
    }
}

/// Everything the pipeline needs to know about one knot.
#[derive(Clone, Debug)]
pub struct KnotInvariants {
    pub name: String,
    pub delta: LaurentPoly,
    pub group_type: AbelianGroupType,
    /// None in homological-only runs
    pub dtable: Option<DTable>,
}

impl KnotInvariants {
    pub fn genus(&self) -> i64 {
        crate::alexander::alternating_genus(&self.delta)
    }

    pub fn det(&self) -> BigInt {
        self.delta.eval_at_minus_one().abs()
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionVerdict {
    pub knot: String,
    pub period: u64,
    pub outcome: Outcome,
    /// deepest stage reached by any candidate before dying; None when not
    /// obstructed
    pub stage: Option<Stage>,
    pub survivors: Vec<MurasugiCandidate>,
    pub witnesses: Vec<Witness>,
    pub trace: Vec<String>,
}

/// Runs the stages in order. A candidate surviving every applicable test
/// yields NotObstructed; the knot is obstructed only if all candidates die.
pub fn verdict(inv: &KnotInvariants, q: u64, homological_only: bool) -> ObstructionVerdict {
    let mut trace = vec![format!("knot {} period {q}", inv.name)];
    let genus = inv.genus();
    let mut witnesses = vec![];

    if inv.delta.is_one() && inv.group_type.per_prime.is_empty() {
        trace.push("trivial invariants: every test is vacuous".into());
        return ObstructionVerdict {
            knot: inv.name.clone(),
            period: q,
            outcome: Outcome::NotObstructed,
            stage: None,
            survivors: vec![MurasugiCandidate {
                quotient_poly: LaurentPoly::one(),
                lambda: 1,
                m_per_prime: BTreeMap::new(),
            }],
            witnesses,
            trace,
        };
    }

    if !edmonds_check(genus, q, 0) {
        trace.push(format!("stage edmonds: fail (genus {genus})"));
        witnesses.push(Witness::Edmonds { genus, q });
        return obstructed(inv, q, Stage::Edmonds, witnesses, trace);
    }
    trace.push(format!("stage edmonds: pass (genus {genus})"));

    let candidates = murasugi_candidates(&inv.delta, q, genus);
    trace.push(format!(
        "stage murasugi: {} candidate(s): {}",
        candidates.len(),
        candidates.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
    ));
    if candidates.is_empty() {
        witnesses.push(Witness::NoCandidates { q, genus });
        return obstructed(inv, q, Stage::Murasugi, witnesses, trace);
    }

    let mut after_homology = vec![];
    for cand in candidates {
        match homology_check(&inv.group_type, &cand, q) {
            Ok(()) => {
                trace.push(format!("stage homology: candidate {cand} passes"));
                after_homology.push(cand);
            }
            Err(w) => {
                trace.push(format!("stage homology: candidate {cand} fails: {w}"));
                witnesses.push(w);
            }
        }
    }
    if after_homology.is_empty() {
        return obstructed(inv, q, Stage::Homology, witnesses, trace);
    }

    if homological_only {
        trace.push("correction-term stage skipped (homological-only)".into());
        return not_obstructed(inv, q, after_homology, witnesses, trace);
    }

    let table = inv.dtable.as_ref().expect("full verdict requires a correction-term table");
    let mut survivors = vec![];
    for cand in after_homology {
        match correction_term_tests(table, &inv.group_type, &cand, q) {
            Ok(()) => {
                trace.push(format!("stage correction-terms: candidate {cand} passes"));
                survivors.push(cand);
            }
            Err(w) => {
                trace.push(format!("stage correction-terms: candidate {cand} fails: {w}"));
                witnesses.push(w);
            }
        }
    }
    if survivors.is_empty() {
        return obstructed(inv, q, Stage::CorrectionTerms, witnesses, trace);
    }
    not_obstructed(inv, q, survivors, witnesses, trace)
}

/// thm13 per prime with trivial quotient homology, thm16 per prime with
/// nontrivial quotient homology, thm18 at the period prime itself.
pub fn correction_term_tests(
    table: &DTable,
    group_type: &AbelianGroupType,
    cand: &MurasugiCandidate,
    q: u64,
) -> std::result::Result<(), Witness> {
    for ell in group_type.primes() {
        if ell == q {
            continue;
        }
        let slice = table.restrict_primary(ell);
        let m = cand.m_per_prime.get(&ell).copied().unwrap_or(0);
        if m == 0 {
            thm13_test(&slice, ell, q)?;
        } else {
            thm16_test(&slice, ell, q, ell.pow(m))?;
        }
    }
    let lambda_q = group_type.partition(q);
    if !lambda_q.is_empty() {
        let m_q = cand.m_per_prime.get(&q).copied().unwrap_or(0);
        let slice = table.restrict_primary(q);
        thm18_test(&slice, lambda_q, q, m_q)?;
    }
    Ok(())
}

fn obstructed(
    inv: &KnotInvariants,
    q: u64,
    stage: Stage,
    witnesses: Vec<Witness>,
    mut trace: Vec<String>,
) -> ObstructionVerdict {
    trace.push(format!("verdict: obstructed at {stage}"));
    ObstructionVerdict {
        knot: inv.name.clone(),
        period: q,
        outcome: Outcome::Obstructed,
        stage: Some(stage),
        survivors: vec![],
        witnesses,
        trace,
    }
}

fn not_obstructed(
    inv: &KnotInvariants,
    q: u64,
    survivors: Vec<MurasugiCandidate>,
    witnesses: Vec<Witness>,
    mut trace: Vec<String>,
) -> ObstructionVerdict {
    trace.push("verdict: not obstructed".into());
    ObstructionVerdict {
        knot: inv.name.clone(),
        period: q,
        outcome: Outcome::NotObstructed,
        stage: None,
        survivors,
        witnesses,
        trace,
    }
}

/// Re-evaluates an obstruction witness from the invariants alone; true iff
/// the recorded failure still holds.
pub fn replay_witness(inv: &KnotInvariants, witness: &Witness) -> bool {
    match witness {
        Witness::Edmonds { genus, q } => {
            *genus == inv.genus() && !edmonds_check(*genus, *q, 0)
        }
        Witness::NoCandidates { q, genus } => {
            murasugi_candidates(&inv.delta, *q, *genus).is_empty()
        }
        Witness::Homology { lambda, q, ell, g, m } => {
            inv.group_type.partition(*ell) == lambda.as_slice()
                && g_ql(*q, *ell) == *g
                && !group::quotient_type_feasible(lambda, *q, *ell, *g, *m)
        }
        Witness::MultiplicityNotDivisible { ell, q, value, multiplicity } => {
            let Some(t) = &inv.dtable else { return false };
            let tally = t.restrict_primary(*ell).multiplicity_tally(true);
            tally.get(value) == Some(multiplicity) && multiplicity % q != 0
        }
        Witness::ResidueSumExceeds { ell, q, sum, bound } => {
            let Some(t) = &inv.dtable else { return false };
            let tally = t.restrict_primary(*ell).multiplicity_tally(false);
            let s: u64 = tally.values().map(|m| m % q).sum();
            s == *sum && s > *bound
        }
        Witness::TooFewDivisibleLabels { q, m_q, lambda_q, required, divisible } => {
            let Some(t) = &inv.dtable else { return false };
            if inv.group_type.partition(*q) != lambda_q.as_slice() {
                return false;
            }
            let total: u32 = lambda_q.iter().sum();
            let max_fix = q.pow(max_fix_exponent(lambda_q, *m_q));
            let req = q.pow(total) as i64 - max_fix as i64;
            let tally = t.restrict_primary(*q).multiplicity_tally(false);
            let div: u64 = tally.values().filter(|&&m| m % q == 0).sum();
            req == *required as i64 && div == *divisible && (div as i64) < req
        }
    }
}
