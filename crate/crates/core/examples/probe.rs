use persieve_core::alexander::alexander;
use persieve_core::factor::symmetric_divisors;
use persieve_core::goeritz::goeritz;
use persieve_core::group::{self, GroupPresentation};
use persieve_core::knotlist::parse_knot_list;
use persieve_core::laurent::{FpPoly, LaurentPoly};
use persieve_core::obstruct::{
    edmonds_check, g_ql, homology_check, murasugi_candidates, MurasugiCandidate,
};
use std::collections::BTreeMap;

// murasugi_candidates with the per-candidate genus-span condition dropped
fn loose_candidates(delta: &LaurentPoly, q: u64) -> Vec<(MurasugiCandidate, bool)> {
    let det = {
        use num_traits::Signed;
        delta.eval_at_minus_one().abs()
    };
    let det_primes: Vec<u64> = group::factorize(&u64::try_from(&det).unwrap())
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    let delta_q = delta.mod_prime(q);
    let genus = delta.span() / 2;
    let mut out = vec![];
    for div in symmetric_divisors(delta) {
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
        let cyclic = FpPoly::from_coeffs(q, vec![1; lambda as usize]);
        let rhs = div_q.pow(q as u32).mul(&cyclic.pow(q as u32 - 1));
        if !delta_q.eq_up_to_unit(&rhs) {
            continue;
        }
        let edmonds_ok = edmonds_check(genus, q, div.span());
        let div_det = {
            use num_traits::Signed;
            div.eval_at_minus_one().abs()
        };
        let div_det_u = u64::try_from(&div_det).unwrap();
        let m_per_prime: BTreeMap<u64, u32> = det_primes
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
        out.push((
            MurasugiCandidate { quotient_poly: div, lambda: lambda as u64, m_per_prime },
            edmonds_ok,
        ));
    }
    out
}

fn main() {
    let q = 3u64;
    let text = std::fs::read_to_string("tables/15a.txt").unwrap();
    let knots = parse_knot_list(&text).unwrap();
    for d in &knots {
        let delta = alexander(d);
        let genus = delta.span() / 2;
        let strict = murasugi_candidates(&delta, q, genus);
        let form = goeritz(d).unwrap();
        let pres = GroupPresentation::from_matrix(&form.matrix).unwrap();
        let gt = pres.group_type();
        if strict.iter().any(|c| homology_check(&gt, c, q).is_ok()) {
            continue;
        }
        for c in &strict {
            // allow the embedded subgroup to have any order l^j, j <= m
            let hom_loose = gt.primes().filter(|&l| l != q).all(|l| {
                let m = c.m_per_prime.get(&l).copied().unwrap_or(0);
                (0..=m).any(|j| {
                    group::quotient_type_feasible(gt.partition(l), q, l, g_ql(q, l), j)
                })
            });
            if hom_loose {
                println!("{} genus={} cand={} span={}", d.name, genus, c, c.quotient_poly.span());
            }
        }
        let _ = loose_candidates(&delta, q);
    }
}
