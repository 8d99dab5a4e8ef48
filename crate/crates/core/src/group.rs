//! Finite abelian groups presented by integer matrices: invariant factors,
//! per-prime partition types, and the quotient-shape feasibility test.

use crate::error::{Error, Result};
use crate::snf::{self, Mat};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Cokernel of a square integer matrix of nonzero determinant, with the
/// Smith transforms needed to move between presentation coordinates and
/// canonical (invariant-factor residue) coordinates.
#[derive(Clone, Debug)]
pub struct GroupPresentation {
    /// invariant factors > 1, divisibility chain d1 | d2 | ... | dk
    pub invariant_factors: Vec<BigInt>,
    /// all diagonal entries of the Smith form, including units
    pub all_factors: Vec<BigInt>,
    /// row transform: canonical coords of x are (to_canonical * x) mod factors
    pub to_canonical: Mat,
    pub from_canonical: Mat,
}

impl GroupPresentation {
    pub fn from_matrix(m: &Mat) -> Result<Self> {
        let s = snf::smith_normal_form(m);
        if s.factors.iter().any(Zero::is_zero) {
            return Err(Error::SingularMatrix);
        }
        let invariant_factors: Vec<BigInt> =
            s.factors.iter().filter(|f| !f.is_one()).cloned().collect();
        Ok(GroupPresentation {
            invariant_factors,
            all_factors: s.factors,
            to_canonical: s.u,
            from_canonical: s.u_inv,
        })
    }

    pub fn trivial() -> Self {
        GroupPresentation {
            invariant_factors: vec![],
            all_factors: vec![],
            to_canonical: vec![],
            from_canonical: vec![],
        }
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product::<BigInt>().max(BigInt::one())
    }

    /// Reduces a vector in presentation coordinates to canonical residues,
    /// one per invariant factor > 1.
    pub fn canonical_label(&self, x: &[BigInt]) -> Vec<BigInt> {
        let full = snf::mat_vec(&self.to_canonical, x);
        full.iter()
            .zip(&self.all_factors)
            .filter(|(_, f)| !f.is_one())
            .map(|(v, f)| num_integer::Integer::mod_floor(v, f))
            .collect()
    }

    pub fn group_type(&self) -> AbelianGroupType {
        let mut primes: Vec<u64> = vec![];
        for f in &self.invariant_factors {
            for (p, _) in factorize(&u64::try_from(f).expect("group order exceeds u64")) {
                if !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
        primes.sort_unstable();
        let per_prime = primes
            .into_iter()
            .map(|p| {
                let mut parts: Vec<u32> = self
                    .invariant_factors
                    .iter()
                    .map(|f| {
                        let n = u64::try_from(f).unwrap();
                        factorize(&n).iter().find(|(q, _)| *q == p).map_or(0, |(_, e)| *e)
                    })
                    .filter(|&e| e > 0)
                    .collect();
                parts.sort_unstable_by(|a, b| b.cmp(a));
                (p, parts)
            })
            .collect();
        AbelianGroupType { per_prime }
    }
}

/// Per-prime partitions: for prime l, the exponents e of the cyclic pieces
/// Z_{l^e}, sorted decreasingly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupType {
    pub per_prime: Vec<(u64, Vec<u32>)>,
}

impl AbelianGroupType {
    pub fn partition(&self, ell: u64) -> &[u32] {
        self.per_prime
            .iter()
            .find(|(p, _)| *p == ell)
            .map(|(_, parts)| parts.as_slice())
            .unwrap_or(&[])
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.per_prime.iter().map(|(p, _)| *p)
    }

    pub fn order(&self) -> BigInt {
        let mut n = BigInt::one();
        for (p, parts) in &self.per_prime {
            let total: u32 = parts.iter().sum();
            n *= BigInt::from(*p).pow(total);
        }
        n
    }

    /// Rebuilds the invariant factors from the per-prime partitions.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let len = self.per_prime.iter().map(|(_, parts)| parts.len()).max().unwrap_or(0);
        let mut out = vec![BigInt::one(); len];
        for (p, parts) in &self.per_prime {
            for (i, &e) in parts.iter().enumerate() {
                // largest part goes to the largest invariant factor
                out[len - 1 - i] *= BigInt::from(*p).pow(e);
            }
        }
        out
    }
}

pub fn factorize(n: &u64) -> Vec<(u64, u32)> {
    let mut n = *n;
    let mut out = vec![];
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Whether a finite abelian l-group of type `lambda` admits a quotient of
/// type nu with every part-multiplicity of nu divisible by 2g, by a
/// subgroup of order l^m. Quotient types of a group of type lambda are
/// exactly the partitions nu with nu_i <= lambda_i coordinatewise.
pub fn quotient_type_feasible(lambda: &[u32], _q: u64, _ell: u64, g: u32, m: u32) -> bool {
    let total: u32 = lambda.iter().sum();
    if total < m {
        return false;
    }
    let target = total - m;
    sub_partitions(lambda).iter().any(|nu| {
        nu.iter().sum::<u32>() == target && multiplicities_divisible(nu, 2 * g)
    })
}

fn multiplicities_divisible(nu: &[u32], d: u32) -> bool {
    let mut i = 0;
    while i < nu.len() {
        let j = nu[i..].iter().take_while(|&&x| x == nu[i]).count();
        if (j as u32) % d != 0 {
            return false;
        }
        i += j;
    }
    true
}

/// All partitions nu with nu_i <= lambda_i (lambda sorted decreasingly),
/// each returned sorted decreasingly with zero parts dropped, deduplicated.
pub fn sub_partitions(lambda: &[u32]) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![];
    let mut cur = vec![0u32; lambda.len()];
    loop {
        let mut nu: Vec<u32> = cur.iter().copied().filter(|&x| x > 0).collect();
        nu.sort_unstable_by(|a, b| b.cmp(a));
        if !out.contains(&nu) {
            out.push(nu);
        }
        let mut i = 0;
        loop {
            if i == lambda.len() {
                return out;
            }
            if cur[i] < lambda[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}
