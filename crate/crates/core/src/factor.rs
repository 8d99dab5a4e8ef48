//! Factorization of integer polynomials into irreducibles, and enumeration
//! of the symmetric (palindromic up to units) divisors of a polynomial.
//!
//! Pipeline: squarefree decomposition over Z, monicize, factor the monic
//! part modulo a small prime, Hensel-lift past the coefficient bound, then
//! recombine modular factors by subsets. Degrees here are small (under 20),
//! so no effort is spent on asymptotics.

use crate::laurent::LaurentPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Irreducible primitive factors (positive leading coefficient, constant
/// term nonzero) with multiplicities, of the primitive part of `poly`.
/// Powers of t and the integer content are dropped.
pub fn factor(poly: &LaurentPoly) -> Vec<(LaurentPoly, u32)> {
    assert!(!poly.is_zero(), "cannot factor the zero polynomial");
    let mut f = primitive(&poly.normalized());
    if f.span() == 0 {
        return vec![];
    }
    let mut out: Vec<(LaurentPoly, u32)> = vec![];
    for (part, mult) in squarefree_decomposition(&f) {
        for irr in factor_squarefree(&part) {
            out.push((irr, mult));
        }
    }
    // deterministic order: by degree, then coefficients
    out.sort_by(|a, b| cmp_poly(&a.0, &b.0));
    // sanity: product of factors equals f up to content
    let mut prod = LaurentPoly::one();
    for (g, m) in &out {
        prod = prod.mul(&g.pow(*m));
    }
    f = primitive(&f);
    debug_assert_eq!(primitive(&prod), f);
    out
}

fn cmp_poly(a: &LaurentPoly, b: &LaurentPoly) -> std::cmp::Ordering {
    a.span().cmp(&b.span()).then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// All divisors of `poly` (up to units, each with lowest exponent zero and
/// positive leading coefficient) that are palindromic. Includes 1, and
/// `poly` itself when it is palindromic. Sorted by degree then coefficients.
pub fn symmetric_divisors(poly: &LaurentPoly) -> Vec<LaurentPoly> {
    let factors = factor(poly);
    let mut out: Vec<LaurentPoly> = vec![];
    let mut exps = vec![0u32; factors.len()];
    loop {
        let mut prod = LaurentPoly::one();
        for (i, (g, _)) in factors.iter().enumerate() {
            prod = prod.mul(&g.pow(exps[i]));
        }
        let prod = prod.normalized();
        if prod.is_symmetric() && !out.contains(&prod) {
            out.push(prod);
        }
        // odometer over 0..=mult per factor
        let mut i = 0;
        loop {
            if i == factors.len() {
                out.sort_by(cmp_poly);
                return out;
            }
            if exps[i] < factors[i].1 {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

fn primitive(p: &LaurentPoly) -> LaurentPoly {
    let c = p.content();
    let mut q = p.div_exact(&LaurentPoly::from_coeffs(0, vec![c])).unwrap();
    if q.leading().is_negative() {
        q = q.neg();
    }
    q.normalized()
}

fn derivative(p: &LaurentPoly) -> LaurentPoly {
    // p has lowest exponent 0 here
    let coeffs: Vec<BigInt> = p
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    LaurentPoly::from_coeffs(0, coeffs)
}

fn scalar_mul(p: &LaurentPoly, c: &BigInt) -> LaurentPoly {
    p.mul(&LaurentPoly::from_coeffs(0, vec![c.clone()]))
}

/// Pseudo-remainder of a by b (b nonzero, deg a >= deg b).
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let d = a.span() - b.span() + 1;
    let mut lead_pow = BigInt::one();
    for _ in 0..d {
        lead_pow *= b.leading();
    }
    let scaled = scalar_mul(a, &lead_pow);
    let mut rem = scaled.coeffs().to_vec();
    let bc = b.coeffs();
    for k in (bc.len() - 1..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let q = &rem[k] / b.leading();
        let base = k + 1 - bc.len();
        for (j, bj) in bc.iter().enumerate() {
            let t = &q * bj;
            rem[base + j] -= t;
        }
    }
    LaurentPoly::from_coeffs(0, rem)
}

fn gcd_int_poly(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return if b.is_zero() { LaurentPoly::zero() } else { primitive(b) };
    }
    if b.is_zero() {
        return primitive(a);
    }
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.span() < b.span() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if r.is_zero() { r } else { primitive(&r) };
        if !b.is_zero() && a.span() < b.span() {
            std::mem::swap(&mut a, &mut b);
        }
    }
    a
}

/// Yun's algorithm; input primitive with positive lead. Returns squarefree
/// parts with multiplicities, product recovering the input up to sign.
fn squarefree_decomposition(f: &LaurentPoly) -> Vec<(LaurentPoly, u32)> {
    let df = derivative(f);
    let g = gcd_int_poly(f, &df);
    if g.span() == 0 {
        return vec![(f.clone(), 1)];
    }
    let mut out = vec![];
    let mut c = f.div_exact(&g).unwrap();
    let mut d = df.div_exact(&g).unwrap().sub(&derivative(&c));
    let mut i = 1u32;
    loop {
        let p = gcd_int_poly(&c, &d);
        if p.span() > 0 {
            out.push((p.clone(), i));
        }
        c = c.div_exact(&p).unwrap();
        if c.span() == 0 {
            break;
        }
        d = d.div_exact(&p).unwrap().sub(&derivative(&c));
        i += 1;
    }
    out
}

// ---- arithmetic modulo a small prime ----

#[derive(Clone, Debug, PartialEq)]
struct PolyP {
    p: u64,
    c: Vec<u64>, // dense, lowest first, no trailing zeros
}

impl PolyP {
    fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in &mut c {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyP { p, c }
    }

    fn zero(p: u64) -> Self {
        PolyP { p, c: vec![] }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = crate::laurent::mod_inverse(*self.c.last().unwrap(), self.p);
        PolyP::new(self.p, self.c.iter().map(|&x| x * inv % self.p).collect())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut c = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in other.c.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % self.p;
            }
        }
        PolyP::new(self.p, c)
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut c = vec![0u64; n];
        for (i, x) in c.iter_mut().enumerate() {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = other.c.get(i).copied().unwrap_or(0);
            *x = (a + self.p - b) % self.p;
        }
        PolyP::new(self.p, c)
    }

    fn rem(&self, m: &Self) -> Self {
        assert!(!m.is_zero());
        let mut r = self.c.clone();
        let inv = crate::laurent::mod_inverse(*m.c.last().unwrap(), self.p);
        while r.len() >= m.c.len() {
            let lead = *r.last().unwrap() % self.p;
            if lead != 0 {
                let q = lead * inv % self.p;
                let base = r.len() - m.c.len();
                for (j, &mj) in m.c.iter().enumerate() {
                    let s = q * mj % self.p;
                    r[base + j] = (r[base + j] + self.p - s) % self.p;
                }
            }
            r.pop();
        }
        PolyP::new(self.p, r)
    }

    fn derivative(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &x)| x * (i as u64 % self.p) % self.p)
            .collect();
        PolyP::new(self.p, c)
    }

    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// x^e mod m by square and multiply.
    fn x_pow_mod(e: u64, m: &Self) -> Self {
        let p = m.p;
        let mut result = PolyP::new(p, vec![1]);
        let mut base = PolyP::new(p, vec![0, 1]).rem(m);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        result
    }

    fn divmod(&self, m: &Self) -> (Self, Self) {
        assert!(!m.is_zero());
        let inv = crate::laurent::mod_inverse(*m.c.last().unwrap(), self.p);
        let mut r = self.c.clone();
        if r.len() < m.c.len() {
            return (Self::zero(self.p), self.clone());
        }
        let mut q = vec![0u64; r.len() - m.c.len() + 1];
        for k in (0..q.len()).rev() {
            let lead = r[k + m.c.len() - 1] % self.p;
            if lead == 0 {
                continue;
            }
            let qq = lead * inv % self.p;
            q[k] = qq;
            for (j, &mj) in m.c.iter().enumerate() {
                let s = qq * mj % self.p;
                r[k + j] = (r[k + j] + self.p - s) % self.p;
            }
        }
        (PolyP::new(self.p, q), PolyP::new(self.p, r))
    }

    /// Extended Euclid: returns (g, s, t) monic g with s*a + t*b = g.
    fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let p = a.p;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (PolyP::new(p, vec![1]), PolyP::zero(p));
        let (mut t0, mut t1) = (PolyP::zero(p), PolyP::new(p, vec![1]));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            r0 = r1;
            r1 = r;
            let s2 = s0.sub(&q.mul(&s1));
            s0 = s1;
            s1 = s2;
            let t2 = t0.sub(&q.mul(&t1));
            t0 = t1;
            t1 = t2;
        }
        let lead = *r0.c.last().expect("gcd of zero polynomials");
        let inv = crate::laurent::mod_inverse(lead, p);
        let scale = |x: &PolyP| PolyP::new(p, x.c.iter().map(|&v| v * inv % p).collect());
        (r0.monic(), scale(&s0), scale(&t0))
    }
}

// ---- Berlekamp factorization of a monic squarefree polynomial mod p ----

fn berlekamp(f: &PolyP) -> Vec<PolyP> {
    let p = f.p;
    let n = f.deg() as usize;
    if n <= 1 {
        return vec![f.clone()];
    }
    // rows of q: coefficient vectors of x^{ip} mod f
    let xp = PolyP::x_pow_mod(p, f);
    let mut q: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = PolyP::new(p, vec![1]);
    for i in 0..n {
        if i > 0 {
            cur = cur.mul(&xp).rem(f);
        }
        let mut row = vec![0u64; n];
        for (j, &c) in cur.c.iter().enumerate() {
            row[j] = c;
        }
        q.push(row);
    }
    // nullspace basis of (q - I) transposed, i.e. of the fixed space of Frobenius
    let mut m = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = (q[j][i] + if i == j { p - 1 } else { 0 }) % p;
        }
    }
    let basis = nullspace(&mut m, p);
    let r = basis.len();
    let mut factors = vec![f.monic()];
    for v in &basis {
        if factors.len() == r {
            break;
        }
        let vp = PolyP::new(p, v.clone());
        if vp.deg() < 1 {
            continue;
        }
        let mut next = vec![];
        for u in factors {
            if u.deg() <= 1 || next.len() + 1 == r {
                next.push(u);
                continue;
            }
            let mut pieces = vec![u];
            for s in 0..p {
                let mut done = vec![];
                let mut todo = vec![];
                for w in pieces {
                    if w.deg() <= 1 {
                        done.push(w);
                        continue;
                    }
                    let shifted = vp.sub(&PolyP::new(p, vec![s]));
                    let g = w.gcd(&shifted.rem(&w));
                    if g.deg() >= 1 && g.deg() < w.deg() {
                        let (q2, r2) = w.divmod(&g);
                        debug_assert!(r2.is_zero());
                        done.push(g);
                        todo.push(q2.monic());
                    } else {
                        todo.push(w);
                    }
                }
                pieces = done.into_iter().chain(todo).collect();
            }
            next.extend(pieces);
        }
        factors = next;
    }
    factors.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.c.cmp(&b.c)));
    factors
}

fn nullspace(m: &mut [Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut pivot_col_of_row = vec![];
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..n).find(|&i| m[i][col] % p != 0) else { continue };
        m.swap(row, pr);
        let inv = crate::laurent::mod_inverse(m[row][col], p);
        for j in 0..n {
            m[row][j] = m[row][j] * inv % p;
        }
        for i in 0..n {
            if i != row && m[i][col] != 0 {
                let c = m[i][col];
                for j in 0..n {
                    let s = c * m[row][j] % p;
                    m[i][j] = (m[i][j] + p - s) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let pivots: std::collections::HashSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = vec![];
    for free in 0..n {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = (p - m[r][free] % p) % p;
        }
        basis.push(v);
    }
    basis
}

// ---- Hensel lifting of a monic factorization, coefficients mod m ----

type ModPoly = Vec<BigInt>; // dense, coefficients in [0, m)

fn mp_trim(mut v: ModPoly) -> ModPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn mp_reduce(v: &[BigInt], m: &BigInt) -> ModPoly {
    mp_trim(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn mp_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    mp_reduce(&out, m)
}

fn mp_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ModPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        *o = (x - y).mod_floor(m);
    }
    mp_trim(out)
}

fn mp_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ModPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        *o = (x + y).mod_floor(m);
    }
    mp_trim(out)
}

/// Division by a monic polynomial, mod m.
fn mp_divmod(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (ModPoly, ModPoly) {
    assert!(d.last().is_some_and(One::is_one), "divisor must be monic");
    let mut r: Vec<BigInt> = a.to_vec();
    if r.len() < d.len() {
        return (vec![], mp_trim(r));
    }
    let mut q = vec![BigInt::zero(); r.len() - d.len() + 1];
    for k in (0..q.len()).rev() {
        let lead = r[k + d.len() - 1].mod_floor(m);
        if lead.is_zero() {
            continue;
        }
        for (j, dj) in d.iter().enumerate() {
            let t = &lead * dj;
            r[k + j] = (&r[k + j] - t).mod_floor(m);
        }
        q[k] = lead;
    }
    (mp_trim(q), mp_reduce(&r, m))
}

/// One quadratic Hensel step: from f = g*h and s*g + t*h = 1 (mod m)
/// to the same congruences mod m^2. h monic; f monic here too.
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (ModPoly, ModPoly, ModPoly, ModPoly) {
    let m2 = m * m;
    let fr = mp_reduce(f, &m2);
    let e = mp_sub(&fr, &mp_mul(g, h, &m2), &m2);
    let (q, r) = mp_divmod(&mp_mul(s, &e, &m2), h, &m2);
    let g1 = mp_add(&mp_add(g, &mp_mul(t, &e, &m2), &m2), &mp_mul(&q, g, &m2), &m2);
    let h1 = mp_add(h, &r, &m2);
    let one = vec![BigInt::one()];
    let b = mp_sub(
        &mp_add(&mp_mul(s, &g1, &m2), &mp_mul(t, &h1, &m2), &m2),
        &one,
        &m2,
    );
    let (c, d) = mp_divmod(&mp_mul(s, &b, &m2), &h1, &m2);
    let s1 = mp_sub(s, &d, &m2);
    let t1 = mp_sub(&mp_sub(t, &mp_mul(t, &b, &m2), &m2), &mp_mul(&c, &g1, &m2), &m2);
    (g1, h1, s1, t1)
}

fn polyp_to_mod(f: &PolyP) -> ModPoly {
    f.c.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts the monic factorization f = prod(facs) mod p to modulus `target`
/// (a power of p at least as large as requested by the caller).
fn hensel_lift_list(f: &[BigInt], facs: &[PolyP], p: u64, target: &BigInt) -> Vec<ModPoly> {
    if facs.len() == 1 {
        return vec![mp_reduce(f, target)];
    }
    let half = facs.len() / 2;
    let pp = BigInt::from(p);
    let mut g0 = PolyP::new(p, vec![1]);
    for fac in &facs[..half] {
        g0 = g0.mul(fac);
    }
    let mut h0 = PolyP::new(p, vec![1]);
    for fac in &facs[half..] {
        h0 = h0.mul(fac);
    }
    let (gcd, s0, t0) = PolyP::ext_gcd(&g0, &h0);
    assert_eq!(gcd.deg(), 0, "modular factors not coprime");
    let (mut g, mut h) = (polyp_to_mod(&g0), polyp_to_mod(&h0));
    let (mut s, mut t) = (polyp_to_mod(&s0), polyp_to_mod(&t0));
    let mut m = pp.clone();
    while &m < target {
        let (g1, h1, s1, t1) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    let mut out = hensel_lift_list(&g, &facs[..half], p, &m);
    out.extend(hensel_lift_list(&h, &facs[half..], p, &m));
    // reduce everything to the common final modulus for recombination
    out.into_iter().map(|fac| mp_reduce(&fac, &m)).collect()
}

// ---- top level over Z ----

fn poly_to_vec(f: &LaurentPoly) -> Vec<BigInt> {
    assert_eq!(f.lowest_exponent(), 0);
    f.coeffs().to_vec()
}

fn vec_to_poly(v: &[BigInt]) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, v.to_vec())
}

fn symmetric_rep(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m { r - m } else { r }
}

const SMALL_PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Factors a primitive squarefree polynomial (positive lead, nonzero
/// constant term) into irreducibles over Z.
fn factor_squarefree(f: &LaurentPoly) -> Vec<LaurentPoly> {
    if f.span() <= 1 {
        return vec![f.clone()];
    }
    let c = f.leading().clone();
    let n = f.span() as usize;
    // monicize: F(y) = c^(n-1) f(y/c), coefficient of y^i is f_i c^(n-1-i)
    let mut mono = vec![BigInt::zero(); n + 1];
    mono[n] = BigInt::one();
    let mut pow = BigInt::one();
    for i in (0..n).rev() {
        mono[i] = f.coeff(i as i64) * &pow;
        pow *= &c;
    }
    let monic_factors = factor_monic(&mono);
    monic_factors
        .iter()
        .map(|g| {
            // undo the substitution: g(c x), then strip content
            let mut pow = BigInt::one();
            let coeffs: Vec<BigInt> = g
                .iter()
                .map(|gi| {
                    let r = gi * &pow;
                    pow *= &c;
                    r
                })
                .collect();
            primitive(&LaurentPoly::from_coeffs(0, coeffs))
        })
        .collect()
}

/// Factors a monic squarefree integer polynomial into monic irreducibles.
fn factor_monic(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    let p = *SMALL_PRIMES
        .iter()
        .find(|&&p| {
            let fp = PolyP::new(p, f.iter().map(|c| digit_mod(c, p)).collect());
            fp.deg() == n as i64 && fp.gcd(&fp.derivative()).deg() == 0
        })
        .expect("no good small prime; discriminant divisible by all candidates");
    let fp = PolyP::new(p, f.iter().map(|c| digit_mod(c, p)).collect());
    let mod_factors = berlekamp(&fp);
    if mod_factors.len() == 1 {
        return vec![f.to_vec()];
    }
    // coefficient bound for monic factors: 2^n * l1 norm, doubled for sign
    let l1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = l1 * (BigInt::one() << (n + 1));
    let lifted = hensel_lift_list(f, &mod_factors, p, &bound);
    let modulus = {
        let mut m = BigInt::from(p);
        while m < bound {
            m = &m * &m;
        }
        m
    };

    let mut remaining: Vec<ModPoly> = lifted;
    let mut current = f.to_vec();
    let mut out: Vec<Vec<BigInt>> = vec![];
    let mut d = 1usize;
    while 2 * d <= remaining.len() {
        let mut found = true;
        while found {
            found = false;
            for combo in combinations(remaining.len(), d) {
                let mut prod: ModPoly = vec![BigInt::one()];
                for &i in &combo {
                    prod = mp_mul(&prod, &remaining[i], &modulus);
                }
                let cand: Vec<BigInt> =
                    prod.iter().map(|c| symmetric_rep(c, &modulus)).collect();
                let cur_poly = vec_to_poly(&current);
                let cand_poly = vec_to_poly(&cand);
                if let Some(quot) = cur_poly.div_exact(&cand_poly) {
                    out.push(cand);
                    current = poly_to_vec(&quot);
                    for &i in combo.iter().rev() {
                        remaining.remove(i);
                    }
                    found = true;
                    break;
                }
                if 2 * d > remaining.len() {
                    break;
                }
            }
        }
        d += 1;
    }
    if current.len() > 1 {
        out.push(current);
    }
    out
}

fn digit_mod(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.to_u64_digits().1.first().copied().unwrap_or(0)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = vec![0usize; k];
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize, pos: usize, n: usize) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur[pos] = i;
            rec(out, cur, i + 1, pos + 1, n);
        }
    }
    rec(&mut out, &mut cur, 0, 0, n);
    out
}
