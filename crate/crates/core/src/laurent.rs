//! Integer Laurent polynomials and their reductions modulo a prime.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Integer-coefficient Laurent polynomial, stored densely from the lowest
/// nonzero exponent. The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { lo: 0, coeffs: vec![] }
    }

    pub fn one() -> Self {
        LaurentPoly { lo: 0, coeffs: vec![BigInt::one()] }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(0, vec![BigInt::from(c)])
    }

    /// Builds from a lowest exponent and dense coefficients, trimming zeros.
    pub fn from_coeffs(lo: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { lo, coeffs };
        p.trim();
        p
    }

    pub fn from_ints(lo: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(lo, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lo += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.lo
    }

    pub fn degree(&self) -> i64 {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.lo + self.coeffs.len() as i64 - 1
    }

    /// Difference between highest and lowest exponent.
    pub fn span(&self) -> i64 {
        assert!(!self.is_zero());
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.lo;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading of zero polynomial")
    }

    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { lo: self.lo + k, coeffs: self.coeffs.clone() }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.degree().max(other.degree());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.lo - lo) as usize + i] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(self.lo + other.lo, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division; `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - divisor.coeffs.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        let dlead = divisor.coeffs.last().unwrap();
        for k in (0..qlen).rev() {
            let top = rem[k + divisor.coeffs.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, dlead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.lo - divisor.lo, quot))
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_at_minus_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let exp = self.lo + i as i64;
            if exp.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// t -> t^{-1}, i.e. reverses the coefficients.
    pub fn reversed(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let hi = self.degree();
        let coeffs = self.coeffs.iter().rev().cloned().collect();
        Self::from_coeffs(-hi, coeffs)
    }

    /// Palindromic up to the shift fixed by its own span: p(t) = t^{lo+hi} p(1/t).
    pub fn is_symmetric(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Shifts the lowest exponent to zero and makes the leading coefficient
    /// positive: the normal form used for Alexander polynomials.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut p = self.clone();
        p.lo = 0;
        if p.coeffs.last().unwrap().is_negative() {
            p = p.neg();
        }
        p
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::Integer::gcd(&g, c);
        }
        g
    }

    /// Reduction modulo an odd prime, with unit powers of t stripped
    /// (result has a nonzero constant term unless the reduction vanishes).
    pub fn mod_prime(&self, q: u64) -> FpPoly {
        let qq = BigInt::from(q);
        let coeffs: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| {
                let r = num_integer::Integer::mod_floor(c, &qq);
                let digits = r.to_u64_digits().1;
                digits.first().copied().unwrap_or(0)
            })
            .collect();
        FpPoly::from_coeffs(q, coeffs)
    }

    /// Canonical serialization: space-separated coefficients, lowest degree
    /// first, after shifting the lowest exponent to zero.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }

    pub fn from_canonical_string(s: &str) -> Option<Self> {
        let coeffs: Option<Vec<BigInt>> = s.split_whitespace().map(|t| t.parse().ok()).collect();
        Some(Self::from_coeffs(0, coeffs?))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = self.lo + i as i64;
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match exp {
                0 => write!(f, "{}", a)?,
                1 if a.is_one() => write!(f, "t")?,
                1 => write!(f, "{}t", a)?,
                _ if a.is_one() => write!(f, "t^{}", exp)?,
                _ => write!(f, "{}t^{}", a, exp)?,
            }
        }
        Ok(())
    }
}

/// Polynomial over the field of q elements, constant term nonzero
/// (unit powers of t are stripped on construction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    pub q: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn from_coeffs(q: u64, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= q;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|&&c| c == 0).count();
        coeffs.drain(..lead_zeros);
        FpPoly { q, coeffs }
    }

    pub fn one(q: u64) -> Self {
        FpPoly { q, coeffs: vec![1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn span(&self) -> i64 {
        assert!(!self.is_zero());
        self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q);
        if self.is_zero() || other.is_zero() {
            return FpPoly { q: self.q, coeffs: vec![] };
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + a * b) % self.q;
            }
        }
        FpPoly::from_coeffs(self.q, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = FpPoly::one(self.q);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Equality up to multiplication by a nonzero scalar (powers of t were
    /// already stripped), i.e. the paper-style unit congruence.
    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        assert_eq!(self.q, other.q);
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.coeffs.len() != other.coeffs.len() {
            return false;
        }
        // scalar forced by the constant terms, both nonzero by construction
        let c = (other.coeffs[0] * mod_inverse(self.coeffs[0], self.q)) % self.q;
        self.coeffs.iter().zip(&other.coeffs).all(|(&a, &b)| (a * c) % self.q == b)
    }
}

pub fn mod_inverse(a: u64, q: u64) -> u64 {
    // q prime, a nonzero mod q
    mod_pow(a % q, q - 2, q)
}

pub fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut bb: u128 = (b % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % m as u128;
        }
        bb = bb * bb % m as u128;
        e >>= 1;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(lo: i64, cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(lo, cs)
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(0, &[4, -7, 4]);
        let b = a.mul(&a).mul(&a);
        assert_eq!(b.coeff(0), BigInt::from(64));
        assert_eq!(b.coeff(3), BigInt::from(-1015));
        assert_eq!(b.degree(), 6);
        assert!(b.is_symmetric());
        assert_eq!(b.eval_at_one(), BigInt::one());
        assert_eq!(b.eval_at_minus_one(), BigInt::from(3375));
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = p(-1, &[1, -3, 1]);
        let b = p(2, &[2, 0, 5]);
        let c = a.mul(&b);
        assert_eq!(c.div_exact(&a).unwrap(), b);
        assert_eq!(c.div_exact(&b).unwrap(), a);
        assert!(c.add(&LaurentPoly::one()).div_exact(&a).is_none());
    }

    #[test]
    fn normalization_and_symmetry() {
        let a = p(-3, &[-3, 21, -53, 71, -53, 21, -3]);
        let n = a.normalized();
        assert_eq!(n.lowest_exponent(), 0);
        assert_eq!(n.leading(), &BigInt::from(3));
        assert!(n.is_symmetric());
        assert_eq!(n.reversed().normalized(), n);
    }

    #[test]
    fn mod_prime_strips_units() {
        // 3t^6-21t^5+53t^4-71t^3+53t^2-21t+3 = (1+t)^2 times a unit mod 3
        let a = p(0, &[3, -21, 53, -71, 53, -21, 3]);
        let r = a.mod_prime(3);
        let target = FpPoly::from_coeffs(3, vec![1, 2, 1]);
        assert!(r.eq_up_to_unit(&target));
        assert_eq!(r.span(), 2);
    }

    #[test]
    fn canonical_string_roundtrip() {
        let a = p(0, &[2, -17, 54, -79, 54, -17, 2]);
        let s = a.to_canonical_string();
        assert_eq!(LaurentPoly::from_canonical_string(&s).unwrap(), a);
    }
}
