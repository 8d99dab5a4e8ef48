//! Correction terms of the double branched cover from a negative definite
//! Goeritz form: d(Y,[c]) = max over characteristic vectors c in the class
//! of (c^T G^{-1} c + rank)/4, indexed by spin-centered labels of the
//! homology group.

use crate::error::{Error, Result};
use crate::goeritz::{int_det, GoeritzForm};
use crate::group::GroupPresentation;
use crate::snf::Mat;
use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DTable {
    /// invariant factors > 1 of the homology group, one per label coordinate
    pub orders: Vec<u64>,
    /// label residues -> correction term
    pub values: BTreeMap<Vec<u64>, Rational64>,
}

impl DTable {
    pub fn group_order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn zero_label(&self) -> Vec<u64> {
        vec![0; self.orders.len()]
    }

    pub fn conjugate_label(&self, label: &[u64]) -> Vec<u64> {
        label.iter().zip(&self.orders).map(|(&r, &d)| (d - r) % d).collect()
    }

    /// Conjugation symmetry d(-s) = d(s), required of every valid table.
    pub fn is_conjugation_symmetric(&self) -> bool {
        self.values
            .iter()
            .all(|(l, v)| self.values.get(&self.conjugate_label(l)) == Some(v))
    }

    /// Sub-table over the labels of ell-power order, reindexed by the
    /// ell-primary coordinates. Labels outside the primary part are dropped.
    pub fn restrict_primary(&self, ell: u64) -> DTable {
        let parts: Vec<(u64, u64)> = self
            .orders
            .iter()
            .map(|&d| {
                let mut lp = 1u64;
                let mut rest = d;
                while rest % ell == 0 {
                    lp *= ell;
                    rest /= ell;
                }
                (lp, rest)
            })
            .collect();
        let orders: Vec<u64> = parts.iter().map(|&(lp, _)| lp).filter(|&lp| lp > 1).collect();
        let mut values = BTreeMap::new();
        'outer: for (label, &v) in &self.values {
            let mut new_label = vec![];
            for (&r, &(lp, rest)) in label.iter().zip(&parts) {
                if r % rest != 0 {
                    continue 'outer;
                }
                if lp > 1 {
                    new_label.push(r / rest % lp);
                }
            }
            values.insert(new_label, v);
        }
        DTable { orders, values }
    }

    /// Value counts over the labels, optionally dropping the zero label.
    pub fn multiplicity_tally(&self, exclude_zero: bool) -> BTreeMap<Rational64, u64> {
        let zero = self.zero_label();
        let mut tally = BTreeMap::new();
        for (label, &v) in &self.values {
            if exclude_zero && *label == zero {
                continue;
            }
            *tally.entry(v).or_insert(0) += 1;
        }
        tally
    }

    /// The mirror table: every value negated.
    pub fn negated(&self) -> DTable {
        DTable {
            orders: self.orders.clone(),
            values: self.values.iter().map(|(l, v)| (l.clone(), -v)).collect(),
        }
    }

    /// Table of a block sum, labels concatenated and values added.
    pub fn block_sum(&self, other: &DTable) -> DTable {
        let mut orders = self.orders.clone();
        orders.extend(&other.orders);
        let mut values = BTreeMap::new();
        for (la, va) in &self.values {
            for (lb, vb) in &other.values {
                let mut l = la.clone();
                l.extend(lb);
                values.insert(l, va + vb);
            }
        }
        DTable { orders, values }
    }
}

/// Volume of the enumeration box of a form, for budget decisions.
pub fn box_volume(form: &GoeritzForm) -> BigInt {
    let mut v = BigInt::from(1);
    for i in 0..form.matrix.len() {
        v *= -&form.matrix[i][i] + 1;
    }
    v
}

pub fn d_table(form: &GoeritzForm) -> Result<DTable> {
    let r = form.matrix.len();
    if r == 0 {
        let mut values = BTreeMap::new();
        values.insert(vec![], Rational64::zero());
        return Ok(DTable { orders: vec![], values });
    }
    let g = &form.matrix;
    let det_big = int_det(g);
    let det = to_i64(&det_big, "determinant");
    let adj = adjugate(g, &det_big);
    let c0 = spin_representative(g);
    let pres = GroupPresentation::from_matrix(g)?;
    let expected = to_i64(&pres.order(), "group order") as u64;

    // fixed-width copies for the inner loop
    let adj_i: Vec<Vec<i128>> =
        adj.iter().map(|row| row.iter().map(|x| to_i128(x)).collect()).collect();
    let u_i: Vec<Vec<i128>> =
        pres.to_canonical.iter().map(|row| row.iter().map(|x| to_i128(x)).collect()).collect();
    let factors: Vec<i128> = pres.all_factors.iter().map(to_i128).collect();
    let diag: Vec<i64> = (0..r).map(|i| to_i64(&g[i][i], "diagonal")).collect();
    let c0_i: Vec<i128> = c0.iter().map(|&x| x as i128).collect();

    // snake enumeration: every step moves one coordinate by +-2
    let sizes: Vec<i64> = diag.iter().map(|&d| -d + 1).collect();
    let mut pos = vec![0i64; r];
    let mut dir = vec![1i64; r];
    let mut c: Vec<i128> = diag.iter().map(|&d| d as i128).collect();
    let mut s: Vec<i128> = adj_i
        .iter()
        .map(|row| row.iter().zip(&c).map(|(a, x)| a * x).sum())
        .collect();
    let mut n_val: i128 = c.iter().zip(&s).map(|(x, y)| x * y).sum();
    // l = U * (c - c0)/2, taken modulo the factors only when recording
    let mut l: Vec<i128> = u_i
        .iter()
        .map(|row| row.iter().zip(&c).zip(&c0_i).map(|((u, x), z)| u * (x - z) / 2).sum())
        .collect();

    let det128 = det as i128;
    let rank128 = r as i128;
    let mut values: BTreeMap<Vec<u64>, Rational64> = BTreeMap::new();
    let mut record = |n_val: i128, l: &[i128]| {
        let label: Vec<u64> = l
            .iter()
            .zip(&factors)
            .filter(|(_, &f)| f > 1)
            .map(|(x, &f)| (x.rem_euclid(f)) as u64)
            .collect();
        let num = n_val + rank128 * det128;
        let den = 4 * det128;
        let val = ratio64(num, den);
        values
            .entry(label)
            .and_modify(|v| {
                if val > *v {
                    *v = val;
                }
            })
            .or_insert(val);
    };
    record(n_val, &l);
    loop {
        let Some(i) = (0..r).find(|&i| {
            let p = pos[i] + dir[i];
            p >= 0 && p < sizes[i]
        }) else {
            break;
        };
        pos[i] += dir[i];
        let delta = 2 * dir[i] as i128;
        n_val += 2 * delta * s[i] + delta * delta * adj_i[i][i];
        for j in 0..r {
            s[j] += delta * adj_i[j][i];
            l[j] += (delta / 2) * u_i[j][i];
        }
        c[i] += delta;
        for d in dir.iter_mut().take(i) {
            *d = -*d;
        }
        record(n_val, &l);
    }

    if values.len() as u64 != expected {
        return Err(Error::IncompleteCoverage {
            expected,
            missing: expected - values.len() as u64,
        });
    }
    let orders: Vec<u64> = pres
        .invariant_factors
        .iter()
        .map(|f| to_i64(f, "invariant factor") as u64)
        .collect();
    Ok(DTable { orders, values })
}

fn ratio64(num: i128, den: i128) -> Rational64 {
    let g = gcd128(num.abs(), den.abs()).max(1);
    let (mut n, mut d) = (num / g, den / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    Rational64::new_raw(
        i64::try_from(n).expect("correction term numerator overflow"),
        i64::try_from(d).expect("correction term denominator overflow"),
    )
}

fn gcd128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn to_i64(x: &BigInt, what: &str) -> i64 {
    i64::try_from(x).unwrap_or_else(|_| panic!("{what} exceeds i64: {x}"))
}

fn to_i128(x: &BigInt) -> i128 {
    i128::try_from(x).expect("matrix entry exceeds i128")
}

/// adj(G) = det(G) * G^{-1}, by cofactors.
fn adjugate(g: &Mat, det: &BigInt) -> Mat {
    let r = g.len();
    let mut adj = vec![vec![BigInt::zero(); r]; r];
    for i in 0..r {
        for j in 0..r {
            let minor: Mat = (0..r)
                .filter(|&a| a != j)
                .map(|a| (0..r).filter(|&b| b != i).map(|b| g[a][b].clone()).collect())
                .collect();
            let m = int_det(&minor);
            adj[i][j] = if (i + j) % 2 == 0 { m } else { -m };
        }
    }
    // sanity on one column: G * adj = det * I
    debug_assert!({
        let prod: Vec<BigInt> =
            (0..r).map(|i| (0..r).map(|k| &g[i][k] * &adj[k][0]).sum()).collect();
        prod.iter().enumerate().all(|(i, v)| {
            if i == 0 { v == det } else { v.is_zero() }
        })
    });
    adj
}

/// The unique self-conjugate characteristic vector representative c0 = G x,
/// where x solves (G mod 2) x = diag(G) mod 2. Unique since det is odd.
fn spin_representative(g: &Mat) -> Vec<i64> {
    let r = g.len();
    let mut m: Vec<Vec<u8>> = g
        .iter()
        .map(|row| {
            row.iter().map(|x| if num_integer::Integer::is_odd(x) { 1 } else { 0 }).collect()
        })
        .collect();
    let mut rhs: Vec<u8> = (0..r).map(|i| m[i][i]).collect();
    let mut x = vec![0u8; r];
    let mut pivot_row_of_col = vec![usize::MAX; r];
    let mut row = 0;
    for col in 0..r {
        let Some(pr) = (row..r).find(|&i| m[i][col] == 1) else { continue };
        m.swap(row, pr);
        rhs.swap(row, pr);
        for i in 0..r {
            if i != row && m[i][col] == 1 {
                for j in 0..r {
                    m[i][j] ^= m[row][j];
                }
                rhs[i] ^= rhs[row];
            }
        }
        pivot_row_of_col[col] = row;
        row += 1;
    }
    for col in 0..r {
        if pivot_row_of_col[col] != usize::MAX {
            x[col] = rhs[pivot_row_of_col[col]];
        }
    }
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    if x[j] == 1 {
                        to_i64(&g[i][j], "spin representative entry")
                    } else {
                        0
                    }
                })
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goeritz::goeritz;
    use crate::pd::parse_pd;

    fn form_from_matrix(entries: &[&[i64]]) -> GoeritzForm {
        let matrix: Mat = entries
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let determinant = int_det(&matrix);
        GoeritzForm { matrix, determinant, source: "test".into() }
    }

    #[test]
    fn unknot_table() {
        let t = d_table(&form_from_matrix(&[])).unwrap();
        assert_eq!(t.values.len(), 1);
        assert_eq!(t.values[&vec![]], Rational64::zero());
    }

    #[test]
    fn rank_two_trefoil_form() {
        let t = d_table(&form_from_matrix(&[&[-2, 1], &[1, -2]])).unwrap();
        assert_eq!(t.orders, vec![3]);
        assert_eq!(t.values[&vec![0]], Rational64::new(1, 2));
        assert_eq!(t.values[&vec![1]], Rational64::new(-1, 6));
        assert_eq!(t.values[&vec![2]], Rational64::new(-1, 6));
        assert!(t.is_conjugation_symmetric());
    }

    /// closed-form table for the rank-1 form [-n]: label i carries
    /// (n - (2i - n)^2) / (4n), with label 0 the spin structure.
    fn lens_oracle(n: i64) -> Vec<Rational64> {
        (0..n).map(|i| Rational64::new(n - (2 * i - n).pow(2), 4 * n)).collect()
    }

    #[test]
    fn lens_space_forms_match_oracle() {
        for n in [1i64, 3, 5, 7, 9, 11, 13, 15] {
            let t = d_table(&form_from_matrix(&[&[-n]])).unwrap();
            let oracle = lens_oracle(n);
            if n == 1 {
                assert_eq!(t.values[&vec![]], oracle[0]);
                continue;
            }
            assert_eq!(t.orders, vec![n as u64]);
            for i in 0..n {
                assert_eq!(t.values[&vec![i as u64]], oracle[i as usize], "n={n} i={i}");
            }
            assert!(t.is_conjugation_symmetric());
        }
    }

    #[test]
    fn diagram_pipeline_trefoil() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let g = goeritz(&d).unwrap();
        let t = d_table(&g).unwrap();
        assert_eq!(t.group_order(), 3);
        assert!(t.is_conjugation_symmetric());
        // trefoil or its mirror: values {±1/2, ∓1/6 twice}
        let tally = t.multiplicity_tally(false);
        let vals: Vec<(Rational64, u64)> = tally.into_iter().collect();
        assert!(
            vals == vec![(Rational64::new(-1, 6), 2), (Rational64::new(1, 2), 1)]
                || vals == vec![(Rational64::new(-1, 2), 1), (Rational64::new(1, 6), 2)]
        );
    }

    #[test]
    fn primary_restriction_sizes() {
        let t = d_table(&form_from_matrix(&[&[-3, 0], &[0, -5]])).unwrap();
        assert_eq!(t.group_order(), 15);
        assert_eq!(t.restrict_primary(3).values.len(), 3);
        assert_eq!(t.restrict_primary(5).values.len(), 5);
        assert_eq!(t.restrict_primary(7).values.len(), 1);
    }

    #[test]
    fn block_sum_matches_direct_computation() {
        let a = d_table(&form_from_matrix(&[&[-3]])).unwrap();
        let b = d_table(&form_from_matrix(&[&[-5]])).unwrap();
        let direct = d_table(&form_from_matrix(&[&[-3, 0], &[0, -5]])).unwrap();
        let summed = a.block_sum(&b);
        assert_eq!(summed.multiplicity_tally(false), direct.multiplicity_tally(false));
    }

    #[test]
    fn negation_preserves_tally_counts() {
        let t = d_table(&form_from_matrix(&[&[-2, 1], &[1, -2]])).unwrap();
        let m = t.negated();
        let counts: Vec<u64> = t.multiplicity_tally(false).into_values().collect();
        let mut mcounts: Vec<u64> = m.multiplicity_tally(false).into_values().collect();
        mcounts.reverse();
        assert_eq!(counts, mcounts);
    }
}
