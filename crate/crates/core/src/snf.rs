//! Smith normal form over the integers, with the unimodular transforms
//! on both sides and their inverses.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Mat = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                let t = &a[i][l] * &b[l][j];
                out[i][j] += t;
            }
        }
    }
    out
}

pub fn mat_vec(a: &Mat, x: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(r, v)| r * v).sum())
        .collect()
}

/// u * input * v = diag(factors); u_inv and v_inv undo the transforms.
/// The diagonal satisfies the divisibility chain and is nonnegative.
pub struct Snf {
    pub factors: Vec<BigInt>,
    pub u: Mat,
    pub v: Mat,
    pub u_inv: Mat,
    pub v_inv: Mat,
}

pub fn smith_normal_form(input: &Mat) -> Snf {
    let rows = input.len();
    let cols = if rows > 0 { input[0].len() } else { 0 };
    let mut m = input.clone();
    let mut u = identity(rows);
    let mut u_inv = identity(rows);
    let mut v = identity(cols);
    let mut v_inv = identity(cols);

    // elementary row ops, mirrored into u (left) and u_inv (inverse, right-composed)
    let swap_rows = |m: &mut Mat, u: &mut Mat, u_inv: &mut Mat, i: usize, j: usize| {
        m.swap(i, j);
        u.swap(i, j);
        for row in u_inv.iter_mut() {
            row.swap(i, j);
        }
    };
    let add_row = |m: &mut Mat, u: &mut Mat, u_inv: &mut Mat, i: usize, j: usize, c: &BigInt| {
        // row i += c * row j
        for k in 0..m[0].len() {
            let t = c * &m[j][k];
            m[i][k] += t;
        }
        for k in 0..u[0].len() {
            let t = c * &u[j][k];
            u[i][k] += t;
        }
        for row in u_inv.iter_mut() {
            let t = c * &row[i];
            row[j] -= t;
        }
    };
    let swap_cols = |m: &mut Mat, v: &mut Mat, v_inv: &mut Mat, i: usize, j: usize| {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
        v_inv.swap(i, j);
    };
    let add_col = |m: &mut Mat, v: &mut Mat, v_inv: &mut Mat, i: usize, j: usize, c: &BigInt| {
        // col i += c * col j
        for row in m.iter_mut() {
            let t = c * &row[j];
            row[i] += t;
        }
        for row in v.iter_mut() {
            let t = c * &row[j];
            row[i] += t;
        }
        for k in 0..v_inv[0].len() {
            let t = c * &v_inv[i][k];
            v_inv[j][k] -= t;
        }
    };

    let n = rows.min(cols);
    let mut k = 0;
    while k < n {
        // pivot: smallest nonzero magnitude in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if !m[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != k {
            swap_rows(&mut m, &mut u, &mut u_inv, k, pi);
        }
        if pj != k {
            swap_cols(&mut m, &mut v, &mut v_inv, k, pj);
        }

        let mut clean = true;
        for i in k + 1..rows {
            if m[i][k].is_zero() {
                continue;
            }
            let q = -(&m[i][k] / &m[k][k]);
            add_row(&mut m, &mut u, &mut u_inv, i, k, &q);
            if !m[i][k].is_zero() {
                clean = false;
            }
        }
        for j in k + 1..cols {
            if m[k][j].is_zero() {
                continue;
            }
            let q = -(&m[k][j] / &m[k][k]);
            add_col(&mut m, &mut v, &mut v_inv, j, k, &q);
            if !m[k][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue; // smaller remainders now exist; re-pick the pivot
        }
        // divisibility: pivot must divide every entry of the trailing block
        let mut fixed = true;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if !(&m[i][j] % &m[k][k]).is_zero() {
                    add_row(&mut m, &mut u, &mut u_inv, k, i, &BigInt::one());
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if fixed {
            k += 1;
        }
    }

    let mut factors = Vec::with_capacity(n);
    for i in 0..n {
        if m[i][i].is_negative() {
            // negate row i; the op is its own inverse
            for x in m[i].iter_mut() {
                *x = -x.clone();
            }
            for x in u[i].iter_mut() {
                *x = -x.clone();
            }
            for row in u_inv.iter_mut() {
                row[i] = -row[i].clone();
            }
        }
        factors.push(m[i][i].clone());
    }
    Snf { factors, u, v, u_inv, v_inv }
}
