//! Alexander polynomial from a diagram's arc/crossing matrix.

use crate::laurent::LaurentPoly;
use crate::pd::KnotDiagram;
use num_traits::{One, Signed};

/// Normalized Alexander polynomial: lowest exponent 0, positive leading
/// coefficient. The unknot yields 1.
pub fn alexander(d: &KnotDiagram) -> LaurentPoly {
    let n = d.n_crossings();
    if n <= 1 {
        return LaurentPoly::one();
    }
    let arc = arc_of_edge(d);
    let t = LaurentPoly::from_ints(1, &[1]);
    let one = LaurentPoly::one();
    let one_minus_t = one.sub(&t);
    // one row per crossing, one column per overstrand arc
    let mut m = vec![vec![LaurentPoly::zero(); n]; n];
    for c in 0..n {
        let a_in = arc[d.under_in(c) as usize];
        let a_out = arc[d.under_out(c) as usize];
        let a_over = arc[d.over_in(c) as usize];
        let positive = d.succ(d.crossings[c][3]) == d.crossings[c][1];
        let (w_out, w_in, w_over) = if positive {
            (one.neg(), t.clone(), one_minus_t.clone())
        } else {
            (t.neg(), one.clone(), one_minus_t.neg())
        };
        m[c][a_out] = m[c][a_out].add(&w_out);
        m[c][a_in] = m[c][a_in].add(&w_in);
        m[c][a_over] = m[c][a_over].add(&w_over);
    }
    m.pop();
    for row in &mut m {
        row.pop();
    }
    let det = laurent_det(&mut m);
    let delta = det.normalized();
    debug_assert!(delta.is_symmetric(), "Alexander polynomial not palindromic: {delta}");
    debug_assert!(
        delta.eval_at_one().abs().is_one(),
        "Alexander polynomial has |value| != 1 at t=1: {delta}"
    );
    delta
}

/// Genus of an alternating knot, read off the polynomial degree.
pub fn alternating_genus(delta: &LaurentPoly) -> i64 {
    delta.span() / 2
}

/// Maps each edge label (1-based) to its overstrand arc id (0..n-1). Arcs
/// break after each under-incoming edge.
fn arc_of_edge(d: &KnotDiagram) -> Vec<usize> {
    let m = d.n_edges() as usize;
    let mut is_break = vec![false; m + 1];
    for c in 0..d.n_crossings() {
        is_break[d.under_in(c) as usize] = true;
    }
    let b0 = (1..=m).find(|&x| is_break[x]).unwrap();
    let mut arc = vec![usize::MAX; m + 1];
    let mut x = d.succ(b0 as u32) as usize;
    let mut id = 0;
    for _ in 0..m {
        arc[x] = id;
        if is_break[x] {
            id += 1;
        }
        x = d.succ(x as u32) as usize;
    }
    debug_assert_eq!(id, d.n_crossings());
    arc
}

/// Fraction-free determinant of a square Laurent-polynomial matrix,
/// returned up to sign (rows are swapped without sign tracking; callers
/// normalize anyway).
fn laurent_det(a: &mut [Vec<LaurentPoly>]) -> LaurentPoly {
    let n = a.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            a.swap(k, p);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.div_exact(&prev).expect("fraction-free division failed");
            }
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].clone()
}
