//! Randomized structural properties of the core algorithms.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use persieve_core::dtable::{box_volume, d_table, DTable};
use persieve_core::goeritz::{goeritz, int_det, GoeritzForm};
use persieve_core::knotlist::parse_knot_list;
use persieve_core::laurent::LaurentPoly;
use persieve_core::pd::parse_pd;
use persieve_core::snf::{identity, mat_mul, smith_normal_form, Mat};
use proptest::prelude::*;
use std::path::Path;

/// Random negative definite form -L L^T from a lower triangular L with a
/// positive diagonal.
fn neg_definite_form() -> impl Strategy<Value = GoeritzForm> {
    (1usize..=3)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(1i64..=3, n),
                proptest::collection::vec(-2i64..=2, n * n),
            )
        })
        .prop_map(|(diag, off)| {
            let n = diag.len();
            let mut l = vec![vec![0i64; n]; n];
            for i in 0..n {
                l[i][i] = diag[i];
                for j in 0..i {
                    l[i][j] = off[i * n + j];
                }
            }
            let mut m: Mat = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    let mut s = 0i64;
                    for (row_i, row_j) in l[i].iter().zip(&l[j]) {
                        s += row_i * row_j;
                    }
                    m[i][j] = BigInt::from(-s);
                }
            }
            let determinant = int_det(&m);
            GoeritzForm { matrix: m, determinant, source: "random".into() }
        })
}

fn small_int_matrix() -> impl Strategy<Value = Mat> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-6i64..=6, r * c).prop_map(move |entries| {
            (0..r)
                .map(|i| (0..c).map(|j| BigInt::from(entries[i * c + j])).collect())
                .collect()
        })
    })
}

fn value_tally(t: &DTable) -> std::collections::BTreeMap<Rational64, u64> {
    t.multiplicity_tally(false)
}

fn minus_one_form() -> GoeritzForm {
    GoeritzForm {
        matrix: vec![vec![BigInt::from(-1)]],
        determinant: BigInt::from(-1),
        source: "[-1]".into(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_tables_are_conjugation_symmetric_and_sized(form in neg_definite_form()) {
        prop_assume!(box_volume(&form) < BigInt::from(100_000));
        let t = d_table(&form).unwrap();
        prop_assert!(t.is_conjugation_symmetric());
        prop_assert_eq!(BigInt::from(t.values.len() as u64), form.determinant.abs());
        prop_assert_eq!(BigInt::from(t.group_order()), form.determinant.abs());
    }

    #[test]
    fn unimodular_summands_do_not_change_values(form in neg_definite_form()) {
        prop_assume!(box_volume(&form) < BigInt::from(100_000));
        let t = d_table(&form).unwrap();
        let stabilized = d_table(&minus_one_form()).unwrap().block_sum(&t);
        prop_assert_eq!(value_tally(&t), value_tally(&stabilized));
    }

    #[test]
    fn block_diagonal_forms_sum_their_tables(a in neg_definite_form(), b in neg_definite_form()) {
        prop_assume!(box_volume(&a) * box_volume(&b) < BigInt::from(100_000));
        let n = a.matrix.len() + b.matrix.len();
        let mut m: Mat = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in a.matrix.iter().enumerate() {
            m[i][..row.len()].clone_from_slice(row);
        }
        for (i, row) in b.matrix.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m[a.matrix.len() + i][a.matrix.len() + j] = x.clone();
            }
        }
        let determinant = int_det(&m);
        let joint = GoeritzForm { matrix: m, determinant, source: "block".into() };
        let direct = d_table(&joint).unwrap();
        let summed = d_table(&a).unwrap().block_sum(&d_table(&b).unwrap());
        prop_assert_eq!(value_tally(&direct), value_tally(&summed));
    }

    #[test]
    fn smith_transforms_are_consistent(m in small_int_matrix()) {
        let s = smith_normal_form(&m);
        let rows = m.len();
        let cols = m[0].len();
        let product = mat_mul(&mat_mul(&s.u, &m), &s.v);
        for (i, row) in product.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j { s.factors[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(x, &want);
            }
        }
        prop_assert_eq!(mat_mul(&s.u, &s.u_inv), identity(rows));
        prop_assert_eq!(mat_mul(&s.v, &s.v_inv), identity(cols));
        for w in s.factors.windows(2) {
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn polynomial_serialization_round_trips(coeffs in proptest::collection::vec(-50i64..=50, 1..8)) {
        let p = LaurentPoly::from_ints(0, &coeffs).normalized();
        prop_assume!(!p.is_zero());
        let back = LaurentPoly::from_canonical_string(&p.to_canonical_string()).unwrap();
        prop_assert_eq!(p, back);
    }
}

#[test]
fn diagram_serialization_round_trips() {
    let text = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../../tables/9a.txt"),
    )
    .expect("9a table");
    for d in parse_knot_list(&text).expect("parseable table") {
        let back = parse_pd(&d.to_pd_string()).expect("reparse");
        assert_eq!(
            goeritz(&d).unwrap().determinant,
            goeritz(&back).unwrap().determinant,
            "{} changes under pd round trip",
            d.name
        );
    }
}
