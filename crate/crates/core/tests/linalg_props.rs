use lgcheck_core::{det_i64, hermite_normal_form, int, rank, rank_int, solve_unique, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows)
}

fn any_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))
}

fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter()
        .map(|r| (0..b[0].len()).map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum()).collect())
        .collect()
}

proptest! {
    #[test]
    fn row_rank_equals_column_rank(m in any_matrix()) {
        let r = rank(&to_rational(&m));
        prop_assert_eq!(r, rank(&to_rational(&transpose(&m))));
        prop_assert!(r <= m.len().min(m[0].len()));
        let big = m.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
        prop_assert_eq!(r, rank_int(big));
    }

    #[test]
    fn solve_recovers_the_preimage(a in matrix(4, 4), x in prop::collection::vec(-9i64..=9, 4)) {
        prop_assume!(det_i64(&a) != 0);
        let b: Vec<Rational> = a.iter().map(|r| int(r.iter().zip(&x).map(|(p, q)| p * q).sum())).collect();
        let got = solve_unique(&to_rational(&a), &b).unwrap();
        prop_assert_eq!(got, x.iter().map(|&v| int(v)).collect::<Vec<_>>());
    }

    #[test]
    fn singular_systems_are_rejected(a in matrix(2, 3), s in -3i64..=3, t in -3i64..=3) {
        let mut a = a;
        let dependent: Vec<i64> = (0..3).map(|j| s * a[0][j] + t * a[1][j]).collect();
        a.push(dependent);
        prop_assert_eq!(det_i64(&a), 0);
        let b = vec![int(0); 3];
        prop_assert!(solve_unique(&to_rational(&a), &b).is_err());
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3, 3), b in matrix(3, 3)) {
        prop_assert_eq!(det_i64(&mul(&a, &b)), det_i64(&a) * det_i64(&b));
    }

    #[test]
    fn hnf_is_a_canonical_basis(m in any_matrix(), i in 0usize..5, j in 0usize..5, k in -3i64..=3) {
        let h = hermite_normal_form(&m);
        prop_assert_eq!(&hermite_normal_form(&h), &h);
        prop_assert_eq!(h.len(), rank(&to_rational(&m)));

        let (i, j) = (i % m.len(), j % m.len());
        let mut moved = m.clone();
        if i != j {
            let rj = moved[j].clone();
            for (x, y) in moved[i].iter_mut().zip(&rj) {
                *x += k * y;
            }
        }
        moved.swap(0, j);
        prop_assert_eq!(hermite_normal_form(&moved), h);
    }

    #[test]
    fn hnf_pivots_multiply_to_the_determinant(m in matrix(3, 3)) {
        let d = det_i64(&m);
        prop_assume!(d != 0);
        let h = hermite_normal_form(&m);
        let pivots: i64 = (0..3).map(|i| h[i][i]).product();
        prop_assert_eq!(pivots, d.abs());
    }
}
