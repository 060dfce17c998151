//! Exact linear algebra over ℤ and ℚ.
//!
//! Rank goes through fraction-free (Bareiss) elimination on integer rows,
//! so intermediate entries stay integral and every zero test is exact.
//! Rational input is first scaled row by row to clear denominators, which
//! leaves the rank unchanged.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{lcm_of_denominators, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected} columns, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("linear system is underdetermined: rank {rank} < {unknowns} unknowns")]
    Underdetermined { rank: usize, unknowns: usize },
}

/// Rank of an integer matrix by Bareiss fraction-free elimination.
pub fn rank_int(mut rows: Vec<Vec<BigInt>>) -> usize {
    let n_rows = rows.len();
    if n_rows == 0 {
        return 0;
    }
    let n_cols = rows[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..n_rows {
            for j in c + 1..n_cols {
                let num = &rows[r][c] * &rows[i][j] - &rows[i][c] * &rows[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss step must divide exactly");
                rows[i][j] = q;
            }
            rows[i][c] = BigInt::zero();
        }
        prev = rows[r][c].clone();
        r += 1;
    }
    r
}

/// Rank of a rational matrix. Rows are scaled to integers and handed to
/// [`rank_int`].
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let int_rows = rows
        .iter()
        .map(|row| {
            let l = lcm_of_denominators(row);
            row.iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect::<Vec<_>>()
        })
        .collect();
    rank_int(int_rows)
}

/// Solves `a · x = b` and insists on a unique solution. Overdetermined
/// systems are fine as long as they are consistent.
pub fn solve_unique(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
    if a.len() != b.len() {
        return Err(LinalgError::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    let unknowns = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = Vec::with_capacity(a.len());
    for (row, rhs) in a.iter().zip(b) {
        if row.len() != unknowns {
            return Err(LinalgError::DimensionMismatch {
                expected: unknowns,
                found: row.len(),
            });
        }
        let mut aug = row.clone();
        aug.push(rhs.clone());
        m.push(aug);
    }

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=unknowns {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }

    if m[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return Err(LinalgError::Inconsistent);
    }
    if r < unknowns {
        return Err(LinalgError::Underdetermined { rank: r, unknowns });
    }
    let mut x = vec![Rational::zero(); unknowns];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = m[row][unknowns].clone();
    }
    Ok(x)
}

/// Row Hermite normal form: a basis of the ℤ-row-span of `rows`, in echelon
/// form with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let Some(p) = (r..m)
                .filter(|&i| a[i][c] != 0)
                .min_by_key(|&i| a[i][c].abs())
            else {
                break;
            };
            a.swap(r, p);
            let mut cleared = true;
            for i in r + 1..m {
                if a[i][c] != 0 {
                    let q = a[i][c] / a[r][c];
                    for j in 0..n {
                        a[i][j] -= q * a[r][j];
                    }
                    if a[i][c] != 0 {
                        cleared = false;
                    }
                }
            }
            if cleared {
                break;
            }
        }
        if a[r][c] == 0 {
            continue;
        }
        if a[r][c] < 0 {
            for x in a[r].iter_mut() {
                *x = -*x;
            }
        }
        for i in 0..r {
            let q = a[i][c].div_euclid(a[r][c]);
            if q != 0 {
                for j in 0..n {
                    a[i][j] -= q * a[r][j];
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// Determinant of a square integer matrix (Bareiss, exact).
pub fn det_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return 0;
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = if n == 0 {
        BigInt::one()
    } else {
        a[n - 1][n - 1].clone()
    };
    let d: i64 = d.try_into().expect("determinant overflows i64");
    if sign < 0 {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&q(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&q(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&q(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
        assert_eq!(rank(&q(&[&[0, 1], &[1, 0]])), 2);
        let half = vec![vec![rat(1, 2), rat(1, 3)], vec![rat(3, 2), int(1)]];
        assert_eq!(rank(&half), 1);
    }

    #[test]
    fn solve_reports_each_failure_mode() {
        let a = q(&[&[1, 1], &[1, -1], &[2, 0]]);
        let x = solve_unique(&a, &[int(3), int(1), int(4)]).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
        assert_eq!(
            solve_unique(&a, &[int(3), int(1), int(5)]),
            Err(LinalgError::Inconsistent)
        );
        let a = q(&[&[1, 1], &[2, 2]]);
        assert_eq!(
            solve_unique(&a, &[int(1), int(2)]),
            Err(LinalgError::Underdetermined {
                rank: 1,
                unknowns: 2
            })
        );
    }

    #[test]
    fn hnf_of_index_two_overlattice() {
        let h = hermite_normal_form(&[vec![2, 0], vec![0, 2], vec![1, 1]]);
        assert_eq!(h, vec![vec![1, 1], vec![0, 2]]);
        let h = hermite_normal_form(&[vec![2, 0], vec![0, 2], vec![1, 0]]);
        assert_eq!(h, vec![vec![1, 0], vec![0, 2]]);
        let h = hermite_normal_form(&[vec![-4, 6], vec![6, -9]]);
        assert_eq!(h, vec![vec![2, -3]]);
    }

    #[test]
    fn determinants() {
        assert_eq!(det_i64(&[vec![2, 0], vec![0, 3]]), 6);
        assert_eq!(det_i64(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det_i64(&[vec![1, 2], vec![2, 4]]), 0);
        let m = vec![
            vec![3, 0, -1, 0],
            vec![0, 1, 0, 1],
            vec![-2, 0, 1, 0],
            vec![0, 2, 0, 3],
        ];
        assert_eq!(det_i64(&m), 1);
    }
}
