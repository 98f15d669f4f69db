//! Dense exact linear algebra over a [`Scalar`] field.
//!
//! Everything here is plain Gaussian elimination; the matrices in this
//! toolkit are tiny (at most a few dozen rows) and exactness matters far
//! more than asymptotics.

use crate::scalar::{scmp, Scalar};
use std::cmp::Ordering;

/// Row rank of the matrix given as a list of rows.
pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone() / inv.clone();
                for j in c..cols {
                    let s = m[r][j].clone() * f.clone();
                    m[i][j] = m[i][j].clone() - s;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Reduced row echelon form, returning (matrix, pivot column per row).
pub fn rref<S: Scalar>(rows: &[Vec<S>]) -> (Vec<Vec<S>>, Vec<usize>) {
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for j in c..cols {
            m[r][j] = m[r][j].clone() / inv.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let s = m[r][j].clone() * f.clone();
                    m[i][j] = m[i][j].clone() - s;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of the right nullspace { x : A x = 0 }.
pub fn nullspace<S: Scalar>(rows: &[Vec<S>], cols: usize) -> Vec<Vec<S>> {
    let (m, pivots) = rref(rows);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![S::zero(); cols];
        v[f] = S::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = S::zero() - row[f].clone();
        }
        basis.push(v);
    }
    basis
}

/// One solution of A x = b (free variables set to zero), or None if
/// inconsistent.
pub fn solve<S: Scalar>(rows: &[Vec<S>], rhs: &[S]) -> Option<Vec<S>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let aug: Vec<Vec<S>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let (m, pivots) = rref(&aug);
    for (row, &p) in m.iter().zip(&pivots) {
        if p == cols {
            return None; // pivot in the rhs column
        }
        let _ = row;
    }
    let mut x = vec![S::zero(); cols];
    for (row, &p) in m.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

/// Determinant of a square matrix.
pub fn det<S: Scalar>(rows: &[Vec<S>]) -> S {
    let n = rows.len();
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let mut result = S::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return S::zero();
        };
        if p != c {
            m.swap(c, p);
            result = S::zero() - result;
        }
        result = result * m[c][c].clone();
        let inv = m[c][c].clone();
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = m[i][c].clone() / inv.clone();
                for j in c..n {
                    let s = m[c][j].clone() * f.clone();
                    m[i][j] = m[i][j].clone() - s;
                }
            }
        }
    }
    result
}

/// Affine rank of a point set: the dimension of its affine span.
pub fn affine_rank<S: Scalar>(points: &[Vec<S>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let diffs: Vec<Vec<S>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a.clone() - b.clone()).collect())
        .collect();
    rank(&diffs)
}

/// Lexicographic order on coordinate vectors.
pub fn lex_cmp<S: Scalar>(a: &[S], b: &[S]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match scmp(x, y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        BigRational::from_int(v)
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        assert_eq!(rank(&rows), 1);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let s: BigRational =
                v.iter().zip(&rows[0]).map(|(a, b)| a * b).sum();
            assert!(num_traits::Zero::is_zero(&s));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        let x = solve(&a, &[q(3), q(1)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);

        let singular = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(solve(&singular, &[q(1), q(3)]).is_none());
    }

    #[test]
    fn det_small() {
        let m = vec![vec![q(2), q(0)], vec![q(0), q(3)]];
        assert_eq!(det(&m), q(6));
        let sing = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(det(&sing), q(0));
    }

    #[test]
    fn affine_rank_of_square() {
        let pts = vec![
            vec![q(0), q(0)],
            vec![q(1), q(0)],
            vec![q(0), q(1)],
            vec![q(1), q(1)],
        ];
        assert_eq!(affine_rank(&pts), 2);
        assert_eq!(affine_rank(&pts[..1]), 0);
        assert_eq!(affine_rank(&[vec![q(0)], vec![q(5)]]), 1);
    }
}
