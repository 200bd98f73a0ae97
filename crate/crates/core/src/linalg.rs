//! Small dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::weight::Q;

pub type Matrix = Vec<Vec<Q>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let k = b.len();
    let mut out = vec![vec![Q::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    out
}

pub fn mul_vec(a: &Matrix, v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(Q::zero(), |acc, (x, y)| acc + x * y)
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let m = a.first().map_or(0, Vec::len);
    (0..m)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Row-reduces in place and returns the rank.
fn row_reduce(a: &mut Matrix, aug: Option<&mut Matrix>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut aug = aug;
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        if let Some(b) = aug.as_deref_mut() {
            b.swap(rank, pivot);
        }
        let inv = Q::one() / &a[rank][col];
        for x in a[rank].iter_mut() {
            *x *= &inv;
        }
        if let Some(b) = aug.as_deref_mut() {
            for x in b[rank].iter_mut() {
                *x *= &inv;
            }
        }
        for r in 0..rows {
            if r == rank || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..cols {
                let t = &f * &a[rank][c];
                a[r][c] -= t;
            }
            if let Some(b) = aug.as_deref_mut() {
                for c in 0..b[r].len() {
                    let t = &f * &b[rank][c];
                    b[r][c] -= t;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut a = rows.to_vec();
    row_reduce(&mut a, None)
}

pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m = a.clone();
    let mut inv = identity(n);
    (row_reduce(&mut m, Some(&mut inv)) == n).then_some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{frac, q};

    #[test]
    fn inverse_of_a2_cartan() {
        let a = vec![vec![q(2), q(-1)], vec![q(-1), q(2)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0][0], frac(2, 3));
        assert_eq!(inv[0][1], frac(1, 3));
        assert_eq!(mul(&a, &inv), identity(2));
    }

    #[test]
    fn rank_detects_dependence() {
        let rows = vec![vec![q(1), q(-1), q(0)], vec![q(0), q(1), q(-1)], vec![q(1), q(0), q(-1)]];
        assert_eq!(rank(&rows), 2);
        assert!(inverse(&rows).is_none());
    }
}
