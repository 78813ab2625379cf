//! Exact linear algebra over ℚ by fraction-free (Bareiss) elimination.
//!
//! Rows are first scaled to integer rows, elimination then runs on big integers
//! where every division is exact, and only back-substitution returns to rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Scalar;
use crate::{Error, Result};

/// Row-major dense matrix.
pub type Matrix = Vec<Vec<Scalar>>;

fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| (x * Scalar::from_integer(lcm.clone())).to_integer()).collect()
}

/// Bareiss elimination in place; returns pivot columns in row order and the sign of
/// the row permutation.
fn bareiss(m: &mut [Vec<BigInt>], cols: usize) -> (Vec<usize>, i32) {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut sign = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        if p != r {
            m.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for k in c + 1..m[i].len() {
                let v = (&m[r][c] * &m[i][k] - &m[i][c] * &m[r][k]) / &prev;
                m[i][k] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (pivots, sign)
}

pub fn rank(a: &Matrix) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| integer_row(r)).collect();
    bareiss(&mut m, cols).0.len()
}

pub fn determinant(a: &Matrix) -> Result<Scalar> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Precondition("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(Scalar::one());
    }
    let scales: Vec<BigInt> = a.iter().map(|r| r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))).collect();
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| integer_row(r)).collect();
    let (pivots, sign) = bareiss(&mut m, n);
    if pivots.len() < n {
        return Ok(Scalar::zero());
    }
    let det_int = m[n - 1][n - 1].clone() * sign;
    let denom = scales.into_iter().fold(BigInt::one(), |acc, s| acc * s);
    Ok(Scalar::new(det_int, denom))
}

/// The unique solution of `a x = b`; `Singular` if there is none or it is not unique.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Result<Vec<Scalar>> {
    let rows = a.len();
    if b.len() != rows {
        return Err(Error::Precondition("right-hand side has the wrong length".into()));
    }
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut row = r.clone();
            row.push(x.clone());
            integer_row(&row)
        })
        .collect();
    let (pivots, _) = bareiss(&mut m, cols);
    if pivots.len() < cols {
        return Err(Error::Singular(format!("rank {} < {cols} unknowns", pivots.len())));
    }
    if m[pivots.len()..].iter().any(|r| !r[cols].is_zero()) {
        return Err(Error::Singular("inconsistent system".into()));
    }
    let mut x = vec![Scalar::zero(); cols];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let mut acc = Scalar::from_integer(m[r][cols].clone());
        for k in c + 1..cols {
            acc -= Scalar::from_integer(m[r][k].clone()) * &x[k];
        }
        x[c] = acc / Scalar::from_integer(m[r][c].clone());
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ratio, scalar};

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&v| scalar(v)).collect()).collect()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&mat(&[&[2, 1], &[1, 3]])).unwrap(), scalar(5));
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])).unwrap(), scalar(-1));
        assert_eq!(determinant(&mat(&[&[1, 2], &[2, 4]])).unwrap(), scalar(0));
        let a = vec![vec![ratio(1, 2), scalar(0)], vec![scalar(0), ratio(2, 3)]];
        assert_eq!(determinant(&a).unwrap(), ratio(1, 3));
        let a = mat(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(determinant(&a).unwrap(), scalar(6));
        assert_eq!(determinant(&mat(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])).unwrap(), scalar(0));
    }

    #[test]
    fn rank_and_solve() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        assert!(matches!(solve(&a, &[scalar(1), scalar(2), scalar(3)]), Err(Error::Singular(_))));
        let a = mat(&[&[0, 2, 1], &[1, 1, 0], &[3, 0, 1]]);
        let x = vec![ratio(1, 2), scalar(-3), ratio(7, 5)];
        let b: Vec<Scalar> = a.iter().map(|r| r.iter().zip(&x).map(|(p, q)| p * q).sum()).collect();
        assert_eq!(solve(&a, &b).unwrap(), x);
    }

    #[test]
    fn overdetermined_consistent() {
        let a = mat(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(solve(&a, &[scalar(2), scalar(3), scalar(5)]).unwrap(), vec![scalar(2), scalar(3)]);
        assert!(solve(&a, &[scalar(2), scalar(3), scalar(6)]).is_err());
    }
}
