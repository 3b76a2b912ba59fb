//! Dense rational matrices with fraction-free elimination.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;

/// Row-major `rows × cols` matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: alloc::vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::SizeMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(RationalMatrix { rows: n, cols, data })
    }

    /// Build from columns, each of length `rows`.
    pub fn from_columns(rows: usize, columns: Vec<Vec<Rational>>) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.into_iter().enumerate() {
            if col.len() != rows {
                return Err(Error::SizeMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Append the columns of `other` on the right.
    pub fn hcat(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.rows != other.rows {
            return Err(Error::SizeMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(m)
    }

    /// Rank, and the determinant when the matrix is square.
    pub fn rank_and_det(&self) -> (usize, Option<Rational>) {
        // Clear denominators row by row; remember the scale factors.
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                scale *= &l;
                row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
            })
            .collect();
        let (rank, sign, last_pivot) = bareiss(&mut a, self.cols);
        let det = (self.rows == self.cols).then(|| {
            if rank < self.rows {
                Rational::zero()
            } else if self.rows == 0 {
                Rational::one()
            } else {
                let d = if sign { -last_pivot } else { last_pivot };
                Rational::new(d, scale)
            }
        });
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.rank_and_det().0
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// In-place fraction-free (Bareiss) row echelon form. Returns the rank, the
/// parity of row swaps (`true` = odd) and the last pivot, which for a
/// nonsingular square matrix is its determinant up to that sign.
fn bareiss(a: &mut [Vec<BigInt>], cols: usize) -> (usize, bool, BigInt) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut k = 0;
    let mut odd = false;
    for c in 0..cols {
        if k == rows {
            break;
        }
        let Some(p) = (k..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        if p != k {
            a.swap(p, k);
            odd = !odd;
        }
        for i in (k + 1)..rows {
            for j in (c + 1)..cols {
                let v = &a[k][c] * &a[i][j] - &a[i][c] * &a[k][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[k][c].clone();
        k += 1;
    }
    (k, odd, prev)
}

/// Free-function form of [`RationalMatrix::rank_and_det`].
pub fn rank_and_det(m: &RationalMatrix) -> (usize, Option<Rational>) {
    m.rank_and_det()
}

/// True iff `b` lies in the column span of `a` (rank does not grow when
/// `b` is appended).
pub fn in_column_span(a: &RationalMatrix, b: &[Rational]) -> Result<bool> {
    let col = RationalMatrix::from_columns(a.rows(), alloc::vec![b.to_vec()])?;
    Ok(a.hcat(&col)?.rank() == a.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, ratio};
    use alloc::vec;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    /// Cofactor expansion, independent of the elimination route.
    fn laplace(a: &RationalMatrix) -> Rational {
        let n = a.rows();
        if n == 0 {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            let minor = RationalMatrix::from_rows(
                (1..n)
                    .map(|i| (0..n).filter(|&k| k != j).map(|k| a.get(i, k).clone()).collect())
                    .collect(),
            )
            .unwrap();
            let term = a.get(0, j) * laplace(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn example_one_collocation() {
        let a = m(&[&[1, 1, 0, 0], &[1, 1, 1, 1], &[1, 1, 2, 4], &[1, 2, 0, 0]]);
        assert_eq!(laplace(&a), int(2));
        assert_eq!(a.rank_and_det(), (4, Some(int(2))));
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(RationalMatrix::identity(3).rank_and_det(), (3, Some(int(1))));
        assert_eq!(m(&[&[1, 1], &[1, 1]]).rank_and_det(), (1, Some(int(0))));
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6]]).rank_and_det(), (1, None));
    }

    #[test]
    fn rational_entries_and_swaps() {
        let a = RationalMatrix::from_rows(vec![
            vec![int(0), ratio(1, 2), int(3)],
            vec![ratio(2, 3), int(0), int(-1)],
            vec![int(5), ratio(-7, 4), ratio(1, 9)],
        ])
        .unwrap();
        let (r, d) = a.rank_and_det();
        assert_eq!(r, 3);
        assert_eq!(d.unwrap(), laplace(&a));
    }

    #[test]
    fn rank_deficient_with_skipped_column() {
        let a = m(&[&[0, 1, 2, 3], &[0, 2, 4, 7], &[0, 3, 6, 10]]);
        assert_eq!(a.rank(), 2);
        assert!(in_column_span(&a, &[int(1), int(2), int(3)]).unwrap());
        assert!(!in_column_span(&m(&[&[1], &[1]]), &[int(1), int(2)]).unwrap());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(RationalMatrix::from_rows(vec![vec![int(1)], vec![int(1), int(2)]]).is_err());
    }
}
