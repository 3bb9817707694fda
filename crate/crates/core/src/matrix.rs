//! Square matrices of exact rationals.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{to_display_string, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare);
            }
            data.extend(row);
        }
        Ok(Matrix { n, data })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let mut m = Matrix::zeros(d.len());
        for (i, v) in d.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.data.chunks(self.n.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: rhs.n,
            });
        }
        Ok(Matrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(Rational::zero(), |acc, k| {
                acc + &self[(i, k)] * &rhs[(k, j)]
            })
        }))
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok((0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// `x^T A x`, exact.
    pub fn quadratic_form(&self, x: &[Rational]) -> Result<Rational> {
        let ax = self.mul_vec(x)?;
        Ok(x.iter()
            .zip(&ax)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    /// Rank by row reduction.
    pub fn rank(&self) -> usize {
        let mut a = self.rows();
        let n = self.n;
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            eliminate_below(&mut a, rank, col);
            rank += 1;
        }
        rank
    }

    pub fn determinant(&self) -> Rational {
        let mut a = self.rows();
        let n = self.n;
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                a.swap(col, p);
                det = -det;
            }
            det *= &a[col][col];
            eliminate_below(&mut a, col, col);
        }
        det
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }
}

/// Clears column `col` below row `pivot_row` using that row.
fn eliminate_below(a: &mut [Vec<Rational>], pivot_row: usize, col: usize) {
    let (top, rest) = a.split_at_mut(pivot_row + 1);
    let pivot = &top[pivot_row];
    for row in rest {
        if row[col].is_zero() {
            continue;
        }
        let factor = &row[col] / &pivot[col];
        for (dst, src) in row[col..].iter_mut().zip(&pivot[col..]) {
            *dst -= &factor * src;
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.n)
            .map(|i| self.row(i).iter().map(to_display_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            f.write_str("[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_and_det() {
        assert_eq!(m(&[&[2, 0], &[0, 0]]).rank(), 1);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(m(&[&[3, 6, 14], &[6, 14, 36], &[14, 36, 98]]).rank(), 3);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(
            m(&[&[3, 6, 14], &[6, 14, 36], &[14, 36, 98]]).determinant(),
            int(4)
        );
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), int(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), int(0));
    }

    #[test]
    fn quadratic_form_and_shape_errors() {
        let h = m(&[&[2, 0], &[0, -2]]);
        assert_eq!(h.quadratic_form(&[int(0), int(1)]).unwrap(), int(-2));
        assert!(h.quadratic_form(&[int(1)]).is_err());
        assert!(Matrix::from_rows(vec![vec![int(1), int(2)]]).is_err());
        assert!(h.is_symmetric());
        assert!(!m(&[&[0, 1], &[0, 0]]).is_symmetric());
    }

    #[test]
    fn product_with_identity() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.mul(&Matrix::identity(2)).unwrap(), a);
        assert_eq!(a.transpose(), m(&[&[1, 3], &[2, 4]]));
        assert_eq!(a.trace(), int(5));
    }
}
