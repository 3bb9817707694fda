//! The Hermite matrix of a polynomial and its quadratic form.
//!
//! For `f` of degree `n` with power sums `m_k`, `H_f` is the `n x n` Hankel
//! matrix with `H[i][j] = m_{i+j}` (0-based). For any real vector `x`,
//! `x^T H_f x = sum over roots of p(lambda)^2` where
//! `p(t) = x_1 + x_2 t + ... + x_n t^{n-1}`.

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::power_sums::{newton_power_sums, PowerSums};
use crate::rational::{to_f64, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteMatrix {
    matrix: Matrix,
}

impl HermiteMatrix {
    /// Hankel matrix `H[i][j] = m[i + j]` from `2n - 1` power sums.
    pub fn from_power_sums(sums: &PowerSums) -> Result<Self> {
        let n = sums.n;
        if sums.len() < 2 * n - 1 {
            return Err(Error::DimensionMismatch {
                expected: 2 * n - 1,
                got: sums.len(),
            });
        }
        Ok(HermiteMatrix {
            matrix: Matrix::from_fn(n, |i, j| sums.values[i + j].clone()),
        })
    }

    /// Wraps an arbitrary square matrix, e.g. one read back from a certificate.
    /// No structural checks are made.
    pub fn from_matrix(matrix: Matrix) -> Self {
        HermiteMatrix { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn matrix_mut(&mut self) -> &mut Matrix {
        &mut self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.matrix[(i, j)]
    }

    /// Constant along every anti-diagonal.
    pub fn is_hankel(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n)
                .all(|j| i + 1 >= n || j == 0 || self.matrix[(i, j)] == self.matrix[(i + 1, j - 1)])
        })
    }

    pub fn quadratic_form(&self, x: &RealVector) -> Result<Rational> {
        quadratic_form(self, x)
    }
}

impl Serialize for HermiteMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::serde_q::matrix::serialize(&self.matrix.rows(), s)
    }
}

impl<'de> Deserialize<'de> for HermiteMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = crate::serde_q::matrix::deserialize(d)?;
        Matrix::from_rows(rows)
            .map(HermiteMatrix::from_matrix)
            .map_err(serde::de::Error::custom)
    }
}

/// Real vector `(x_1, ..., x_n)`, read as the coefficients of
/// `p(t) = sum x_j t^{j-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RealVector(#[serde(with = "crate::serde_q::vec")] pub Vec<Rational>);

impl RealVector {
    pub fn new(components: Vec<Rational>) -> Self {
        RealVector(components)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn as_poly(&self) -> Poly {
        Poly::new(self.0.clone())
    }
}

impl From<Vec<Rational>> for RealVector {
    fn from(v: Vec<Rational>) -> Self {
        RealVector(v)
    }
}

pub fn build_hermite_matrix(f: &Poly) -> Result<HermiteMatrix> {
    let sums = newton_power_sums(f, None)?;
    HermiteMatrix::from_power_sums(&sums)
}

/// `sum_{i,j} h_ij x_i x_j`, exact.
pub fn quadratic_form(h: &HermiteMatrix, x: &RealVector) -> Result<Rational> {
    h.matrix.quadratic_form(&x.0)
}

/// `sum_l mu_l * p(lambda_l)^2` in complex floating point, with
/// `p(t) = sum x_j t^{j-1}`.
///
/// With `roots` the complete root multiset of `f`, the real part matches
/// `quadratic_form(H_f, x)` and the imaginary part vanishes.
pub fn sos_identity_check(x: &RealVector, roots: &[(Complex64, u32)]) -> Complex64 {
    let coeffs: Vec<f64> = x.0.iter().map(to_f64).collect();
    roots
        .iter()
        .map(|&(lambda, mu)| {
            let p = coeffs
                .iter()
                .rev()
                .fold(Complex64::zero(), |acc, &c| acc * lambda + c);
            p * p * f64::from(mu)
        })
        .sum()
}
