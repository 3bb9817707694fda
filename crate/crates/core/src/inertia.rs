//! Exact inertia of symmetric rational matrices by congruence diagonalization.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermite::RealVector;
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Counts of positive, negative and zero entries in a congruence-diagonal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn of_diagonal(d: &[Rational]) -> Self {
        let n_plus = d.iter().filter(|q| q.is_positive()).count();
        let n_minus = d.iter().filter(|q| q.is_negative()).count();
        Inertia {
            n_plus,
            n_minus,
            n_zero: d.len() - n_plus - n_minus,
        }
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }

    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn is_psd(&self) -> bool {
        self.n_minus == 0
    }
}

/// `S^T H S = diag(D)` with `S` invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceResult {
    pub transform: Matrix,
    pub diagonal: Vec<Rational>,
}

impl CongruenceResult {
    pub fn inertia(&self) -> Inertia {
        Inertia::of_diagonal(&self.diagonal)
    }

    /// Recomputes `S^T H S` and compares with `diag(D)` exactly.
    pub fn verify(&self, h: &Matrix) -> bool {
        let Ok(shs) = self
            .transform
            .transpose()
            .mul(h)
            .and_then(|th| th.mul(&self.transform))
        else {
            return false;
        };
        shs == Matrix::diagonal(&self.diagonal)
    }
}

/// Symmetric Gaussian elimination.
///
/// At step `k`: if some trailing diagonal entry is nonzero, the first one in
/// index order is swapped to position `k` and its row and column are
/// cleared. If the trailing diagonal is all zero but an off-diagonal entry
/// `a[i][j]` is not, row/column `j` is added to row/column `i`, making
/// `a[i][i] = 2 a[i][j]`, and the step is retried. An all-zero trailing
/// block ends the elimination.
pub fn congruence_diagonalize(h: &Matrix) -> Result<CongruenceResult> {
    if !h.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = h.dim();
    let mut a = h.clone();
    let mut s = Matrix::identity(n);

    let mut k = 0;
    while k < n {
        let pivot = (k..n).find(|&i| !a[(i, i)].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let off = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[(i, j)].is_zero());
                match off {
                    Some((i, j)) => {
                        add_congruence(&mut a, &mut s, i, j);
                        i
                    }
                    None => break,
                }
            }
        };
        if p != k {
            swap_congruence(&mut a, &mut s, p, k);
        }
        let d = a[(k, k)].clone();
        for j in k + 1..n {
            if a[(k, j)].is_zero() {
                continue;
            }
            let c = &a[(k, j)] / &d;
            // column j -= c * column k, then row j -= c * row k
            for r in 0..n {
                let v = &c * &a[(r, k)];
                a[(r, j)] -= v;
            }
            for col in 0..n {
                let v = &c * &a[(k, col)];
                a[(j, col)] -= v;
            }
            for r in 0..n {
                let v = &c * &s[(r, k)];
                s[(r, j)] -= v;
            }
        }
        k += 1;
    }

    let diagonal = (0..n).map(|i| a[(i, i)].clone()).collect();
    Ok(CongruenceResult {
        transform: s,
        diagonal,
    })
}

fn swap_congruence(a: &mut Matrix, s: &mut Matrix, p: usize, q: usize) {
    let n = a.dim();
    for r in 0..n {
        let tmp = a[(r, p)].clone();
        a[(r, p)] = a[(r, q)].clone();
        a[(r, q)] = tmp;
    }
    for c in 0..n {
        let tmp = a[(p, c)].clone();
        a[(p, c)] = a[(q, c)].clone();
        a[(q, c)] = tmp;
    }
    for r in 0..n {
        let tmp = s[(r, p)].clone();
        s[(r, p)] = s[(r, q)].clone();
        s[(r, q)] = tmp;
    }
}

/// Column `i += column j`, then row `i += row j`.
fn add_congruence(a: &mut Matrix, s: &mut Matrix, i: usize, j: usize) {
    let n = a.dim();
    for r in 0..n {
        let v = a[(r, j)].clone();
        a[(r, i)] += v;
    }
    for c in 0..n {
        let v = a[(j, c)].clone();
        a[(i, c)] += v;
    }
    for r in 0..n {
        let v = s[(r, j)].clone();
        s[(r, i)] += v;
    }
}

pub fn inertia_of(h: &Matrix) -> Result<Inertia> {
    Ok(congruence_diagonalize(h)?.inertia())
}

pub fn is_psd(h: &Matrix) -> Result<bool> {
    Ok(inertia_of(h)?.is_psd())
}

/// `S e_k` for the first `k` with `d_k < 0`; then `x^T H x = d_k`.
pub fn witness_from(cong: &CongruenceResult) -> Option<RealVector> {
    let k = cong.diagonal.iter().position(Signed::is_negative)?;
    let n = cong.transform.dim();
    Some(RealVector::new(
        (0..n).map(|r| cong.transform[(r, k)].clone()).collect(),
    ))
}

/// A vector with `x^T H x < 0`, or `None` when `H` is positive semidefinite.
pub fn negative_witness(h: &Matrix) -> Result<Option<RealVector>> {
    Ok(witness_from(&congruence_diagonalize(h)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn diagonalize_examples() {
        let h = m(&[&[2, 0], &[0, -2]]);
        let c = congruence_diagonalize(&h).unwrap();
        assert_eq!(c.diagonal, vec![int(2), int(-2)]);
        assert_eq!(c.transform, Matrix::identity(2));

        let h = m(&[&[0, 1], &[1, 0]]);
        let c = congruence_diagonalize(&h).unwrap();
        assert_eq!(c.diagonal, vec![int(2), ratio(-1, 2)]);
        assert!(c.verify(&h));
        assert_eq!(
            c.inertia(),
            Inertia {
                n_plus: 1,
                n_minus: 1,
                n_zero: 0
            }
        );

        let h = m(&[&[2, 0], &[0, 0]]);
        let c = congruence_diagonalize(&h).unwrap();
        assert_eq!(c.diagonal, vec![int(2), int(0)]);
    }

    #[test]
    fn inertia_examples() {
        let h = m(&[&[3, 6, 14], &[6, 14, 36], &[14, 36, 98]]);
        assert_eq!(
            inertia_of(&h).unwrap(),
            Inertia {
                n_plus: 3,
                n_minus: 0,
                n_zero: 0
            }
        );
        assert!(is_psd(&h).unwrap());
        let h = m(&[&[2, 0], &[0, -2]]);
        assert_eq!(
            inertia_of(&h).unwrap(),
            Inertia {
                n_plus: 1,
                n_minus: 1,
                n_zero: 0
            }
        );
        assert!(!is_psd(&h).unwrap());
        let h = m(&[&[2, 0], &[0, 0]]);
        assert_eq!(
            inertia_of(&h).unwrap(),
            Inertia {
                n_plus: 1,
                n_minus: 0,
                n_zero: 1
            }
        );
        assert!(is_psd(&h).unwrap());
        // Leading minors are all >= 0 here, yet the matrix is not PSD.
        assert!(!is_psd(&m(&[&[0, 0], &[0, -1]])).unwrap());
    }

    #[test]
    fn witness_examples() {
        let h = m(&[&[2, 0], &[0, -2]]);
        let x = negative_witness(&h).unwrap().unwrap();
        assert_eq!(x.components(), &[int(0), int(1)]);
        assert_eq!(h.quadratic_form(x.components()).unwrap(), int(-2));

        let h = m(&[&[0, 1], &[1, 0]]);
        let x = negative_witness(&h).unwrap().unwrap();
        assert!(h.quadratic_form(x.components()).unwrap().is_negative());

        let h = m(&[&[3, 6, 14], &[6, 14, 36], &[14, 36, 98]]);
        assert_eq!(negative_witness(&h).unwrap(), None);
    }

    #[test]
    fn zero_diagonal_deeper_in() {
        let h = m(&[&[1, 0, 0], &[0, 0, 3], &[0, 3, 0]]);
        let c = congruence_diagonalize(&h).unwrap();
        assert!(c.verify(&h));
        assert_eq!(
            c.inertia(),
            Inertia {
                n_plus: 2,
                n_minus: 1,
                n_zero: 0
            }
        );
        assert!(!c.transform.determinant().is_zero());
        let z = Matrix::zeros(3);
        let c = congruence_diagonalize(&z).unwrap();
        assert_eq!(c.inertia().n_zero, 3);
    }

    #[test]
    fn rejects_nonsymmetric() {
        assert_eq!(
            congruence_diagonalize(&m(&[&[0, 1], &[0, 0]])),
            Err(Error::NotSymmetric)
        );
    }
}
