//! Interpolation witness for polynomials with a non-real root.
//!
//! Given the distinct roots `Λ` (closed under conjugation) and a non-real
//! `λ1 ∈ Λ` with conjugate `λ2`, the polynomial `p` of degree `< |Λ|` with
//! `p(λ1) = i`, `p(λ2) = -i` and `p = 0` on the rest of `Λ` has real
//! coefficients. Its coefficient vector `x`, zero padded to length `n`,
//! gives `x^T H_f x = μ1 i^2 + μ1 (-i)^2 = -2 μ1`.

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermite::{build_hermite_matrix, quadratic_form, RealVector};
use crate::poly::Poly;
use crate::rational::{from_f64_exact, Rational};
use crate::roots::{approx_roots, ComplexPoly, RootSet};

/// Tolerance on `|achieved + 2 μ1| / (1 + 2 μ1)`.
pub const WITNESS_REL_TOL: f64 = 1e-5;
/// Bound on `max |Im c_j| / (1 + max |c_j|)` for the interpolant.
pub const REALNESS_TOL: f64 = 1e-7;
/// Largest accepted interpolation residual `|p(λ) - target|`.
pub const INTERPOLATION_TOL: f64 = 1e-6;

/// `max over λ in Λ of |p(conj λ) - conj(p(λ))|`.
pub fn conjugate_symmetry_defect(p: &ComplexPoly, roots: &RootSet) -> f64 {
    roots
        .values()
        .map(|z| (p.eval(z.conj()) - p.eval(z).conj()).norm())
        .fold(0.0, f64::max)
}

/// Lagrange interpolant of degree `< nodes.len()` through `(nodes[k], values[k])`.
pub fn lagrange_interpolate(nodes: &[Complex64], values: &[Complex64]) -> ComplexPoly {
    let mut acc = ComplexPoly::default();
    for (k, (&xk, &yk)) in nodes.iter().zip(values).enumerate() {
        if yk.is_zero() {
            continue;
        }
        let mut basis = ComplexPoly::new(vec![Complex64::new(1.0, 0.0)]);
        let mut denom = Complex64::new(1.0, 0.0);
        for (j, &xj) in nodes.iter().enumerate() {
            if j != k {
                basis = basis.mul_linear(xj);
                denom *= xk - xj;
            }
        }
        acc = acc.add(&basis.scale(yk / denom));
    }
    acc
}

/// Non-real root with positive imaginary part, preferring the smallest
/// `|Im|`, then the smallest `|Re|`, then the smaller `Re`.
pub fn choose_lambda1(roots: &RootSet) -> Option<(Complex64, u32)> {
    roots
        .distinct
        .iter()
        .copied()
        .filter(|(z, _)| z.im > 0.0)
        .min_by(|(a, _), (b, _)| {
            a.im.abs()
                .total_cmp(&b.im.abs())
                .then(a.re.abs().total_cmp(&b.re.abs()))
                .then(a.re.total_cmp(&b.re))
        })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        ComplexValue { re: z.re, im: z.im }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Lemma2Witness {
    pub lambda1: ComplexValue,
    pub mu1: u32,
    /// Number of distinct roots.
    pub r: usize,
    /// Real interpolant coefficients, ascending, length `r`.
    pub interpolant: Vec<f64>,
    /// Largest `|Im c_j|` before the imaginary parts were dropped.
    pub coefficient_imag_max: f64,
    /// Largest `|c_j|` of the complex interpolant.
    pub coefficient_abs_max: f64,
    /// `conjugate_symmetry_defect` of the complex interpolant.
    pub conjugate_defect: f64,
    pub interpolation_residual: f64,
    /// Interpolant coefficients zero padded to length `n`.
    pub x: Vec<f64>,
    /// `-2 μ1`.
    pub expected: f64,
    /// `sum μ Re(p(λ)^2)` with the real interpolant.
    pub achieved: f64,
    /// Exact `x^T H_f x` at the binary-exact rationalization of `x`.
    #[serde(with = "crate::serde_q")]
    pub exact_q: Rational,
}

impl Lemma2Witness {
    pub fn exact_x(&self) -> Result<RealVector> {
        rationalize(&self.x)
    }

    pub fn relative_error(&self) -> f64 {
        (self.achieved - self.expected).abs() / (1.0 + self.expected.abs())
    }

    pub fn realness_ratio(&self) -> f64 {
        self.coefficient_imag_max / (1.0 + self.coefficient_abs_max)
    }
}

pub fn rationalize(x: &[f64]) -> Result<RealVector> {
    x.iter()
        .map(|&v| {
            from_f64_exact(v)
                .ok_or_else(|| Error::WitnessCheck(format!("non-finite component {v}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(RealVector::new)
}

/// Builds and checks the interpolation witness for a non-real-rooted `f`.
pub fn lemma2_witness(f: &Poly) -> Result<Lemma2Witness> {
    let roots = approx_roots(f)?;
    lemma2_witness_with_roots(f, &roots)
}

/// As [`lemma2_witness`], reusing already computed roots.
pub fn lemma2_witness_with_roots(f: &Poly, roots: &RootSet) -> Result<Lemma2Witness> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let (lambda1, mu1) = choose_lambda1(roots).ok_or(Error::RealRooted)?;
    let lambda2 = lambda1.conj();

    let i = Complex64::new(0.0, 1.0);
    let nodes: Vec<Complex64> = roots.values().collect();
    let values: Vec<Complex64> = nodes
        .iter()
        .map(|&z| {
            if z == lambda1 {
                i
            } else if z == lambda2 {
                -i
            } else {
                Complex64::zero()
            }
        })
        .collect();
    let p = lagrange_interpolate(&nodes, &values);
    let residual = nodes
        .iter()
        .zip(&values)
        .map(|(&z, &y)| (p.eval(z) - y).norm())
        .fold(0.0, f64::max);
    if residual > INTERPOLATION_TOL {
        return Err(Error::Interpolation { residual });
    }

    let coefficient_imag_max = p.max_abs_imag();
    let coefficient_abs_max = p.max_abs_coeff();
    let conjugate_defect = conjugate_symmetry_defect(&p, roots);
    let mut interpolant = p.real_part();
    interpolant.resize(roots.r().max(interpolant.len()), 0.0);

    let mut x = interpolant.clone();
    x.resize(n, 0.0);

    let real_p = ComplexPoly::new(
        interpolant
            .iter()
            .map(|&c| Complex64::new(c, 0.0))
            .collect(),
    );
    let achieved: f64 = roots
        .as_slice()
        .iter()
        .map(|&(z, mu)| {
            let v = real_p.eval(z);
            (v * v).re * f64::from(mu)
        })
        .sum();
    let expected = -2.0 * f64::from(mu1);

    let h = build_hermite_matrix(f)?;
    let exact_x = rationalize(&x)?;
    let exact_q = quadratic_form(&h, &exact_x)?;

    let witness = Lemma2Witness {
        lambda1: lambda1.into(),
        mu1,
        r: roots.r(),
        interpolant,
        coefficient_imag_max,
        coefficient_abs_max,
        conjugate_defect,
        interpolation_residual: residual,
        x,
        expected,
        achieved,
        exact_q,
    };
    if witness.relative_error() > WITNESS_REL_TOL {
        return Err(Error::WitnessCheck(format!(
            "achieved {} differs from {} beyond tolerance",
            witness.achieved, witness.expected
        )));
    }
    if !witness.exact_q.is_negative() {
        return Err(Error::WitnessCheck(format!(
            "exact quadratic form {} is not negative",
            witness.exact_q
        )));
    }
    Ok(witness)
}
