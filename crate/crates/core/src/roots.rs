//! Numeric roots with exact multiplicities.
//!
//! Roots are located on the squarefree part only (simple roots converge
//! quadratically; clusters from repeated roots do not). Multiplicities come
//! from the exact squarefree decomposition.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{squarefree_decomposition, squarefree_part, Poly};

/// Polynomial with complex double-precision coefficients, ascending.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ComplexPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, &c| acc * t + c)
    }

    /// Value and first derivative in one Horner pass.
    pub fn eval_with_derivative(&self, t: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for &c in self.coeffs.iter().rev() {
            dp = dp * t + p;
            p = p * t + c;
        }
        (p, dp)
    }

    /// Multiplies by `(t - a)`.
    pub fn mul_linear(&self, a: Complex64) -> ComplexPoly {
        let mut out = vec![Complex64::zero(); self.coeffs.len() + 1];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[j + 1] += c;
            out[j] -= c * a;
        }
        ComplexPoly::new(out)
    }

    pub fn scale(&self, s: Complex64) -> ComplexPoly {
        ComplexPoly::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn add(&self, other: &ComplexPoly) -> ComplexPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let at = |v: &[Complex64], j: usize| v.get(j).copied().unwrap_or_default();
        ComplexPoly::new(
            (0..len)
                .map(|j| at(&self.coeffs, j) + at(&other.coeffs, j))
                .collect(),
        )
    }

    pub fn max_abs_imag(&self) -> f64 {
        self.coeffs.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Drops the imaginary parts of the coefficients.
    pub fn real_part(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.re).collect()
    }
}

/// Distinct roots with their multiplicities.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub distinct: Vec<(Complex64, u32)>,
}

impl RootSet {
    /// Number of distinct roots.
    pub fn r(&self) -> usize {
        self.distinct.len()
    }

    /// Total count with multiplicity.
    pub fn n(&self) -> usize {
        self.distinct.iter().map(|&(_, mu)| mu as usize).sum()
    }

    pub fn as_slice(&self) -> &[(Complex64, u32)] {
        &self.distinct
    }

    pub fn values(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.distinct.iter().map(|&(z, _)| z)
    }

    pub fn has_non_real(&self) -> bool {
        self.distinct.iter().any(|(z, _)| z.im != 0.0)
    }

    /// Every non-real root has a partner within `tol` of its conjugate with
    /// the same multiplicity.
    pub fn is_conjugate_closed(&self, tol: f64) -> bool {
        self.distinct.iter().all(|&(z, mu)| {
            z.im == 0.0
                || self
                    .distinct
                    .iter()
                    .any(|&(w, nu)| nu == mu && (w - z.conj()).norm() <= tol)
        })
    }
}

const MAX_ITERATIONS: usize = 2000;

/// All roots of a polynomial with complex coefficients (Aberth-Ehrlich).
pub fn aberth(p: &ComplexPoly) -> Result<Vec<Complex64>> {
    let deg = p
        .degree()
        .ok_or_else(|| Error::RootFinding("zero polynomial".into()))?;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = p.coeffs[deg];
    let monic = p.scale(lead.inv());
    if deg == 1 {
        return Ok(vec![-monic.coeffs[0]]);
    }

    // Initial guesses on a circle whose radius bounds the root moduli.
    let radius = (1..=deg)
        .map(|k| monic.coeffs[deg - k].norm().powf(1.0 / k as f64))
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / deg as f64 + 0.4))
        .collect();

    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for k in 0..deg {
            let (v, dv) = monic.eval_with_derivative(z[k]);
            if v.is_zero() {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                continue;
            }
            z[k] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
        }
        if max_step <= 4.0 * f64::EPSILON {
            converged = true;
            break;
        }
    }
    if !converged && z.iter().any(|r| !r.is_finite()) {
        return Err(Error::RootFinding("Aberth iteration diverged".into()));
    }
    // Newton polish; a stalled Aberth run is caught by the residual check.
    for r in &mut z {
        for _ in 0..3 {
            let (v, dv) = monic.eval_with_derivative(*r);
            if dv.is_zero() {
                break;
            }
            let next = *r - v / dv;
            if next.is_finite() && monic.eval(next).norm() <= v.norm() {
                *r = next;
            } else {
                break;
            }
        }
    }
    Ok(z)
}

fn residual_ok(g: &ComplexPoly, z: Complex64) -> bool {
    let deg = g.degree().unwrap_or(0) as i32;
    g.eval(z).norm() <= 1e-9 * (1.0 + z.norm()).powi(deg)
}

fn normalized_residual(g: &ComplexPoly, z: Complex64) -> f64 {
    let scale: f64 = g
        .coeffs()
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * z.norm() + c.norm());
    g.eval(z).norm() / scale.max(f64::MIN_POSITIVE)
}

/// Distinct roots of a real polynomial with exact multiplicities.
///
/// The returned set is closed under conjugation exactly: each non-real pair
/// is symmetrized and real roots carry a zero imaginary part.
pub fn approx_roots(f: &Poly) -> Result<RootSet> {
    let g = squarefree_part(f)?;
    let gc = g.to_complex_poly();
    let mut found = aberth(&gc)?;
    for &z in &found {
        if !residual_ok(&gc, z) {
            return Err(Error::RootFinding(format!(
                "residual {:e} at {z} exceeds bound",
                gc.eval(z).norm()
            )));
        }
    }
    let roots = close_under_conjugation(&mut found)?;

    let classes: Vec<(ComplexPoly, u32)> = squarefree_decomposition(f)?
        .into_iter()
        .map(|(gk, k)| (gk.to_complex_poly(), k))
        .collect();
    let mut counts = vec![0usize; classes.len()];
    let mut distinct = Vec::with_capacity(roots.len());
    for z in roots {
        let (best, _) = classes
            .iter()
            .enumerate()
            .map(|(i, (gk, _))| (i, normalized_residual(gk, z)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .ok_or_else(|| Error::RootFinding("empty decomposition".into()))?;
        counts[best] += 1;
        distinct.push((z, classes[best].1));
    }
    for ((gk, k), &count) in classes.iter().zip(&counts) {
        if gk.degree() != Some(count) {
            return Err(Error::RootFinding(format!(
                "multiplicity class {k} expects {} roots, matched {count}",
                gk.degree().unwrap_or(0)
            )));
        }
    }
    distinct.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    Ok(RootSet { distinct })
}

/// Snaps near-real roots onto the real axis and symmetrizes conjugate pairs.
fn close_under_conjugation(found: &mut [Complex64]) -> Result<Vec<Complex64>> {
    let is_real = |z: &Complex64| z.im.abs() <= 1e-7 * (1.0 + z.norm());
    let mut out = Vec::with_capacity(found.len());
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for &z in found.iter() {
        if is_real(&z) {
            out.push(Complex64::new(z.re, 0.0));
        } else if z.im > 0.0 {
            upper.push(z);
        } else {
            lower.push(z);
        }
    }
    if upper.len() != lower.len() {
        return Err(Error::RootFinding(
            "non-real roots do not pair into conjugates".into(),
        ));
    }
    for z in upper {
        let (idx, dist) = lower
            .iter()
            .enumerate()
            .map(|(i, w)| (i, (w - z.conj()).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .ok_or_else(|| Error::RootFinding("unpaired root".into()))?;
        if dist > 1e-7 * (1.0 + z.norm()) {
            return Err(Error::RootFinding(format!(
                "root {z} has no conjugate partner (closest at distance {dist:e})"
            )));
        }
        let w = lower.swap_remove(idx);
        let mid = (z + w.conj()) * 0.5;
        out.push(mid);
        out.push(mid.conj());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-10
    }

    #[test]
    fn roots_of_x2_plus_1() {
        let rs = approx_roots(&Poly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(rs.r(), 2);
        assert!(close(rs.distinct[0].0, c(0., -1.)) && rs.distinct[0].1 == 1);
        assert!(close(rs.distinct[1].0, c(0., 1.)) && rs.distinct[1].1 == 1);
        assert!(rs.is_conjugate_closed(1e-7));
        assert!(rs.has_non_real());
    }

    #[test]
    fn double_root_at_zero() {
        let rs = approx_roots(&Poly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(rs.distinct, vec![(c(0., 0.), 2)]);
        assert_eq!(rs.n(), 2);
    }

    #[test]
    fn mixed_factors() {
        let rs = approx_roots(&Poly::from_ints(&[-1, 1, -1, 1])).unwrap();
        assert_eq!(rs.r(), 3);
        let want = [c(0., -1.), c(0., 1.), c(1., 0.)];
        for ((z, mu), w) in rs.distinct.iter().zip(want) {
            assert!(close(*z, w), "{z} vs {w}");
            assert_eq!(*mu, 1);
        }
    }

    #[test]
    fn multiplicities_from_decomposition() {
        // (x-1)^3 (x^2+1)^2 (x+2)
        let f = &(&Poly::from_ints(&[-1, 1]).pow(3) * &Poly::from_ints(&[1, 0, 1]).pow(2))
            * &Poly::from_ints(&[2, 1]);
        let rs = approx_roots(&f).unwrap();
        assert_eq!(rs.n(), 8);
        let mu_at = |w: Complex64| rs.distinct.iter().find(|(z, _)| close(*z, w)).unwrap().1;
        assert_eq!(mu_at(c(1., 0.)), 3);
        assert_eq!(mu_at(c(0., 1.)), 2);
        assert_eq!(mu_at(c(0., -1.)), 2);
        assert_eq!(mu_at(c(-2., 0.)), 1);
    }

    #[test]
    fn aberth_on_wilkinson_like() {
        let f = (1..=8).fold(Poly::one(), |acc, k| &acc * &Poly::from_ints(&[-k, 1]));
        let rs = approx_roots(&f).unwrap();
        for (k, (z, _)) in rs.distinct.iter().enumerate() {
            assert!((z.re - (k + 1) as f64).abs() < 1e-9);
            assert_eq!(z.im, 0.0);
        }
    }

    #[test]
    fn constant_rejected() {
        assert!(approx_roots(&Poly::from_ints(&[3])).is_err());
    }

    #[test]
    fn complex_poly_helpers() {
        let p = ComplexPoly::new(vec![c(1., 0.)])
            .mul_linear(c(0., 1.))
            .mul_linear(c(0., -1.));
        assert!(close(p.coeffs()[0], c(1., 0.)));
        assert!(close(p.coeffs()[1], c(0., 0.)));
        let (v, dv) = p.eval_with_derivative(c(2., 0.));
        assert!(close(v, c(5., 0.)) && close(dv, c(4., 0.)));
    }
}
