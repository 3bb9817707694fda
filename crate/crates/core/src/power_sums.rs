//! Power sums of the roots of a polynomial, `m_k = sum of lambda^k` over the
//! roots counted with multiplicity.

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerSums {
    /// Degree of the polynomial the sums came from.
    pub n: usize,
    /// `m_0, m_1, ...`; `m_0 = n`.
    #[serde(with = "crate::serde_q::vec")]
    pub values: Vec<Rational>,
}

impl PowerSums {
    pub fn get(&self, k: usize) -> Option<&Rational> {
        self.values.get(k)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Exact power sums via Newton's identities on the monic normalization of `f`.
///
/// With `f / lc(f) = x^n + a_{n-1} x^{n-1} + ... + a_0`:
///
/// ```text
/// m_k = -(k a_{n-k} + sum_{i=1}^{k-1} a_{n-i} m_{k-i})   for 1 <= k <= n
/// m_k = -sum_{i=1}^{n} a_{n-i} m_{k-i}                   for k > n
/// ```
///
/// Returns `m_0..=m_upto`; `None` means `upto = 2n - 2`.
pub fn newton_power_sums(f: &Poly, upto: Option<usize>) -> Result<PowerSums> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let monic = f.make_monic()?;
    let a = monic.coeffs();
    let n = a.len() - 1;
    let upto = upto.unwrap_or(2 * n - 2);

    let mut m: Vec<Rational> = Vec::with_capacity(upto + 1);
    m.push(int(n as i64));
    for k in 1..=upto {
        let mut s = Rational::zero();
        if k <= n {
            s += &a[n - k] * int(k as i64);
        }
        for i in 1..k.min(n + 1) {
            s += &a[n - i] * &m[k - i];
        }
        m.push(-s);
    }
    Ok(PowerSums { n, values: m })
}

/// `m_k = sum mu * lambda^k` evaluated literally in floating point.
pub fn direct_power_sums(roots: &[(Complex64, u32)], upto: usize) -> Vec<Complex64> {
    (0..=upto)
        .map(|k| {
            roots
                .iter()
                .map(|&(z, mu)| z.powu(k as u32) * f64::from(mu))
                .sum()
        })
        .collect()
}
