//! Real-rootedness decision with a checkable certificate.
//!
//! `f` is real-rooted exactly when `H_f` is positive semidefinite. A
//! real-rooted verdict carries `S, D` with `S^T H_f S = diag(D)`, `det S != 0`
//! and `D >= 0`. The opposite verdict carries a vector `x` with
//! `x^T H_f x < 0`, and optionally the interpolation witness.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermite::{HermiteMatrix, RealVector};
use crate::inertia::{congruence_diagonalize, witness_from, Inertia};
use crate::lemma::{lemma2_witness, Lemma2Witness};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::power_sums::{newton_power_sums, PowerSums};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    RealRooted,
    NotRealRooted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::RealRooted => "RealRooted",
            Verdict::NotRealRooted => "NotRealRooted",
        })
    }
}

pub const COUNTS_NOTE: &str =
    "classical extension: rank(H_f) = distinct roots, signature(H_f) = distinct real roots";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    /// `rank(H_f)`.
    pub distinct_roots: usize,
    /// `n_plus - n_minus`.
    pub distinct_real_roots: usize,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub polynomial: String,
    pub degree: usize,
    pub verdict: Verdict,
    pub hermite: HermiteMatrix,
    pub inertia: Inertia,
    #[serde(with = "crate::serde_q::vec")]
    pub diagonal: Vec<Rational>,
    /// `S`, row-major.
    #[serde(with = "crate::serde_q::matrix")]
    pub transform: Vec<Vec<Rational>>,
    pub witness: Option<RealVector>,
    #[serde(with = "crate::serde_q::opt", default)]
    pub witness_value: Option<Rational>,
    pub counts: Counts,
    pub lemma2: Option<Lemma2Witness>,
}

/// Runs the decision procedure on `f`.
pub fn certify(f: &Poly, want_lemma2: bool) -> Result<Certificate> {
    let sums = newton_power_sums(f, None)?;
    certify_from_power_sums(f, &sums, want_lemma2)
}

/// The pipeline after the power sums; split out so tests can feed in
/// corrupted sums.
pub fn certify_from_power_sums(
    f: &Poly,
    sums: &PowerSums,
    want_lemma2: bool,
) -> Result<Certificate> {
    let monic = f.make_monic()?;
    let hermite = HermiteMatrix::from_power_sums(sums)?;
    let cong = congruence_diagonalize(hermite.matrix())?;
    let inertia = cong.inertia();
    let verdict = if inertia.is_psd() {
        Verdict::RealRooted
    } else {
        Verdict::NotRealRooted
    };

    let (witness, witness_value) = match witness_from(&cong) {
        Some(x) => {
            let q = hermite.quadratic_form(&x)?;
            (Some(x), Some(q))
        }
        None => (None, None),
    };
    let lemma2 = if want_lemma2 && verdict == Verdict::NotRealRooted {
        Some(lemma2_witness(f)?)
    } else {
        None
    };
    let signature = inertia.signature();
    Ok(Certificate {
        polynomial: monic.to_string(),
        degree: sums.n,
        verdict,
        hermite,
        inertia,
        diagonal: cong.diagonal,
        transform: cong.transform.rows(),
        witness,
        witness_value,
        counts: Counts {
            distinct_roots: inertia.rank(),
            distinct_real_roots: signature.max(0) as usize,
            note: COUNTS_NOTE.to_string(),
        },
        lemma2,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RejectReason {
    InvalidPolynomial,
    DegreeMismatch,
    HermiteMismatch,
    MalformedShape,
    SingularTransform,
    CongruenceMismatch,
    InertiaMismatch,
    CountsMismatch,
    VerdictMismatch,
    WitnessMissing,
    WitnessDimension,
    WitnessNotNegative,
    WitnessValueMismatch,
    Lemma2Mismatch,
}

impl RejectReason {
    pub fn code(&self) -> &'static str {
        match self {
            RejectReason::InvalidPolynomial => "invalid polynomial",
            RejectReason::DegreeMismatch => "degree mismatch",
            RejectReason::HermiteMismatch => "hermite mismatch",
            RejectReason::MalformedShape => "malformed shape",
            RejectReason::SingularTransform => "singular transform",
            RejectReason::CongruenceMismatch => "congruence mismatch",
            RejectReason::InertiaMismatch => "inertia mismatch",
            RejectReason::CountsMismatch => "counts mismatch",
            RejectReason::VerdictMismatch => "verdict mismatch",
            RejectReason::WitnessMissing => "witness missing",
            RejectReason::WitnessDimension => "witness dimension mismatch",
            RejectReason::WitnessNotNegative => "witness not negative",
            RejectReason::WitnessValueMismatch => "witness value mismatch",
            RejectReason::Lemma2Mismatch => "lemma2 witness mismatch",
        }
    }
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Outcome of [`verify_certificate`]: `Ok(())` or the first failed check.
pub type Verification = std::result::Result<(), RejectReason>;

/// Power sums as traces of powers of the companion matrix of `f`.
///
/// The companion matrix has the roots of `f` as eigenvalues (with
/// multiplicity), so `tr(C^k) = m_k`. This is deliberately a different
/// route from Newton's identities.
pub fn power_sums_by_traces(f: &Poly) -> Result<Vec<Rational>> {
    let monic = f.make_monic()?;
    let n = monic.degree().unwrap_or(0);
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let a = monic.coeffs();
    let companion = Matrix::from_fn(n, |i, j| {
        if j == n - 1 {
            -a[i].clone()
        } else if i == j + 1 {
            Rational::from_integer(1.into())
        } else {
            Rational::zero()
        }
    });
    let mut power = Matrix::identity(n);
    let mut out = Vec::with_capacity(2 * n - 1);
    for _ in 0..2 * n - 1 {
        out.push(power.trace());
        power = power.mul(&companion)?;
    }
    Ok(out)
}

/// Checks a certificate against `f` without reusing the code paths that
/// produced it.
pub fn verify_certificate(cert: &Certificate, f: &Poly) -> Verification {
    use RejectReason::*;

    let sums = power_sums_by_traces(f).map_err(|_| InvalidPolynomial)?;
    let n = f.degree().unwrap_or(0);
    if cert.degree != n {
        return Err(DegreeMismatch);
    }
    let h = Matrix::from_fn(n, |i, j| sums[i + j].clone());
    if cert.hermite.dim() != n {
        return Err(MalformedShape);
    }
    if cert.hermite.matrix() != &h {
        return Err(HermiteMismatch);
    }

    if cert.diagonal.len() != n || cert.transform.len() != n {
        return Err(MalformedShape);
    }
    let s = Matrix::from_rows(cert.transform.clone()).map_err(|_| MalformedShape)?;
    if s.determinant().is_zero() {
        return Err(SingularTransform);
    }
    let sts = s
        .transpose()
        .mul(&h)
        .and_then(|m| m.mul(&s))
        .map_err(|_| MalformedShape)?;
    if sts != Matrix::diagonal(&cert.diagonal) {
        return Err(CongruenceMismatch);
    }
    let inertia = Inertia::of_diagonal(&cert.diagonal);
    if cert.inertia != inertia {
        return Err(InertiaMismatch);
    }
    if cert.counts.distinct_roots != inertia.rank()
        || cert.counts.distinct_real_roots as i64 != inertia.signature()
    {
        return Err(CountsMismatch);
    }

    match cert.verdict {
        Verdict::RealRooted => {
            if !inertia.is_psd() || cert.witness.is_some() || cert.lemma2.is_some() {
                return Err(VerdictMismatch);
            }
        }
        Verdict::NotRealRooted => {
            if inertia.is_psd() {
                return Err(VerdictMismatch);
            }
            let x = cert.witness.as_ref().ok_or(WitnessMissing)?;
            let x = fit_length(x.components(), n).ok_or(WitnessDimension)?;
            let q = h.quadratic_form(&x).map_err(|_| WitnessDimension)?;
            if !q.is_negative() {
                return Err(WitnessNotNegative);
            }
            if cert.witness_value.as_ref() != Some(&q) {
                return Err(WitnessValueMismatch);
            }
            if let Some(l2) = &cert.lemma2 {
                let x = l2.exact_x().map_err(|_| Lemma2Mismatch)?;
                let x = fit_length(x.components(), n).ok_or(Lemma2Mismatch)?;
                let q = h.quadratic_form(&x).map_err(|_| Lemma2Mismatch)?;
                if !q.is_negative() || q != l2.exact_q {
                    return Err(Lemma2Mismatch);
                }
            }
        }
    }
    Ok(())
}

/// Pads with zeros or drops trailing zeros to reach length `n`. A vector
/// read as the coefficients of `p(t)` is unchanged by either.
fn fit_length(x: &[Rational], n: usize) -> Option<Vec<Rational>> {
    if x.len() > n && x[n..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut v: Vec<Rational> = x.iter().take(n).cloned().collect();
    v.resize(n, Rational::zero());
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn certify_examples() {
        let c = certify(&p(&[-6, 11, -6, 1]), false).unwrap();
        assert_eq!(c.verdict, Verdict::RealRooted);
        assert_eq!(
            c.inertia,
            Inertia {
                n_plus: 3,
                n_minus: 0,
                n_zero: 0
            }
        );
        assert_eq!(
            (c.counts.distinct_roots, c.counts.distinct_real_roots),
            (3, 3)
        );
        assert_eq!(verify_certificate(&c, &p(&[-6, 11, -6, 1])), Ok(()));

        let f = p(&[-1, 1, -1, 1]);
        let c = certify(&f, true).unwrap();
        assert_eq!(c.verdict, Verdict::NotRealRooted);
        assert_eq!(
            c.inertia,
            Inertia {
                n_plus: 2,
                n_minus: 1,
                n_zero: 0
            }
        );
        assert_eq!(
            (c.counts.distinct_roots, c.counts.distinct_real_roots),
            (3, 1)
        );
        assert!(c.witness_value.as_ref().unwrap().is_negative());
        assert!(c.lemma2.is_some());
        assert_eq!(verify_certificate(&c, &f), Ok(()));

        let c = certify(&p(&[0, 0, 1]), false).unwrap();
        assert_eq!(c.verdict, Verdict::RealRooted);
        assert_eq!(
            c.inertia,
            Inertia {
                n_plus: 1,
                n_minus: 0,
                n_zero: 1
            }
        );
        assert_eq!(
            (c.counts.distinct_roots, c.counts.distinct_real_roots),
            (1, 1)
        );

        assert_eq!(certify(&p(&[5]), false), Err(Error::ConstantPolynomial));
        assert_eq!(certify(&Poly::zero(), false), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn tampering_is_detected() {
        let f = p(&[1, 0, 1]);
        let c = certify(&f, false).unwrap();
        assert_eq!(verify_certificate(&c, &f), Ok(()));

        let mut t = c.clone();
        t.diagonal[0] = -t.diagonal[0].clone();
        assert_eq!(
            verify_certificate(&t, &f),
            Err(RejectReason::CongruenceMismatch)
        );

        let mut t = c.clone();
        t.witness = Some(RealVector::new(vec![int(1), int(0), int(0)]));
        assert_eq!(
            verify_certificate(&t, &f),
            Err(RejectReason::WitnessNotNegative)
        );

        let mut t = c.clone();
        t.witness = Some(RealVector::new(vec![int(1), int(0), int(1)]));
        assert_eq!(
            verify_certificate(&t, &f),
            Err(RejectReason::WitnessDimension)
        );

        let mut t = c.clone();
        t.hermite.matrix_mut()[(0, 1)] = ratio(1, 3);
        assert_eq!(
            verify_certificate(&t, &f),
            Err(RejectReason::HermiteMismatch)
        );

        let mut t = c.clone();
        t.verdict = Verdict::RealRooted;
        assert_eq!(
            verify_certificate(&t, &f),
            Err(RejectReason::VerdictMismatch)
        );

        // Right certificate, wrong polynomial.
        assert_eq!(
            verify_certificate(&c, &p(&[-1, 0, 1])),
            Err(RejectReason::HermiteMismatch)
        );
    }

    #[test]
    fn traces_match_newton() {
        let f = p(&[3, -2, 0, 5, 1, -7]);
        let n = newton_power_sums(&f, None).unwrap();
        assert_eq!(power_sums_by_traces(&f).unwrap(), n.values);
    }

    #[test]
    fn json_schema_field_names() {
        let c = certify(&p(&[1, 0, 1]), true).unwrap();
        let v: serde_json::Value = serde_json::to_value(&c).unwrap();
        for key in [
            "verdict",
            "inertia",
            "diagonal",
            "transform",
            "witness",
            "witness_value",
            "counts",
            "lemma2",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["verdict"], "NotRealRooted");
        assert_eq!(v["witness_value"], "-2/1");
        assert_eq!(v["diagonal"], serde_json::json!(["2/1", "-2/1"]));
        let back: Certificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }
}
