//! Exact decision procedure for real-rootedness of rational polynomials.
//!
//! A nonconstant `f` of degree `n` is real-rooted exactly when its Hermite
//! matrix `H_f = (m_{i+j})`, built from the power sums of the roots, is
//! positive semidefinite. Everything on the verdict path is exact rational
//! arithmetic; floating point is used only for the interpolation witness
//! and for numeric cross-checks.
//!
//! ```
//! use hermite_core::{certify, parse_poly, verify_certificate, Verdict};
//!
//! let f = parse_poly("(x^2+1)*(x-1)").unwrap();
//! let cert = certify(&f, false).unwrap();
//! assert_eq!(cert.verdict, Verdict::NotRealRooted);
//! assert!(verify_certificate(&cert, &f).is_ok());
//! ```

pub mod certify;
pub mod corpus;
pub mod error;
pub mod hermite;
pub mod inertia;
pub mod lemma;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod power_sums;
pub mod rational;
pub mod roots;
pub mod selftest;
pub mod serde_q;
pub mod sturm;

pub use certify::{
    certify, certify_from_power_sums, power_sums_by_traces, verify_certificate, Certificate,
    Counts, RejectReason, Verdict,
};
pub use error::{Error, ParseError, Result};
pub use hermite::{
    build_hermite_matrix, quadratic_form, sos_identity_check, HermiteMatrix, RealVector,
};
pub use inertia::{
    congruence_diagonalize, inertia_of, is_psd, negative_witness, CongruenceResult, Inertia,
};
pub use lemma::{conjugate_symmetry_defect, lemma2_witness, Lemma2Witness};
pub use matrix::Matrix;
pub use num_complex::Complex64 as Complex;
pub use parse::parse_poly;
pub use poly::{poly_gcd, squarefree_decomposition, squarefree_part, Poly};
pub use power_sums::{direct_power_sums, newton_power_sums, PowerSums};
pub use rational::Rational;
pub use roots::{approx_roots, ComplexPoly, RootSet};
pub use sturm::{oracle_is_real_rooted, sturm_count_all, SturmChain};
