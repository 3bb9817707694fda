//! Plain-text rendering.

use std::fmt::Write;

use hermite_core::lemma::Lemma2Witness;
use hermite_core::rational::to_display_string;
use hermite_core::{Certificate, HermiteMatrix, Matrix, Poly, PowerSums, Rational, RootSet};

fn list(v: &[Rational]) -> String {
    let items: Vec<String> = v.iter().map(to_display_string).collect();
    format!("({})", items.join(", "))
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}

pub fn certificate(c: &Certificate) -> String {
    let mut out = String::new();
    let i = &c.inertia;
    let _ = writeln!(out, "polynomial (monic): {}", c.polynomial);
    let _ = writeln!(out, "verdict: {}", c.verdict);
    let _ = writeln!(
        out,
        "inertia (n+, n-, n0): ({}, {}, {})",
        i.n_plus, i.n_minus, i.n_zero
    );
    let _ = writeln!(out, "H_f:");
    out.push_str(&indent(&c.hermite.matrix().to_string()));
    let _ = writeln!(out, "diagonal D: {}", list(&c.diagonal));
    if let Ok(s) = Matrix::from_rows(c.transform.clone()) {
        let _ = writeln!(out, "transform S (S^T H_f S = diag D):");
        out.push_str(&indent(&s.to_string()));
    }
    if let (Some(x), Some(q)) = (&c.witness, &c.witness_value) {
        let _ = writeln!(out, "witness x: {}", list(x.components()));
        let _ = writeln!(out, "Q_f(x) = {}", to_display_string(q));
    }
    let _ = writeln!(
        out,
        "counts (classical extension): {} distinct roots, {} distinct real roots",
        c.counts.distinct_roots, c.counts.distinct_real_roots
    );
    if let Some(w) = &c.lemma2 {
        out.push_str(&lemma2(w));
    }
    out
}

pub fn lemma2(w: &Lemma2Witness) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "interpolation witness:");
    let _ = writeln!(
        out,
        "  lambda1 = {} + {}i, mu1 = {}",
        w.lambda1.re, w.lambda1.im, w.mu1
    );
    let _ = writeln!(out, "  p coefficients: {:?}", w.interpolant);
    let _ = writeln!(out, "  x (padded): {:?}", w.x);
    let _ = writeln!(
        out,
        "  sum mu p(lambda)^2 = {} (expected {})",
        w.achieved, w.expected
    );
    let _ = writeln!(out, "  exact Q_f(x) = {}", to_display_string(&w.exact_q));
    let _ = writeln!(
        out,
        "  coefficient imag max {:.3e}, conjugate defect {:.3e}",
        w.coefficient_imag_max, w.conjugate_defect
    );
    out
}

pub fn witnesses(c: &Certificate, w: &Lemma2Witness) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "verdict: {}", c.verdict);
    if let (Some(x), Some(q)) = (&c.witness, &c.witness_value) {
        let _ = writeln!(out, "congruence witness x: {}", list(x.components()));
        let _ = writeln!(out, "Q_f(x) = {}", to_display_string(q));
    }
    out.push_str(&lemma2(w));
    out
}

pub fn matrix(f: &Poly, sums: &PowerSums, h: &HermiteMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "polynomial: {f}");
    let _ = writeln!(
        out,
        "power sums m_0..m_{}: {}",
        sums.len() - 1,
        list(&sums.values)
    );
    let _ = writeln!(out, "H_f:");
    out.push_str(&indent(&h.matrix().to_string()));
    out
}

pub fn roots(r: &RootSet) -> String {
    let mut out = String::from("approximate roots:\n");
    for (z, mu) in r.as_slice() {
        let _ = writeln!(out, "  {:.12} {:+.12}i  (multiplicity {mu})", z.re, z.im);
    }
    out
}
