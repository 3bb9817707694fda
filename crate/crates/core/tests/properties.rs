use hermite_core::corpus::{Factor, GeneratedPoly};
use hermite_core::rational::{from_f64_exact, int, ratio, to_f64};
use hermite_core::{
    approx_roots, build_hermite_matrix, certify, congruence_diagonalize, direct_power_sums,
    inertia_of, is_psd, lemma2_witness, negative_witness, newton_power_sums, oracle_is_real_rooted,
    parse_poly, poly_gcd, quadratic_form, sos_identity_check, squarefree_part, sturm_count_all,
    verify_certificate, Matrix, Poly, Rational, RealVector, Verdict,
};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn factor() -> impl Strategy<Value = Factor> {
    prop_oneof![
        3 => (-5i64..=5).prop_map(Factor::Linear),
        2 => (-3i64..=3, 1i64..=4).prop_map(|(b, extra)| Factor::Quadratic { b, c: b * b / 4 + extra }),
    ]
}

fn scale() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=5, any::<bool>()).prop_map(|(n, d, neg)| ratio(if neg { -n } else { n }, d))
}

/// Products of known factors with total degree in `1..=max_degree`.
fn generated(max_degree: usize) -> impl Strategy<Value = GeneratedPoly> {
    (prop::collection::vec((factor(), 1u32..=3), 1..8), scale()).prop_filter_map(
        "degree out of range",
        move |(facs, s)| {
            let mut kept = Vec::new();
            let mut deg = 0;
            for (f, mu) in facs {
                let d = f.degree() * mu as usize;
                if deg + d <= max_degree {
                    deg += d;
                    kept.push((f, mu));
                }
            }
            (deg >= 1).then(|| GeneratedPoly::from_factors(&kept, s))
        },
    )
}

fn not_real_rooted(max_degree: usize) -> impl Strategy<Value = GeneratedPoly> {
    (
        generated(max_degree.saturating_sub(2).max(1)),
        factor(),
        1u32..=2,
    )
        .prop_filter_map("need a quadratic", move |(g, extra, mu)| {
            let mut facs = g.factors.clone();
            if let Factor::Quadratic { .. } = extra {
                facs.push((extra, mu));
            } else {
                facs.push((Factor::Quadratic { b: 0, c: 1 }, 1));
            }
            let out = GeneratedPoly::from_factors(&facs, g.scale.clone());
            (out.degree() <= max_degree && !out.is_real_rooted()).then_some(out)
        })
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 0..7)
        .prop_map(|c| Poly::new(c.into_iter().map(|(n, d)| ratio(n, d)).collect()))
}

fn rational_vec(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-30i64..=30, 1i64..=7).prop_map(|(a, b)| ratio(a, b)), n)
}

fn rel_close(a: f64, b: f64, scale: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * scale.max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    // ---- polynomial arithmetic ----

    #[test]
    fn gcd_contains_common_factor(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let g = poly_gcd(&(&a * &c), &(&b * &c)).unwrap();
        let (_, r) = g.div_rem(&c.make_monic().unwrap()).unwrap();
        prop_assert!(r.is_zero());
        prop_assert_eq!(g.leading().cloned(), Some(int(1)));
    }

    #[test]
    fn parse_format_round_trip(p in small_poly()) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p.clone());
        let list: Vec<String> = p.coeffs().iter().map(|q| q.to_string()).collect();
        if !list.is_empty() {
            prop_assert_eq!(parse_poly(&list.join(", ")).unwrap(), p);
        }
    }

    #[test]
    fn squarefree_part_keeps_roots(g in generated(10)) {
        let sf = squarefree_part(&g.poly).unwrap();
        prop_assert_eq!(sf.degree(), Some(g.distinct_roots()));
        let repeated: usize = g.factors.iter().map(|(f, mu)| f.degree() * (*mu as usize - 1)).sum();
        prop_assert_eq!(sf.degree().unwrap() + repeated, g.degree());
        for t in -6i64..=6 {
            let t = int(t);
            prop_assert_eq!(sf.eval(&t).is_zero(), g.poly.eval(&t).is_zero());
        }
    }

    // ---- power sums ----

    #[test]
    fn newton_matches_direct_sums(g in generated(10)) {
        let n = g.degree();
        let sums = newton_power_sums(&g.poly, None).unwrap();
        prop_assert_eq!(sums.values.len(), 2 * n - 1);
        prop_assert_eq!(&sums.values[0], &int(n as i64));
        if let Some(roots) = g.integer_roots() {
            for (k, m) in sums.values.iter().enumerate() {
                let direct: Rational = roots
                    .iter()
                    .map(|&(a, mu)| int(a).pow(k as i32) * int(mu as i64))
                    .fold(Rational::zero(), |x, y| x + y);
                prop_assert_eq!(m, &direct);
            }
        } else {
            let direct = direct_power_sums(&g.roots(), 2 * n - 2);
            for (k, (m, d)) in sums.values.iter().zip(&direct).enumerate() {
                let mag: f64 = g.roots().iter().map(|(z, mu)| z.norm().powi(k as i32) * f64::from(*mu)).sum();
                prop_assert!(rel_close(to_f64(m), d.re, mag, 1e-9), "k={} {} vs {}", k, m, d);
                prop_assert!(d.im.abs() <= 1e-9 * mag.max(1.0));
            }
        }
    }

    #[test]
    fn newton_is_scale_invariant(g in generated(8), c in scale()) {
        let a = newton_power_sums(&g.poly, Some(12)).unwrap();
        let b = newton_power_sums(&g.poly.scale(&c), Some(12)).unwrap();
        prop_assert_eq!(a, b);
    }

    // ---- Hermite form ----

    #[test]
    fn quadratic_form_is_sum_of_squares(g in generated(10), seed in rational_vec(10)) {
        let h = build_hermite_matrix(&g.poly).unwrap();
        prop_assert!(h.is_hankel() && h.matrix().is_symmetric());
        let n = h.dim();
        let x = RealVector::new(seed[..n].to_vec());
        let q = quadratic_form(&h, &x).unwrap();
        let neg = RealVector::new(x.components().iter().map(|v| -v).collect());
        prop_assert_eq!(&quadratic_form(&h, &neg).unwrap(), &q);

        let roots = approx_roots(&g.poly).unwrap();
        let s = sos_identity_check(&x, roots.as_slice());
        let coeffs: Vec<f64> = x.components().iter().map(to_f64).collect();
        let scale: f64 = roots.as_slice().iter().map(|&(z, mu)| {
            let p: f64 = coeffs.iter().enumerate().map(|(j, c)| c.abs() * z.norm().powi(j as i32)).sum();
            p * p * f64::from(mu)
        }).sum();
        prop_assert!(rel_close(to_f64(&q), s.re, scale, 1e-7), "{} vs {}", q, s);
        prop_assert!(s.im.abs() <= 1e-7 * scale.max(1.0));
    }

    // ---- inertia ----

    #[test]
    fn congruence_is_exact_and_sylvester_holds(g in generated(7), t in rational_vec(49)) {
        let h = build_hermite_matrix(&g.poly).unwrap();
        let m = h.matrix();
        let n = m.dim();
        let c = congruence_diagonalize(m).unwrap();
        prop_assert!(c.verify(m));
        prop_assert!(!c.transform.determinant().is_zero());
        let inertia = c.inertia();
        prop_assert_eq!(inertia.rank(), m.rank());

        let tm = Matrix::from_fn(n, |i, j| t[i * 7 + j].clone());
        prop_assume!(!tm.determinant().is_zero());
        let moved = tm.transpose().mul(m).unwrap().mul(&tm).unwrap();
        prop_assert_eq!(inertia_of(&moved).unwrap(), inertia);

        let w = negative_witness(m).unwrap();
        prop_assert_eq!(w.is_some(), !is_psd(m).unwrap());
        if let Some(x) = w {
            prop_assert!(m.quadratic_form(x.components()).unwrap().is_negative());
        }
    }

    // ---- the decision procedure ----

    #[test]
    fn verdict_matches_oracle(g in generated(10)) {
        let cert = certify(&g.poly, false).unwrap();
        let oracle = oracle_is_real_rooted(&g.poly).unwrap();
        prop_assert_eq!(cert.verdict == Verdict::RealRooted, oracle);
        prop_assert_eq!(oracle, g.is_real_rooted());
        prop_assert_eq!(cert.counts.distinct_roots, squarefree_part(&g.poly).unwrap().degree().unwrap());
        prop_assert_eq!(cert.counts.distinct_real_roots, sturm_count_all(&g.poly).unwrap());
        prop_assert_eq!(cert.counts.distinct_real_roots, g.distinct_real_roots());
        prop_assert!(verify_certificate(&cert, &g.poly).is_ok());
    }

    #[test]
    fn verdict_is_scale_invariant(g in generated(8), c in scale()) {
        let a = certify(&g.poly, false).unwrap();
        let b = certify(&g.poly.scale(&c), false).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.inertia, b.inertia);
        prop_assert_eq!(a.counts, b.counts);
    }

    // ---- interpolation witness ----

    #[test]
    fn lemma2_witness_is_negative(g in not_real_rooted(12)) {
        let w = lemma2_witness(&g.poly).unwrap();
        prop_assert!(w.exact_q.is_negative());
        prop_assert!(w.relative_error() <= 1e-5);
        prop_assert!(w.realness_ratio() <= 1e-7, "imag {} max {}", w.coefficient_imag_max, w.coefficient_abs_max);
        prop_assert!(w.conjugate_defect <= 1e-7);
        prop_assert!(w.interpolant.len() <= w.r);
        prop_assert_eq!(w.x.len(), g.degree());
        let exact_x = w.exact_x().unwrap();
        prop_assert_eq!(exact_x.len(), g.degree());

        let h = build_hermite_matrix(&g.poly).unwrap();
        let cw = negative_witness(h.matrix()).unwrap().unwrap();
        prop_assert!(quadratic_form(&h, &cw).unwrap().is_negative());
    }
}

#[test]
fn real_rooted_forms_are_nonnegative_on_many_vectors() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let fs = [
        Poly::from_ints(&[-6, 11, -6, 1]),
        Poly::from_ints(&[0, 0, 1]),
        GeneratedPoly::from_factors(
            &[
                (Factor::Linear(-2), 2),
                (Factor::Linear(0), 1),
                (Factor::Linear(3), 3),
            ],
            int(5),
        )
        .poly,
    ];
    for f in &fs {
        let h = build_hermite_matrix(f).unwrap();
        for _ in 0..1000 {
            let x: Vec<Rational> = (0..h.dim())
                .map(|_| ratio(rng.gen_range(-50..=50), rng.gen_range(1..=9)))
                .collect();
            assert!(!quadratic_form(&h, &RealVector::new(x))
                .unwrap()
                .is_negative());
        }
    }
}

#[test]
fn rationalized_floats_are_exact() {
    let x = [0.1f64, -1.0 / 3.0, 2.5e-8];
    for v in x {
        assert_eq!(to_f64(&from_f64_exact(v).unwrap()), v);
    }
}
