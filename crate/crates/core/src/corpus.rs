//! Random polynomials with known factorizations.
//!
//! Each polynomial is a product of integer-root linear factors and monic
//! quadratics `x^2 + b x + c` with `b^2 < 4c` (a conjugate pair of non-real
//! roots), raised to small multiplicities and scaled by a random nonzero
//! rational. The root multiset is therefore known exactly.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::Poly;
use crate::rational::{int, ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `x - root`
    Linear(i64),
    /// `x^2 + b x + c` with `b^2 < 4c`
    Quadratic { b: i64, c: i64 },
}

impl Factor {
    pub fn poly(&self) -> Poly {
        match *self {
            Factor::Linear(a) => Poly::from_ints(&[-a, 1]),
            Factor::Quadratic { b, c } => Poly::from_ints(&[c, b, 1]),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Factor::Linear(_) => 1,
            Factor::Quadratic { .. } => 2,
        }
    }

    pub fn roots(&self) -> Vec<Complex64> {
        match *self {
            Factor::Linear(a) => vec![Complex64::new(a as f64, 0.0)],
            Factor::Quadratic { b, c } => {
                let re = -(b as f64) / 2.0;
                let im = ((4 * c - b * b) as f64).sqrt() / 2.0;
                vec![Complex64::new(re, im), Complex64::new(re, -im)]
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratedPoly {
    pub poly: Poly,
    /// Distinct factors with multiplicities.
    pub factors: Vec<(Factor, u32)>,
    pub scale: Rational,
}

impl GeneratedPoly {
    pub fn from_factors(factors: &[(Factor, u32)], scale: Rational) -> Self {
        let mut merged: Vec<(Factor, u32)> = Vec::new();
        for &(fac, mu) in factors {
            match merged.iter_mut().find(|(g, _)| *g == fac) {
                Some((_, m)) => *m += mu,
                None => merged.push((fac, mu)),
            }
        }
        let poly = merged
            .iter()
            .fold(Poly::constant(scale.clone()), |acc, (fac, mu)| {
                &acc * &fac.poly().pow(*mu)
            });
        GeneratedPoly {
            poly,
            factors: merged,
            scale,
        }
    }

    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, mu)| f.degree() * *mu as usize)
            .sum()
    }

    /// Distinct roots with multiplicity, in floating point.
    pub fn roots(&self) -> Vec<(Complex64, u32)> {
        self.factors
            .iter()
            .flat_map(|&(f, mu)| f.roots().into_iter().map(move |z| (z, mu)))
            .collect()
    }

    /// Integer roots with multiplicity, when every factor is linear.
    pub fn integer_roots(&self) -> Option<Vec<(i64, u32)>> {
        self.factors
            .iter()
            .map(|&(f, mu)| match f {
                Factor::Linear(a) => Some((a, mu)),
                Factor::Quadratic { .. } => None,
            })
            .collect()
    }

    pub fn is_real_rooted(&self) -> bool {
        self.integer_roots().is_some()
    }

    pub fn distinct_roots(&self) -> usize {
        self.factors.iter().map(|(f, _)| f.degree()).sum()
    }

    pub fn distinct_real_roots(&self) -> usize {
        self.factors
            .iter()
            .filter(|(f, _)| matches!(f, Factor::Linear(_)))
            .count()
    }

    pub fn has_repeated_factor(&self) -> bool {
        self.factors.iter().any(|&(_, mu)| mu > 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusConfig {
    pub cases: usize,
    pub degree_max: usize,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            cases: 500,
            degree_max: 10,
            seed: 42,
        }
    }
}

/// Cycles through three families: real-rooted, containing a non-real pair,
/// and containing a repeated factor.
pub fn generate(config: &CorpusConfig) -> Vec<GeneratedPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let degree_max = config.degree_max.max(1);
    (0..config.cases)
        .map(|i| {
            let degree = rng.gen_range(1..=degree_max);
            let family = i % 3;
            generate_one(&mut rng, degree, family)
        })
        .collect()
}

fn random_linear(rng: &mut impl Rng) -> Factor {
    Factor::Linear(rng.gen_range(-4..=4))
}

fn random_quadratic(rng: &mut impl Rng) -> Factor {
    let b: i64 = rng.gen_range(-3..=3);
    // smallest c with b^2 < 4c
    let c_min = (b * b) / 4 + 1;
    let c = rng.gen_range(c_min..=c_min + 4);
    Factor::Quadratic { b, c }
}

fn generate_one(rng: &mut impl Rng, degree: usize, family: usize) -> GeneratedPoly {
    let mut factors: Vec<(Factor, u32)> = Vec::new();
    let mut remaining = degree;

    match family {
        1 if degree >= 2 => {
            let q = random_quadratic(rng);
            factors.push((q, 1));
            remaining -= 2;
        }
        2 if degree >= 2 => {
            let fac = if degree >= 4 && rng.gen_bool(0.5) {
                random_quadratic(rng)
            } else {
                random_linear(rng)
            };
            factors.push((fac, 2));
            remaining -= 2 * fac.degree();
        }
        _ => {}
    }

    let allow_quadratic = family != 0;
    while remaining > 0 {
        let fac = if allow_quadratic && remaining >= 2 && rng.gen_bool(0.3) {
            random_quadratic(rng)
        } else {
            random_linear(rng)
        };
        let max_mu = (remaining / fac.degree()).min(3) as u32;
        let mu = if rng.gen_bool(0.75) {
            1
        } else {
            rng.gen_range(1..=max_mu)
        };
        remaining -= fac.degree() * mu as usize;
        factors.push((fac, mu));
    }

    let num: i64 = rng.gen_range(1..=6) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let den: i64 = rng.gen_range(1..=4);
    let scale = if rng.gen_bool(0.5) {
        int(1)
    } else {
        ratio(num, den)
    };
    GeneratedPoly::from_factors(&factors, scale)
}
