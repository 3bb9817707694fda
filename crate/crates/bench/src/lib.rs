//! Fixed inputs for the benchmarks.

use hermite_core::corpus::{Factor, GeneratedPoly};
use hermite_core::rational::int;
use hermite_core::Poly;

/// `prod_{k=1}^{n} (x - k)`, real-rooted with distinct roots.
pub fn real_rooted(n: usize) -> Poly {
    (1..=n as i64).fold(Poly::one(), |acc, k| &acc * &Poly::from_ints(&[-k, 1]))
}

/// `(x^2 + 1) * prod_{k=1}^{n-2} (x - k)`.
pub fn one_complex_pair(n: usize) -> Poly {
    let mut factors = vec![(Factor::Quadratic { b: 0, c: 1 }, 1)];
    factors.extend((1..=n.saturating_sub(2) as i64).map(|k| (Factor::Linear(k), 1)));
    GeneratedPoly::from_factors(&factors, int(1)).poly
}
