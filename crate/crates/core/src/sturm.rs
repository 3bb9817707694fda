//! Sturm sequences, used as an independent check on real-rootedness.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{squarefree_part, Poly};
use crate::rational::{sign, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    pub polys: Vec<Poly>,
}

impl SturmChain {
    /// `g, g', -rem(g, g'), ...` down to a nonzero constant, for squarefree `g`.
    pub fn new(g: &Poly) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut polys = vec![g.clone(), g.derivative()];
        loop {
            let len = polys.len();
            if polys[len - 1].is_zero() {
                polys.pop();
                break;
            }
            let r = polys[len - 2].rem(&polys[len - 1])?;
            if r.is_zero() {
                break;
            }
            polys.push(-r);
        }
        Ok(SturmChain { polys })
    }

    /// Sign changes at `+inf` (`positive = true`) or `-inf`.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        let signs: Vec<i8> = self
            .polys
            .iter()
            .map(|p| {
                let lead = p.leading().map(sign).unwrap_or(0);
                let odd = p.degree().unwrap_or(0) % 2 == 1;
                if !positive && odd {
                    -lead
                } else {
                    lead
                }
            })
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

/// Number of distinct real roots of `f`.
pub fn sturm_count_all(f: &Poly) -> Result<usize> {
    let g = squarefree_part(f)?;
    let chain = SturmChain::new(&g)?;
    Ok(chain.variations_at_infinity(false) - chain.variations_at_infinity(true))
}

pub fn oracle_is_real_rooted(f: &Poly) -> Result<bool> {
    let g = squarefree_part(f)?;
    Ok(sturm_count_all(f)? == g.degree().unwrap_or(0))
}

/// Distinct roots in `(a, b]`, provided neither endpoint is a root.
pub fn sturm_count_interval(chain: &SturmChain, a: &Rational, b: &Rational) -> usize {
    let var = |t: &Rational| {
        let s: Vec<bool> = chain
            .polys
            .iter()
            .map(|p| p.eval(t))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        s.windows(2).filter(|w| w[0] != w[1]).count()
    };
    var(a) - var(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn count_examples() {
        assert_eq!(sturm_count_all(&p(&[-1, 0, 1])).unwrap(), 2);
        assert_eq!(sturm_count_all(&p(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(sturm_count_all(&p(&[-1, 1, -1, 1])).unwrap(), 1);
        assert_eq!(sturm_count_all(&p(&[0, 0, 1])).unwrap(), 1);
        assert!(sturm_count_all(&p(&[2])).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert!(oracle_is_real_rooted(&p(&[-6, 11, -6, 1])).unwrap());
        assert!(oracle_is_real_rooted(&p(&[0, 0, 1])).unwrap());
        assert!(!oracle_is_real_rooted(&p(&[1, 0, 1]).pow(2)).unwrap());
        assert!(oracle_is_real_rooted(&p(&[3, -1])).unwrap());
    }

    #[test]
    fn chain_ends_in_constant() {
        let chain = SturmChain::new(&p(&[-6, 11, -6, 1])).unwrap();
        assert!(chain.polys.last().unwrap().is_constant());
        assert_eq!(sturm_count_interval(&chain, &int(0), &ratio(5, 2)), 2);
        assert_eq!(sturm_count_interval(&chain, &ratio(5, 2), &int(10)), 1);
    }
}
