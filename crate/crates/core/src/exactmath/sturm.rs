//! Sturm sequences and exact real-root counting on intervals.

use super::rational::{rat_i, sign, Rational};
use super::unipoly::UniPoly;
use num_traits::{Signed, Zero};

/// An interval endpoint: finite rational or a signed infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum RealBound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl RealBound {
    pub fn finite(r: Rational) -> Self {
        RealBound::Finite(r)
    }
}

/// A bound `M > 0` with every real root of `p` inside `(-M, M)`:
/// the Cauchy bound `1 + max |c_i| / |c_lead|`.
pub fn cauchy_root_bound(p: &UniPoly) -> Rational {
    let Some(lead) = p.leading() else {
        return rat_i(1);
    };
    let mut m = Rational::zero();
    let coeffs = p.coeffs();
    for c in &coeffs[..coeffs.len() - 1] {
        let q = (c / lead).abs();
        if q > m {
            m = q;
        }
    }
    m + rat_i(1)
}

/// Sturm chain of `p`: p, p', then negated remainders down to a constant.
fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(r.neg());
    }
}

/// Sign variations of the chain at a point (or at a signed infinity, where
/// the sign of `q` is that of its leading term's limit). Zeros are skipped.
fn variations_at(chain: &[UniPoly], x: &RealBound) -> usize {
    let mut count = 0;
    let mut last = 0;
    for q in chain {
        let s = match x {
            RealBound::Finite(v) => sign(&q.eval(v)),
            RealBound::PosInf => q.leading().map_or(0, sign),
            RealBound::NegInf => match q.degree() {
                None => 0,
                Some(d) => {
                    let s = q.leading().map(sign).unwrap();
                    if d % 2 == 0 {
                        s
                    } else {
                        -s
                    }
                }
            },
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of **distinct** real roots of `p` in the half-open interval
/// `(lo, hi]` (the upper endpoint counts when it is a root, the lower never
/// does). Multiplicities are ignored: the count is taken on the squarefree
/// part, for which the classical Sturm theorem applies directly.
pub fn sturm_root_count(p: &UniPoly, lo: &RealBound, hi: &RealBound) -> usize {
    if p.is_zero() {
        panic!("root count of the zero polynomial is undefined");
    }
    if p.degree() == Some(0) {
        return 0;
    }
    if let (RealBound::Finite(a), RealBound::Finite(b)) = (lo, hi) {
        if a >= b {
            return 0;
        }
    }
    let sf = p.squarefree_part();
    let chain = sturm_chain(&sf);
    let va = variations_at(&chain, lo);
    let vb = variations_at(&chain, hi);
    debug_assert!(va >= vb, "sturm variation count must be monotone");
    va - vb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;

    fn fin(n: i64, d: i64) -> RealBound {
        RealBound::Finite(rat(n, d))
    }

    #[test]
    fn counts_roots_of_simple_polys() {
        let p = UniPoly::from_i64(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(sturm_root_count(&p, &fin(0, 1), &fin(2, 1)), 1);
        assert_eq!(
            sturm_root_count(&p, &RealBound::NegInf, &RealBound::PosInf),
            2
        );
        assert_eq!(sturm_root_count(&p, &fin(2, 1), &fin(3, 1)), 0);
        // x^2 + 1: no real roots anywhere
        let q = UniPoly::from_i64(&[1, 0, 1]);
        assert_eq!(
            sturm_root_count(&q, &RealBound::NegInf, &RealBound::PosInf),
            0
        );
    }

    #[test]
    fn half_open_convention() {
        let p = UniPoly::from_i64(&[0, 1]); // x, root at 0
        assert_eq!(sturm_root_count(&p, &fin(-1, 1), &fin(0, 1)), 1); // (−1,0] has it
        assert_eq!(sturm_root_count(&p, &fin(0, 1), &fin(1, 1)), 0); // (0,1] does not
    }

    #[test]
    fn multiple_roots_counted_once() {
        // (x-1)^2 (x+3)
        let p = UniPoly::from_i64(&[-1, 1])
            .mul(&UniPoly::from_i64(&[-1, 1]))
            .mul(&UniPoly::from_i64(&[3, 1]));
        assert_eq!(
            sturm_root_count(&p, &RealBound::NegInf, &RealBound::PosInf),
            2
        );
        assert_eq!(sturm_root_count(&p, &fin(0, 1), &fin(2, 1)), 1);
    }

    #[test]
    fn frontier_inversion_quartics() {
        // one root in (-3, -1/2): equality parameter for a=2, c=4
        let p = UniPoly::from_i64(&[-3, 1, 4, 3, 1]);
        assert_eq!(sturm_root_count(&p, &fin(-3, 1), &fin(-1, 2)), 1);
        // one root in (3, 4): equality parameter for a=-4, b=14
        let q = UniPoly::from_i64(&[8, 16, -16, 0, 1]);
        assert_eq!(sturm_root_count(&q, &fin(3, 1), &fin(4, 1)), 1);
        assert_eq!(
            sturm_root_count(&q, &RealBound::NegInf, &RealBound::PosInf),
            4
        );
    }

    #[test]
    fn cauchy_bound_contains_roots() {
        let p = UniPoly::from_i64(&[8, 16, -16, 0, 1]);
        let m = cauchy_root_bound(&p);
        assert_eq!(
            sturm_root_count(
                &p,
                &RealBound::Finite(-m.clone()),
                &RealBound::Finite(m.clone())
            ),
            4
        );
        assert_eq!(m, rat(17, 1));
    }
}
