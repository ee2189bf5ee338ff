//! Exact nonnegativity of a univariate rational polynomial over the whole
//! real line or over the halfline x >= 0, with a rational witness point when
//! the answer is no.
//!
//! Method: the sign of p is constant on each open interval between
//! consecutive real roots, so it suffices to evaluate p at one rational
//! sample inside every such interval (clipped to the domain), plus the
//! domain boundary. Samples are produced exactly: the Cauchy bound caps the
//! unbounded ends, and isolating intervals of adjacent roots are refined
//! until a rational strictly between them exists.

use super::algebraic::{isolate_roots, AlgebraicNumber};
use super::rational::{rat_i, Rational};
use super::sturm::{cauchy_root_bound, RealBound};
use super::unipoly::UniPoly;
use num_traits::Signed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonnegDomain {
    /// All of R.
    AllReals,
    /// The halfline x >= 0.
    Halfline,
}

#[derive(Clone, Debug, PartialEq)]
pub enum NonnegResult {
    /// p(x) >= 0 everywhere on the domain.
    Nonneg,
    /// p(point) = value < 0, exactly.
    Negative { point: Rational, value: Rational },
}

impl NonnegResult {
    pub fn is_nonneg(&self) -> bool {
        matches!(self, NonnegResult::Nonneg)
    }
}

/// Decide whether `p >= 0` on `domain`, exactly.
pub fn univariate_nonneg(p: &UniPoly, domain: NonnegDomain) -> NonnegResult {
    if p.is_zero() {
        return NonnegResult::Nonneg;
    }
    let mut samples: Vec<Rational> = Vec::new();

    // Roots inside the (open side of the) domain, ascending. Sign is
    // constant between consecutive ones.
    let mut roots: Vec<AlgebraicNumber> = match domain {
        NonnegDomain::AllReals => isolate_roots(p, &RealBound::NegInf, &RealBound::PosInf),
        NonnegDomain::Halfline => isolate_roots(
            p,
            &RealBound::Finite(rat_i(0)),
            &RealBound::PosInf,
        ),
    };

    let bound = if p.degree().unwrap_or(0) == 0 {
        rat_i(1)
    } else {
        cauchy_root_bound(p)
    };
    match domain {
        NonnegDomain::AllReals => {
            // -bound and +bound lie strictly outside all roots, so they
            // sample the two unbounded sign regions.
            samples.push(-bound.clone());
            samples.push(bound);
        }
        NonnegDomain::Halfline => {
            // Boundary point, plus a sample beyond the largest root. Treat 0
            // as a virtual root so the region between 0 and the first
            // positive root also receives a sample (0 itself may be a root).
            samples.push(rat_i(0));
            samples.push(bound);
            roots.insert(0, AlgebraicNumber::from_rational(&rat_i(0)));
        }
    }
    for i in 0..roots.len().saturating_sub(1) {
        let (a, b) = roots.split_at_mut(i + 1);
        samples.push(separator(&mut a[i], &mut b[0]));
    }

    for x in samples {
        let v = p.eval(&x);
        if v.is_negative() {
            return NonnegResult::Negative { point: x, value: v };
        }
    }
    NonnegResult::Nonneg
}

/// A rational strictly between two distinct algebraic numbers a < b.
fn separator(a: &mut AlgebraicNumber, b: &mut AlgebraicNumber) -> Rational {
    loop {
        let (ahi, blo) = {
            let (_, ahi) = a.interval();
            let (blo, _) = b.interval();
            (ahi.clone(), blo.clone())
        };
        if ahi < blo {
            return (ahi + blo) / rat_i(2);
        }
        a.refine_step();
        b.refine_step();
    }
}
