//! Real algebraic numbers: a squarefree integer defining polynomial plus an
//! isolating rational interval, with exact refinement, comparison and sign
//! evaluation.

use super::rational::{rat, rat_i, sign, Rational};
use super::sturm::{cauchy_root_bound, sturm_root_count, RealBound};
use super::unipoly::UniPoly;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// A real algebraic number.
///
/// Invariants, maintained by every constructor and operation:
/// * `defining` has integer coefficients, is squarefree and primitive with
///   positive leading coefficient;
/// * `defining` has exactly one real root in the closed interval
///   `[lo, hi]`;
/// * either `lo == hi` (the root is the rational `lo` itself), or
///   `defining(lo) != 0` and `defining(hi) != 0`, so the root is interior
///   and repeated bisection refines toward it.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicNumber {
    defining: UniPoly,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicNumber {
    /// Wrap an exact rational as a degenerate algebraic number.
    pub fn from_rational(r: &Rational) -> Self {
        // q x - p, primitive with positive leading coefficient
        let defining =
            UniPoly::new(vec![-r.clone(), Rational::from_integer(1.into())]).integer_primitive();
        AlgebraicNumber {
            defining,
            lo: r.clone(),
            hi: r.clone(),
        }
    }

    /// Construct from a polynomial and an interval known to contain exactly
    /// one of its roots in `(lo, hi]`. The polynomial is replaced by its
    /// squarefree integer-primitive form and the interval is normalized so
    /// the invariants above hold. Panics if the root count is not one.
    pub fn from_isolating(p: &UniPoly, lo: Rational, hi: Rational) -> Self {
        let defining = p.squarefree_part().integer_primitive();
        let n = sturm_root_count(
            &defining,
            &RealBound::Finite(lo.clone()),
            &RealBound::Finite(hi.clone()),
        );
        assert_eq!(n, 1, "interval must isolate exactly one root");
        let mut x = AlgebraicNumber { defining, lo, hi };
        x.normalize_endpoints();
        x
    }

    /// Restore the endpoint invariant: collapse to the exact root when an
    /// endpoint hits it, and push `lo` off any *other* root of `defining`.
    fn normalize_endpoints(&mut self) {
        if self.lo == self.hi {
            debug_assert!(self.defining.eval(&self.lo).is_zero());
            return;
        }
        if self.defining.eval(&self.hi).is_zero() {
            // the unique root in (lo, hi] is hi itself
            self.lo = self.hi.clone();
            return;
        }
        // lo may be a different root of `defining` (never the target: the
        // half-open count excludes it). Bisect until it is not.
        while self.defining.eval(&self.lo).is_zero() {
            let mid = (&self.lo + &self.hi) / rat_i(2);
            if sturm_root_count(
                &self.defining,
                &RealBound::Finite(mid.clone()),
                &RealBound::Finite(self.hi.clone()),
            ) == 1
            {
                self.lo = mid;
            } else if self.defining.eval(&mid).is_zero() {
                self.lo = mid.clone();
                self.hi = mid;
                return;
            } else {
                self.hi = mid;
            }
        }
    }

    pub fn defining(&self) -> &UniPoly {
        &self.defining
    }

    /// Current enclosing interval (root in `[lo, hi]`).
    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn is_exact_rational(&self) -> bool {
        self.lo == self.hi
    }

    /// Halve the enclosing interval (no-op once degenerate).
    pub fn refine_step(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) / rat_i(2);
        if sturm_root_count(
            &self.defining,
            &RealBound::Finite(mid.clone()),
            &RealBound::Finite(self.hi.clone()),
        ) == 1
        {
            // root in (mid, hi]; mid cannot be a root (there is only one in
            // the whole interval), so the invariant survives
            self.lo = mid;
        } else if self.defining.eval(&mid).is_zero() {
            self.lo = mid.clone();
            self.hi = mid;
        } else {
            self.hi = mid;
        }
    }

    /// A copy refined until `hi - lo <= eps`.
    pub fn refined(&self, eps: &Rational) -> Self {
        assert!(eps.is_positive(), "eps must be positive");
        let mut x = self.clone();
        while &x.hi - &x.lo > *eps {
            x.refine_step();
        }
        x
    }

    /// Rational approximation within `eps` of the root (interval midpoint
    /// after refinement; exact for degenerate intervals).
    pub fn approx(&self, eps: &Rational) -> Rational {
        let x = self.refined(eps);
        (&x.lo + &x.hi) / rat_i(2)
    }

    /// Exact rational value if this number is rational **and** we can see it:
    /// always succeeds for degenerate intervals and linear defining
    /// polynomials, and opportunistically via bounded rational-root search.
    pub fn rational_value(&self) -> Option<Rational> {
        if self.lo == self.hi {
            return Some(self.lo.clone());
        }
        if self.defining.degree() == Some(1) {
            return Some(-self.defining.coeff(0) / self.defining.coeff(1));
        }
        for r in self.defining.rational_roots_bounded() {
            if self.lo < r && r <= self.hi {
                return Some(r);
            }
        }
        None
    }

    /// Compare against a rational, exactly.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if self.lo == self.hi {
            return self.lo.cmp(r);
        }
        if self.defining.eval(r).is_zero() && &self.lo < r && r <= &self.hi {
            return Ordering::Equal;
        }
        let mut x = self.clone();
        loop {
            if r <= &x.lo {
                return Ordering::Greater; // root > lo >= r
            }
            if r > &x.hi {
                return Ordering::Less;
            }
            x.refine_step();
        }
    }

    /// Compare two algebraic numbers, exactly.
    pub fn cmp_algebraic(&self, other: &AlgebraicNumber) -> Ordering {
        if self.lo == self.hi {
            return other.cmp_rational(&self.lo).reverse();
        }
        if other.lo == other.hi {
            return self.cmp_rational(&other.lo);
        }
        // Equality test: a shared root in the overlap would be the unique
        // root of either polynomial there, hence equal to both numbers.
        let g = self.defining.gcd(&other.defining);
        if g.degree().unwrap_or(0) >= 1 {
            let lo = if self.lo >= other.lo { &self.lo } else { &other.lo };
            let hi = if self.hi <= other.hi { &self.hi } else { &other.hi };
            if lo < hi
                && sturm_root_count(
                    &g,
                    &RealBound::Finite(lo.clone()),
                    &RealBound::Finite(hi.clone()),
                ) >= 1
            {
                return Ordering::Equal;
            }
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi <= b.lo {
                return Ordering::Less; // root_a <= a.hi <= b.lo < root_b
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            a.refine_step();
            b.refine_step();
        }
    }

    /// Exact sign of `g` evaluated at this number: -1, 0 or 1.
    pub fn sign_of_poly_at(&self, g: &UniPoly) -> i32 {
        if g.is_zero() {
            return 0;
        }
        if self.lo == self.hi {
            return sign(&g.eval(&self.lo));
        }
        // zero test: g vanishes at the root iff gcd(defining, g) does
        let h = self.defining.gcd(g);
        if h.degree().unwrap_or(0) >= 1
            && sturm_root_count(
                &h,
                &RealBound::Finite(self.lo.clone()),
                &RealBound::Finite(self.hi.clone()),
            ) >= 1
        {
            return 0;
        }
        let mut x = self.clone();
        loop {
            let (vlo, vhi) = g.eval_interval(&x.lo, &x.hi);
            if vlo.is_positive() {
                return 1;
            }
            if vhi.is_negative() {
                return -1;
            }
            x.refine_step();
        }
    }

    /// Closest f64 (refines to ~1e-17 relative first).
    pub fn to_f64(&self) -> f64 {
        let scale = self.hi.abs().max(self.lo.abs()) + rat_i(1);
        let eps = rat(1, 1_000_000_000_000_000_000) * scale;
        super::rational::rat_to_f64(&self.approx(&eps))
    }
}

/// Isolate all real roots of `p` in `(lo, hi]`, returned ascending. Infinite
/// bounds are replaced by the Cauchy bound, outside which `p` has no roots.
pub fn isolate_roots(p: &UniPoly, lo: &RealBound, hi: &RealBound) -> Vec<AlgebraicNumber> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    let sf = p.squarefree_part().integer_primitive();
    if sf.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let m = cauchy_root_bound(&sf);
    let lo = match lo {
        RealBound::Finite(v) => v.clone(),
        RealBound::NegInf => -m.clone(),
        RealBound::PosInf => return vec![],
    };
    let hi = match hi {
        RealBound::Finite(v) => v.clone(),
        RealBound::PosInf => m,
        RealBound::NegInf => return vec![],
    };
    let mut out = vec![];
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        if a >= b {
            continue;
        }
        match sturm_root_count(
            &sf,
            &RealBound::Finite(a.clone()),
            &RealBound::Finite(b.clone()),
        ) {
            0 => {}
            1 => out.push(AlgebraicNumber::from_isolating(&sf, a, b)),
            _ => {
                let mid = (&a + &b) / rat_i(2);
                // push upper first so the stack pops ascending
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    out.sort_by(|x, y| x.cmp_algebraic(y));
    out
}

/// An exact real scalar: rational when we know it, algebraic otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactReal {
    Rational(Rational),
    Algebraic(AlgebraicNumber),
}

impl ExactReal {
    /// Wrap an algebraic number, demoting to `Rational` when its exact
    /// rational value is visible.
    pub fn from_algebraic(x: AlgebraicNumber) -> Self {
        match x.rational_value() {
            Some(r) => ExactReal::Rational(r),
            None => ExactReal::Algebraic(x),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExactReal::Rational(r) => Some(r),
            ExactReal::Algebraic(_) => None,
        }
    }

    pub fn approx(&self, eps: &Rational) -> Rational {
        match self {
            ExactReal::Rational(r) => r.clone(),
            ExactReal::Algebraic(x) => x.approx(eps),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactReal::Rational(r) => super::rational::rat_to_f64(r),
            ExactReal::Algebraic(x) => x.to_f64(),
        }
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        match self {
            ExactReal::Rational(v) => v.cmp(r),
            ExactReal::Algebraic(x) => x.cmp_rational(r),
        }
    }

    pub fn cmp_exact(&self, other: &ExactReal) -> Ordering {
        match (self, other) {
            (ExactReal::Rational(a), ExactReal::Rational(b)) => a.cmp(b),
            (ExactReal::Rational(a), ExactReal::Algebraic(b)) => b.cmp_rational(a).reverse(),
            (ExactReal::Algebraic(a), ExactReal::Rational(b)) => a.cmp_rational(b),
            (ExactReal::Algebraic(a), ExactReal::Algebraic(b)) => a.cmp_algebraic(b),
        }
    }

    /// Enclosing rational interval (degenerate for rationals).
    pub fn interval(&self) -> (Rational, Rational) {
        match self {
            ExactReal::Rational(r) => (r.clone(), r.clone()),
            ExactReal::Algebraic(x) => {
                let (lo, hi) = x.interval();
                (lo.clone(), hi.clone())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;

    #[test]
    fn isolates_sqrt2() {
        let p = UniPoly::from_i64(&[-2, 0, 1]);
        let roots = isolate_roots(&p, &RealBound::NegInf, &RealBound::PosInf);
        assert_eq!(roots.len(), 2);
        let r = roots[1].approx(&rat(1, 1_000_000_000_000));
        let err = (r - rat(1_414_213_562_373, 1_000_000_000_000)).abs();
        assert!(err < rat(1, 100_000_000_000));
        assert_eq!(roots[1].cmp_rational(&rat(3, 2)), Ordering::Less);
        assert_eq!(roots[1].cmp_rational(&rat(7, 5)), Ordering::Greater);
        assert_eq!(roots[0].cmp_algebraic(&roots[1]), Ordering::Less);
    }

    #[test]
    fn window_restriction() {
        let p = UniPoly::from_i64(&[-2, 0, 1]);
        let roots = isolate_roots(
            &p,
            &RealBound::Finite(rat_i(0)),
            &RealBound::Finite(rat_i(2)),
        );
        assert_eq!(roots.len(), 1);
        // x^2+1: nothing
        assert!(isolate_roots(
            &UniPoly::from_i64(&[1, 0, 1]),
            &RealBound::NegInf,
            &RealBound::PosInf
        )
        .is_empty());
    }

    #[test]
    fn exact_rational_roots_collapse() {
        // 3x - 1: refinement should find 1/3 exactly
        let p = UniPoly::from_i64(&[-1, 3]);
        let roots = isolate_roots(&p, &RealBound::NegInf, &RealBound::PosInf);
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].rational_value(), Some(rat(1, 3)));
        assert_eq!(roots[0].approx(&rat(1, 1_000_000)), rat(1, 3));
        // (x-1)(x^2-2): the rational root is recoverable by bounded search
        let q = UniPoly::from_i64(&[-1, 1]).mul(&UniPoly::from_i64(&[-2, 0, 1]));
        let roots = isolate_roots(&q, &RealBound::Finite(rat(1, 2)), &RealBound::Finite(rat(6, 5)));
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].rational_value(), Some(rat_i(1)));
    }

    #[test]
    fn repeated_refinement_nests() {
        let p = UniPoly::from_i64(&[-3, 1, 4, 3, 1]);
        let roots = isolate_roots(
            &p,
            &RealBound::Finite(rat_i(-3)),
            &RealBound::Finite(rat(-1, 2)),
        );
        assert_eq!(roots.len(), 1);
        let mut x = roots[0].clone();
        let (mut plo, mut phi) = {
            let (l, h) = x.interval();
            (l.clone(), h.clone())
        };
        for _ in 0..40 {
            x.refine_step();
            let (l, h) = x.interval();
            assert!(*l >= plo && *h <= phi, "refinement must nest");
            plo = l.clone();
            phi = h.clone();
        }
        // golden-ratio-negative root of the a=2, c=4 inversion quartic
        let approx = x.approx(&rat(1, 10_000_000_000));
        let target = rat(-16_180_339_887, 10_000_000_000);
        assert!((approx - target).abs() < rat(1, 1_000_000_000));
    }

    #[test]
    fn equality_via_common_roots() {
        // sqrt(2) described by two different polynomials
        let a = isolate_roots(
            &UniPoly::from_i64(&[-2, 0, 1]),
            &RealBound::Finite(rat_i(0)),
            &RealBound::Finite(rat_i(2)),
        )
        .remove(0);
        let b = isolate_roots(
            &UniPoly::from_i64(&[-2, 0, 1]).mul(&UniPoly::from_i64(&[-3, 1])),
            &RealBound::Finite(rat_i(1)),
            &RealBound::Finite(rat(5, 2)),
        )
        .remove(0);
        assert_eq!(a.cmp_algebraic(&b), Ordering::Equal);
        // and sign evaluation distinguishes polynomials vanishing there
        assert_eq!(a.sign_of_poly_at(&UniPoly::from_i64(&[-2, 0, 1])), 0);
        assert_eq!(a.sign_of_poly_at(&UniPoly::from_i64(&[-1, 1])), 1); // x-1 > 0
        assert_eq!(a.sign_of_poly_at(&UniPoly::from_i64(&[-2, 1])), -1); // x-2 < 0
    }

    #[test]
    fn exact_real_normalizes() {
        let alg = AlgebraicNumber::from_rational(&rat(7, 3));
        match ExactReal::from_algebraic(alg) {
            ExactReal::Rational(r) => assert_eq!(r, rat(7, 3)),
            ExactReal::Algebraic(_) => panic!("should demote to rational"),
        }
    }
}
