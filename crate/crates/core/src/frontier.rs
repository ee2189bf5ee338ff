//! The coefficient frontier of the symmetric quartic family.
//!
//! For each fixed `a` there is a one-parameter rational curve
//!
//! ```text
//! c(t) = (2t^4 + 2(a+1)t^3 + (2a+4)t^2 + (3a+4)t - a) / (2t+1)
//! b(t) = (t^4 + (a+4)t^3 + (5a+4)t^2 + 4(a+1)t + 2a+2) / (-(2t+1))
//! ```
//!
//! along which the form `w4 + a w3 + b(t) w2 + c(t) w1` is nonnegative and
//! touches zero at `(t, 1, 1)`. Restricted to the parameter intervals
//! returned by [`case_intervals`], the curve traces the *sharp* boundary:
//! `c(t)` is monotone there (reals) and so is `b(t)` (nonnegative octant), so
//! inverting one coordinate of the curve yields the exact optimal threshold
//! for the other. [`bmin_real`] and [`cmin_nonneg`] implement the full
//! dispatch, falling back to closed forms in the coefficient regions where
//! the sharp bound is linear.

use crate::exactmath::{
    isolate_roots, rat, rat_i, resultant_eliminating_t, AlgebraicNumber, BiPoly, ExactReal,
    Rational, RealBound, UniPoly,
};
use crate::forms::Domain;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum FrontierError {
    /// t = -1/2 is the pole of both curve coordinates.
    PoleAtMinusHalf,
    /// No sharp-boundary parameter intervals exist for this `a` on the
    /// requested domain (a = -1/2 over the reals; a >= -1 over the octant).
    NoCaseIntervals,
    /// The requested target value lies outside the curve's range on the
    /// admissible intervals.
    OutOfRange,
}

impl fmt::Display for FrontierError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrontierError::PoleAtMinusHalf => {
                write!(f, "t = -1/2 is the pole of the frontier curve")
            }
            FrontierError::NoCaseIntervals => {
                write!(f, "no frontier parameter intervals exist for this coefficient a")
            }
            FrontierError::OutOfRange => {
                write!(f, "target value outside the frontier range")
            }
        }
    }
}

impl std::error::Error for FrontierError {}

/// Numerator of `c(t)` as a polynomial in t.
pub fn c_numerator(a: &Rational) -> UniPoly {
    UniPoly::new(vec![
        -a.clone(),
        rat_i(3) * a + rat_i(4),
        rat_i(2) * a + rat_i(4),
        rat_i(2) * a + rat_i(2),
        rat_i(2),
    ])
}

/// Numerator of `-b(t)·(2t+1)`, i.e. `b(t) = b_numerator / (-(2t+1))`.
pub fn b_numerator(a: &Rational) -> UniPoly {
    UniPoly::new(vec![
        rat_i(2) * a + rat_i(2),
        rat_i(4) * a + rat_i(4),
        rat_i(5) * a + rat_i(4),
        a + rat_i(4),
        rat_i(1),
    ])
}

fn two_t_plus_one(t: &Rational) -> Rational {
    rat_i(2) * t + rat_i(1)
}

/// `c(t)`, exact. Errors at the pole t = -1/2.
pub fn c_of_t(a: &Rational, t: &Rational) -> Result<Rational, FrontierError> {
    let d = two_t_plus_one(t);
    if d.is_zero() {
        return Err(FrontierError::PoleAtMinusHalf);
    }
    Ok(c_numerator(a).eval(t) / d)
}

/// `b(t)`, exact. Errors at the pole t = -1/2.
pub fn b_of_t(a: &Rational, t: &Rational) -> Result<Rational, FrontierError> {
    let d = two_t_plus_one(t);
    if d.is_zero() {
        return Err(FrontierError::PoleAtMinusHalf);
    }
    Ok(b_numerator(a).eval(t) / -d)
}

/// A parameter value with its derived scalars. `k` is `None` at t = 1, where
/// the mixed term it multiplies vanishes identically and no value is needed.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamPoint {
    pub t: Rational,
    pub bt: Rational,
    pub ct: Rational,
    pub p: Rational,
    pub q: Rational,
    pub k: Option<Rational>,
}

/// The scalars (p, q, k) completing the square identity at parameter t.
pub fn pqk(
    a: &Rational,
    t: &Rational,
) -> Result<(Rational, Rational, Option<Rational>), FrontierError> {
    let d = two_t_plus_one(t);
    if d.is_zero() {
        return Err(FrontierError::PoleAtMinusHalf);
    }
    let t2 = t * t;
    let p = -(&t2 + t + rat_i(1)) / &d;
    let q = (&t2 + rat_i(2) * t) / &d;
    let k = if *t == rat_i(1) {
        None
    } else {
        Some((rat_i(2) * &t2 + rat_i(2) * t * (a + rat_i(1)) + a + rat_i(2)) / (t - rat_i(1)))
    };
    Ok((p, q, k))
}

pub fn param_point(a: &Rational, t: &Rational) -> Result<ParamPoint, FrontierError> {
    let bt = b_of_t(a, t)?;
    let ct = c_of_t(a, t)?;
    let (p, q, k) = pqk(a, t)?;
    Ok(ParamPoint {
        t: t.clone(),
        bt,
        ct,
        p,
        q,
        k,
    })
}

/// The two parameter values where the curve's arcs meet: roots of
/// `2t^2 + 2at + (a+4)`, real exactly when `(a+2)(a-4) >= 0`.
#[derive(Clone, Debug)]
pub struct BranchPoints {
    pub t1: ExactReal,
    pub t2: ExactReal,
}

pub fn branch_points(a: &Rational) -> Option<BranchPoints> {
    let disc = (a + rat_i(2)) * (a - rat_i(4));
    if disc.is_negative() {
        return None;
    }
    if disc.is_zero() {
        let r = ExactReal::Rational(-a / rat_i(2));
        return Some(BranchPoints {
            t1: r.clone(),
            t2: r,
        });
    }
    let quad = UniPoly::new(vec![a + rat_i(4), rat_i(2) * a, rat_i(2)]);
    let mut roots = isolate_roots(&quad, &RealBound::NegInf, &RealBound::PosInf);
    assert_eq!(roots.len(), 2, "positive discriminant must give two roots");
    let t2 = ExactReal::from_algebraic(roots.pop().unwrap());
    let t1 = ExactReal::from_algebraic(roots.pop().unwrap());
    Some(BranchPoints { t1, t2 })
}

/// One admissible parameter interval, possibly with algebraic endpoints.
#[derive(Clone, Debug)]
pub struct CaseInterval {
    pub lo: ExactReal,
    pub hi: ExactReal,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

fn cmp_alg_exact(x: &AlgebraicNumber, e: &ExactReal) -> Ordering {
    match e {
        ExactReal::Rational(r) => x.cmp_rational(r),
        ExactReal::Algebraic(y) => x.cmp_algebraic(y),
    }
}

impl CaseInterval {
    fn closed(lo: ExactReal, hi: ExactReal) -> Self {
        CaseInterval {
            lo,
            hi,
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn contains_rational(&self, r: &Rational) -> bool {
        let lo_ok = match self.lo.cmp_rational(r) {
            Ordering::Less => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Greater => false,
        };
        let hi_ok = match self.hi.cmp_rational(r) {
            Ordering::Greater => true,
            Ordering::Equal => self.hi_closed,
            Ordering::Less => false,
        };
        lo_ok && hi_ok
    }

    pub fn contains_algebraic(&self, x: &AlgebraicNumber) -> bool {
        let lo_ok = match cmp_alg_exact(x, &self.lo) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Less => false,
        };
        let hi_ok = match cmp_alg_exact(x, &self.hi) {
            Ordering::Less => true,
            Ordering::Equal => self.hi_closed,
            Ordering::Greater => false,
        };
        lo_ok && hi_ok
    }
}

/// The admissible parameter intervals on which the curve traces the sharp
/// boundary for the given domain. Reals: defined for all a except -1/2.
/// Octant: defined for a < -1 (elsewhere the threshold is a closed form).
pub fn case_intervals(a: &Rational, domain: Domain) -> Result<Vec<CaseInterval>, FrontierError> {
    let half = rat(-1, 2);
    let minus_a_minus_1 = -a.clone() - rat_i(1);
    match domain {
        Domain::Reals => {
            if *a == half {
                return Err(FrontierError::NoCaseIntervals);
            }
            if *a > half && *a <= rat_i(4) {
                // t in [-a-1, -1/2)
                Ok(vec![CaseInterval {
                    lo: ExactReal::Rational(minus_a_minus_1),
                    hi: ExactReal::Rational(half),
                    lo_closed: true,
                    hi_closed: false,
                }])
            } else if *a >= rat_i(-2) && *a < half {
                // t in (-1/2, -a-1]
                Ok(vec![CaseInterval {
                    lo: ExactReal::Rational(half),
                    hi: ExactReal::Rational(minus_a_minus_1),
                    lo_closed: false,
                    hi_closed: true,
                }])
            } else if *a > rat_i(4) {
                // t in [-a-1, t1] union [t2, -1/2)
                let bp = branch_points(a).expect("discriminant positive for a > 4");
                Ok(vec![
                    CaseInterval::closed(ExactReal::Rational(minus_a_minus_1), bp.t1),
                    CaseInterval {
                        lo: bp.t2,
                        hi: ExactReal::Rational(half),
                        lo_closed: true,
                        hi_closed: false,
                    },
                ])
            } else {
                // a < -2: t in (-1/2, t1] union [-a-1, t2]
                let bp = branch_points(a).expect("discriminant positive for a < -2");
                Ok(vec![
                    CaseInterval {
                        lo: ExactReal::Rational(half),
                        hi: bp.t1,
                        lo_closed: false,
                        hi_closed: true,
                    },
                    CaseInterval::closed(ExactReal::Rational(minus_a_minus_1), bp.t2),
                ])
            }
        }
        Domain::NonnegOrthant => {
            if *a >= rat_i(-1) {
                return Err(FrontierError::NoCaseIntervals);
            }
            if *a >= rat_i(-2) {
                // t in [0, -a-1]
                Ok(vec![CaseInterval::closed(
                    ExactReal::Rational(rat_i(0)),
                    ExactReal::Rational(minus_a_minus_1),
                )])
            } else if *a > rat_i(-4) {
                // t in [0, t1] union [-a-1, t2]
                let bp = branch_points(a).expect("discriminant positive for a < -2");
                Ok(vec![
                    CaseInterval::closed(ExactReal::Rational(rat_i(0)), bp.t1),
                    CaseInterval::closed(ExactReal::Rational(minus_a_minus_1), bp.t2),
                ])
            } else {
                // a <= -4: t in [-a-1, t2]
                let bp = branch_points(a).expect("discriminant positive for a <= -4");
                Ok(vec![CaseInterval::closed(
                    ExactReal::Rational(minus_a_minus_1),
                    bp.t2,
                )])
            }
        }
    }
}

/// Shared inversion driver. The curve is `sign * numerator / (2t+1)`;
/// returns the smallest parameter in `intervals` where it equals `target`.
fn invert_curve(
    numerator: &UniPoly,
    sign: i64,
    target: &Rational,
    intervals: &[CaseInterval],
    special_candidates: &[Rational],
) -> Result<AlgebraicNumber, FrontierError> {
    let in_intervals_rat = |r: &Rational| intervals.iter().any(|iv| iv.contains_rational(r));

    // Exact rational candidates first: curve endpoints and the handful of
    // small parameter values that appear with closed-form coordinates.
    for cand in special_candidates {
        if two_t_plus_one(cand).is_zero() {
            continue;
        }
        let value = numerator.eval(cand) / (rat_i(sign) * two_t_plus_one(cand));
        if value == *target && in_intervals_rat(cand) {
            return Ok(AlgebraicNumber::from_rational(cand));
        }
    }

    // curve(t) = target  <=>  numerator(t) - sign*target*(2t+1) = 0, t != -1/2
    let linear = UniPoly::new(vec![target * rat_i(sign), target * rat_i(2 * sign)]);
    let f = numerator.sub(&linear);
    let sf = f.squarefree_part().integer_primitive();

    let rational_roots = sf.rational_roots_bounded();
    let mut inside: Vec<&Rational> = rational_roots.iter().filter(|r| in_intervals_rat(r)).collect();
    if !inside.is_empty() {
        inside.sort();
        return Ok(AlgebraicNumber::from_rational(inside[0]));
    }

    // All detected rational roots are outside the admissible intervals;
    // divide them out so the remaining defining polynomial is coprime to
    // the special linear factors (in particular t-1 and 2t+1), which later
    // certificate arithmetic must invert.
    let mut m = sf;
    for r in &rational_roots {
        m = m.exact_div(&UniPoly::new(vec![-r.clone(), rat_i(1)]));
    }
    if m.degree().unwrap_or(0) == 0 {
        return Err(FrontierError::OutOfRange);
    }

    let candidates = isolate_roots(&m, &RealBound::NegInf, &RealBound::PosInf);
    // ascending order: the first admissible root is the smallest, which is
    // the documented tie-break when two parameters share the target value
    for cand in candidates {
        if intervals.iter().any(|iv| iv.contains_algebraic(&cand)) {
            return Ok(cand);
        }
    }
    Err(FrontierError::OutOfRange)
}

/// The parameter t on the real-domain intervals with `c(t) = c`.
/// Requires a != -1/2 and c >= -a^2 - 2a.
pub fn invert_c(a: &Rational, c: &Rational) -> Result<AlgebraicNumber, FrontierError> {
    if *c < -(a * a) - rat_i(2) * a {
        return Err(FrontierError::OutOfRange);
    }
    let intervals = case_intervals(a, Domain::Reals)?;
    let special = [
        -a.clone() - rat_i(1),
        rat_i(0),
        rat_i(-1),
        rat_i(-2),
        rat_i(1),
    ];
    invert_curve(&c_numerator(a), 1, c, &intervals, &special)
}

/// The lowest b for which the edge restriction x^4 + a x^3 + b x^2 + a x + 1
/// stays nonnegative for x >= 0; below it no c can rescue the form.
pub fn min_feasible_b(a: &Rational) -> Rational {
    if *a >= rat_i(-4) {
        rat_i(-2) * (a + rat_i(1))
    } else {
        a * a / rat_i(4) + rat_i(2)
    }
}

/// The parameter t on the octant intervals with `b(t) = b`.
/// Requires a < -1 and min_feasible_b(a) <= b <= a^2 - 1.
pub fn invert_b(a: &Rational, b: &Rational) -> Result<AlgebraicNumber, FrontierError> {
    if *b < min_feasible_b(a) || *b > a * a - rat_i(1) {
        return Err(FrontierError::OutOfRange);
    }
    let intervals = case_intervals(a, Domain::NonnegOrthant)?;
    let special = [rat_i(0), -a.clone() - rat_i(1), rat_i(1), rat_i(2)];
    invert_curve(&b_numerator(a), -1, b, &intervals, &special)
}

/// How a threshold was obtained.
#[derive(Clone, Debug)]
pub enum BoundKind {
    /// A linear closed form in the input coefficients.
    ClosedForm,
    /// Inverted from the frontier curve at parameter t.
    Parametric { t: ExactReal },
}

/// An exact optimal threshold.
#[derive(Clone, Debug)]
pub struct BoundResult {
    pub value: ExactReal,
    pub kind: BoundKind,
    /// Squarefree integer polynomial vanishing at `value` (None for closed
    /// forms, whose value is already an explicit rational).
    pub defining: Option<UniPoly>,
    /// Rational approximation of `value` within the requested eps.
    pub approx: Rational,
    /// A point where the optimal form attains zero.
    pub equality_point: [ExactReal; 3],
}

/// Exact value of `numerator(t*) / denominator(t*)` for an algebraic t*,
/// together with a squarefree integer polynomial vanishing at the value.
/// The denominator must not vanish at any root of t*'s defining polynomial.
fn curve_value_at(
    tstar: &AlgebraicNumber,
    numerator: &UniPoly,
    denominator: &UniPoly,
) -> (ExactReal, UniPoly) {
    if let Some(r) = tstar.rational_value() {
        let v = numerator.eval(&r) / denominator.eval(&r);
        let defining = UniPoly::new(vec![-v.clone(), rat_i(1)]).integer_primitive();
        return (ExactReal::Rational(v), defining);
    }

    // Eliminate t from { m(t) = 0, numerator(t) - s*denominator(t) = 0 }:
    // the resultant in s vanishes at the value.
    let m = tstar.defining().clone();
    let deg = numerator
        .degree()
        .unwrap_or(0)
        .max(denominator.degree().unwrap_or(0));
    let mut tcoeffs = Vec::with_capacity(deg + 1);
    for i in 0..=deg {
        tcoeffs.push(UniPoly::new(vec![numerator.coeff(i), -denominator.coeff(i)]));
    }
    let res = resultant_eliminating_t(&BiPoly::from_t_poly(&m), &BiPoly::new(tcoeffs));
    assert!(
        !res.is_zero(),
        "resultant vanishes identically: numerator and denominator share a root of m"
    );
    let s_poly = res.squarefree_part().integer_primitive();

    let mut candidates = isolate_roots(&s_poly, &RealBound::NegInf, &RealBound::PosInf);
    let mut t = tstar.clone();
    loop {
        // refine until the denominator enclosure is sign-definite
        loop {
            let (lo, hi) = t.interval();
            let (dlo, dhi) = denominator.eval_interval(lo, hi);
            if dlo.is_positive() || dhi.is_negative() {
                break;
            }
            t.refine_step();
        }
        let (lo, hi) = {
            let (l, h) = t.interval();
            (l.clone(), h.clone())
        };
        let (nlo, nhi) = numerator.eval_interval(&lo, &hi);
        let (dlo, dhi) = denominator.eval_interval(&lo, &hi);
        let corners = [&nlo / &dlo, &nlo / &dhi, &nhi / &dlo, &nhi / &dhi];
        let vlo = corners.iter().min().unwrap().clone();
        let vhi = corners.iter().max().unwrap().clone();

        candidates.retain(|c| {
            let (clo, chi) = c.interval();
            !(*chi < vlo || *clo > vhi)
        });
        assert!(!candidates.is_empty(), "value enclosure excluded every resultant root");
        if candidates.len() == 1 {
            return (
                ExactReal::from_algebraic(candidates.pop().unwrap()),
                s_poly,
            );
        }
        t.refine_step();
        for c in &mut candidates {
            c.refine_step();
        }
    }
}

fn closed_form_bound(value: Rational, equality_point: [ExactReal; 3]) -> BoundResult {
    BoundResult {
        approx: value.clone(),
        value: ExactReal::Rational(value),
        kind: BoundKind::ClosedForm,
        defining: None,
        equality_point,
    }
}

fn exact_one() -> ExactReal {
    ExactReal::Rational(rat_i(1))
}

/// Smallest b making `w4 + a w3 + b w2 + c w1` nonnegative on all of R^3.
/// Total over all rational (a, c).
pub fn bmin_real(a: &Rational, c: &Rational, eps: &Rational) -> BoundResult {
    let c_corner = -(a * a) - rat_i(2) * a;
    if *c <= c_corner {
        // linear region: threshold -2a - c - 1, equality at (1,1,1)
        let v = rat_i(-2) * a - c - rat_i(1);
        return closed_form_bound(v, [exact_one(), exact_one(), exact_one()]);
    }
    if *a == rat(-1, 2) {
        // the curve's excluded line; here c > 3/4 and the threshold is
        // c/2 - 9/8, with equality at (2, 2, -1)
        let v = c / rat_i(2) - rat(9, 8);
        return closed_form_bound(
            v,
            [
                ExactReal::Rational(rat_i(2)),
                ExactReal::Rational(rat_i(2)),
                ExactReal::Rational(rat_i(-1)),
            ],
        );
    }
    let t = invert_c(a, c).expect("inversion is total for c above the linear region");
    let denom = UniPoly::new(vec![rat_i(-1), rat_i(-2)]); // -(2t+1)
    let (value, defining) = curve_value_at(&t, &b_numerator(a), &denom);
    let t_exact = ExactReal::from_algebraic(t);
    BoundResult {
        approx: value.approx(eps),
        value,
        kind: BoundKind::Parametric {
            t: t_exact.clone(),
        },
        defining: Some(defining),
        equality_point: [t_exact, exact_one(), exact_one()],
    }
}

/// Outcome of the octant threshold: either the bound or a proof that no c
/// works because the c-independent edge restriction already fails.
#[derive(Clone, Debug)]
pub enum CminOutcome {
    Bound(BoundResult),
    Infeasible { required_b: Rational },
}

/// Smallest c making `w4 + a w3 + b w2 + c w1` nonnegative on the closed
/// octant, or Infeasible when b is below the edge-restriction threshold.
pub fn cmin_nonneg(a: &Rational, b: &Rational, eps: &Rational) -> CminOutcome {
    let required = min_feasible_b(a);
    if *b < required {
        return CminOutcome::Infeasible {
            required_b: required,
        };
    }
    if *a >= rat_i(-1) || *b >= a * a - rat_i(1) {
        // linear region: threshold -2a - b - 1, equality at (1,1,1)
        let v = rat_i(-2) * a - b - rat_i(1);
        return CminOutcome::Bound(closed_form_bound(
            v,
            [exact_one(), exact_one(), exact_one()],
        ));
    }
    let t = invert_b(a, b).expect("inversion is total on the feasible parametric range");
    let denom = UniPoly::new(vec![rat_i(1), rat_i(2)]); // 2t+1
    let (value, defining) = curve_value_at(&t, &c_numerator(a), &denom);
    let t_exact = ExactReal::from_algebraic(t);
    CminOutcome::Bound(BoundResult {
        approx: value.approx(eps),
        value,
        kind: BoundKind::Parametric {
            t: t_exact.clone(),
        },
        defining: Some(defining),
        equality_point: [t_exact, exact_one(), exact_one()],
    })
}
