//! Symmetric quartic ternary forms `f = w4 + a*w3 + b*w2 + c*w1` and the
//! exact decision procedure for their nonnegativity.
//!
//! The decision rests on two restriction identities for this family:
//!
//! * `f >= 0` on all of R^3  iff  `f(x, 1, 1) >= 0` for all real `x`;
//! * `f >= 0` on the closed nonnegative octant  iff  `f(x, 1, 0) >= 0` and
//!   `f(x, 1, 1) >= 0` for all `x >= 0`.
//!
//! Both follow from symmetry and degree-4 homogeneity: after scaling, a
//! violating point can always be moved onto one of those two lines. The
//! univariate restrictions are then decided exactly by root isolation.

use crate::exactmath::{
    univariate_nonneg, MultiPolyQ, NonnegDomain, NonnegResult, Rational, UniPoly,
};

/// Domain over which nonnegativity is asked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// All of R^3.
    Reals,
    /// The closed octant x, y, z >= 0.
    NonnegOrthant,
}

/// `f = w4 + a*w3 + b*w2 + c*w1` in the symmetric quartic basis.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticForm {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

/// x^4 + y^4 + z^4
pub fn w4() -> MultiPolyQ {
    MultiPolyQ::from_terms([
        ((4, 0, 0), Rational::from_integer(1.into())),
        ((0, 4, 0), Rational::from_integer(1.into())),
        ((0, 0, 4), Rational::from_integer(1.into())),
    ])
}

/// x^3 y + x^3 z + y^3 x + y^3 z + z^3 x + z^3 y
pub fn w3() -> MultiPolyQ {
    MultiPolyQ::from_terms([
        ((3, 1, 0), Rational::from_integer(1.into())),
        ((3, 0, 1), Rational::from_integer(1.into())),
        ((1, 3, 0), Rational::from_integer(1.into())),
        ((0, 3, 1), Rational::from_integer(1.into())),
        ((1, 0, 3), Rational::from_integer(1.into())),
        ((0, 1, 3), Rational::from_integer(1.into())),
    ])
}

/// x^2 y^2 + y^2 z^2 + z^2 x^2
pub fn w2() -> MultiPolyQ {
    MultiPolyQ::from_terms([
        ((2, 2, 0), Rational::from_integer(1.into())),
        ((0, 2, 2), Rational::from_integer(1.into())),
        ((2, 0, 2), Rational::from_integer(1.into())),
    ])
}

/// xyz (x + y + z)
pub fn w1() -> MultiPolyQ {
    MultiPolyQ::from_terms([
        ((2, 1, 1), Rational::from_integer(1.into())),
        ((1, 2, 1), Rational::from_integer(1.into())),
        ((1, 1, 2), Rational::from_integer(1.into())),
    ])
}

impl QuarticForm {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        QuarticForm { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        QuarticForm {
            a: Rational::from_integer(a.into()),
            b: Rational::from_integer(b.into()),
            c: Rational::from_integer(c.into()),
        }
    }

    /// Fully expanded 15-monomial polynomial.
    pub fn expand(&self) -> MultiPolyQ {
        w4()
            .add(&w3().scale(&self.a))
            .add(&w2().scale(&self.b))
            .add(&w1().scale(&self.c))
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &Rational, y: &Rational, z: &Rational) -> Rational {
        self.expand().eval(x, y, z)
    }

    pub fn eval_f64(&self, x: f64, y: f64, z: f64) -> f64 {
        use crate::exactmath::rat_to_f64;
        let (a, b, c) = (rat_to_f64(&self.a), rat_to_f64(&self.b), rat_to_f64(&self.c));
        let w4 = x.powi(4) + y.powi(4) + z.powi(4);
        let w3 = x.powi(3) * (y + z) + y.powi(3) * (x + z) + z.powi(3) * (x + y);
        let w2 = (x * y).powi(2) + (y * z).powi(2) + (z * x).powi(2);
        let w1 = x * y * z * (x + y + z);
        w4 + a * w3 + b * w2 + c * w1
    }

    /// `f(x, 1, 1)` as a univariate polynomial:
    /// `x^4 + 2a x^3 + (2b + c) x^2 + (2a + 2c) x + (2 + 2a + b)`.
    pub fn restrict_diag(&self) -> UniPoly {
        let two = Rational::from_integer(2.into());
        UniPoly::new(vec![
            &two + &two * &self.a + &self.b,
            &two * &self.a + &two * &self.c,
            &two * &self.b + &self.c,
            &two * &self.a,
            Rational::from_integer(1.into()),
        ])
    }

    /// `f(x, 1, 0)` as a univariate polynomial:
    /// `x^4 + a x^3 + b x^2 + a x + 1`.
    pub fn restrict_edge(&self) -> UniPoly {
        UniPoly::new(vec![
            Rational::from_integer(1.into()),
            self.a.clone(),
            self.b.clone(),
            self.a.clone(),
            Rational::from_integer(1.into()),
        ])
    }
}

/// An exact rational point where the form is negative.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub point: [Rational; 3],
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Holds,
    Fails(Counterexample),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

/// Decide `f >= 0` on `domain`, exactly. On failure the returned point is an
/// exact rational counterexample lying on one of the restriction lines.
pub fn decide(form: &QuarticForm, domain: Domain) -> Verdict {
    let one = Rational::from_integer(1.into());
    match domain {
        Domain::Reals => {
            match univariate_nonneg(&form.restrict_diag(), NonnegDomain::AllReals) {
                NonnegResult::Nonneg => Verdict::Holds,
                NonnegResult::Negative { point, value } => Verdict::Fails(Counterexample {
                    point: [point, one.clone(), one],
                    value,
                }),
            }
        }
        Domain::NonnegOrthant => {
            if let NonnegResult::Negative { point, value } =
                univariate_nonneg(&form.restrict_edge(), NonnegDomain::Halfline)
            {
                return Verdict::Fails(Counterexample {
                    point: [point, one, Rational::from_integer(0.into())],
                    value,
                });
            }
            match univariate_nonneg(&form.restrict_diag(), NonnegDomain::Halfline) {
                NonnegResult::Nonneg => Verdict::Holds,
                NonnegResult::Negative { point, value } => Verdict::Fails(Counterexample {
                    point: [point, one.clone(), one],
                    value,
                }),
            }
        }
    }
}
