//! Sparse polynomials in three variables (x, y, z) with generic
//! coefficients: rational for ordinary forms, univariate-polynomial for
//! expansion inside a number field Q[t]/(m).

use super::rational::{rat_to_f64, Rational};
use super::unipoly::UniPoly;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Minimal commutative-ring interface for multivariate coefficients.
pub trait CoeffRing: Clone + PartialEq {
    fn ring_zero() -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn ring_is_zero(&self) -> bool;
}

impl CoeffRing for Rational {
    fn ring_zero() -> Self {
        Rational::zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl CoeffRing for UniPoly {
    fn ring_zero() -> Self {
        UniPoly::zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Monomial exponents (x, y, z).
pub type Exps = (u32, u32, u32);

/// A polynomial in x, y, z stored as exponent -> coefficient. The map holds
/// no zero coefficients, so equality of maps is equality of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<C: CoeffRing> {
    terms: BTreeMap<Exps, C>,
}

pub type MultiPolyQ = MultiPoly<Rational>;
pub type MultiPolyT = MultiPoly<UniPoly>;

impl<C: CoeffRing> MultiPoly<C> {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exps, C)>) -> Self {
        let mut p = MultiPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exps, c: C) {
        if c.ring_is_zero() {
            return;
        }
        match self.terms.get(&e) {
            None => {
                self.terms.insert(e, c);
            }
            Some(old) => {
                let s = old.ring_add(&c);
                if s.ring_is_zero() {
                    self.terms.remove(&e);
                } else {
                    self.terms.insert(e, s);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: Exps) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::ring_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.ring_neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.ring_neg()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c.ring_mul(k));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MultiPoly::zero();
        for ((ax, ay, az), ac) in &self.terms {
            for ((bx, by, bz), bc) in &other.terms {
                out.add_term((ax + bx, ay + by, az + bz), ac.ring_mul(bc));
            }
        }
        out
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn map_coeffs<D: CoeffRing>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }

    /// Total degree (None for the zero polynomial).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j, k)| i + j + k).max()
    }
}

impl MultiPolyQ {
    pub fn constant(c: Rational) -> Self {
        MultiPoly::from_terms([((0, 0, 0), c)])
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &Rational, y: &Rational, z: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for ((i, j, k), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..*i {
                term *= x;
            }
            for _ in 0..*j {
                term *= y;
            }
            for _ in 0..*k {
                term *= z;
            }
            acc += term;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64, y: f64, z: f64) -> f64 {
        let mut acc = 0.0;
        for ((i, j, k), c) in &self.terms {
            acc += rat_to_f64(c) * x.powi(*i as i32) * y.powi(*j as i32) * z.powi(*k as i32);
        }
        acc
    }

    /// Lift rational coefficients into constant polynomials in t.
    pub fn lift(&self) -> MultiPolyT {
        self.map_coeffs(|c| UniPoly::constant(c.clone()))
    }
}
