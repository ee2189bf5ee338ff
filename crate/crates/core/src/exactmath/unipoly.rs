//! Dense univariate polynomials over `Rational`.
//!
//! Coefficients are stored ascending (`coeffs[i]` multiplies `x^i`) with no
//! trailing zeros, so the zero polynomial is the empty vector and
//! `degree() == coeffs.len() - 1` otherwise.

use super::rational::{rat_i, sign, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly{:?}", self.coeffs)
    }
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        UniPoly::from_i64(&[0, 1])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial mapped to None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, k: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::rational::rat_to_f64(c);
        }
        acc
    }

    /// Interval Horner: exact rational enclosure of the image of `[lo, hi]`.
    pub fn eval_interval(&self, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
        debug_assert!(lo <= hi);
        let (mut alo, mut ahi) = (Rational::zero(), Rational::zero());
        for c in self.coeffs.iter().rev() {
            // [alo, ahi] * [lo, hi] + c
            let products = [&alo * lo, &alo * hi, &ahi * lo, &ahi * hi];
            let mut pmin = products[0].clone();
            let mut pmax = products[0].clone();
            for p in &products[1..] {
                if *p < pmin {
                    pmin = p.clone();
                }
                if *p > pmax {
                    pmax = p.clone();
                }
            }
            alo = pmin + c;
            ahi = pmax + c;
        }
        (alo, ahi)
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_i(i as i64))
                .collect(),
        )
    }

    /// Quotient and remainder with `deg(r) < deg(d)`. Panics on zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / lead;
            quot[i - dd] = q.clone();
            for j in 0..=dd {
                let t = &d.coeffs[j] * &q;
                rem[i - dd + j] -= t;
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd via the Euclidean algorithm (coefficients in a field).
    /// gcd(0, 0) = 0; otherwise the result is monic.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scale to leading coefficient 1 (zero polynomial unchanged).
    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&(Rational::one() / l)),
        }
    }

    /// The squarefree part `self / gcd(self, self')` — same roots, all
    /// simple, monic.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Rescale to integer coefficients with content 1 and positive leading
    /// coefficient. Roots are unchanged.
    pub fn integer_primitive(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        UniPoly::new(
            ints.iter()
                .map(|c| Rational::from_integer(c / &content))
                .collect(),
        )
    }

    /// True if every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Rational roots of an integer-primitive polynomial, found by testing
    /// +-(divisor of trailing)/(divisor of leading). Complete whenever both
    /// end coefficients factor within the trial-division bound; callers must
    /// treat the result as "roots found", not "all roots", and cope with
    /// misses. Returned sorted ascending.
    pub fn rational_roots_bounded(&self) -> Vec<Rational> {
        let p = self.integer_primitive();
        let Some(deg) = p.degree() else {
            return vec![];
        };
        if deg == 0 {
            return vec![];
        }
        // Strip x^k: zero is a root iff the trailing coefficient vanishes.
        let mut base = p.clone();
        let mut roots = vec![];
        while base.coeff(0).is_zero() {
            roots.push(Rational::zero());
            base = UniPoly::new(base.coeffs[1..].to_vec());
        }
        roots.dedup();
        if base.degree().unwrap_or(0) == 0 {
            roots.sort();
            return roots;
        }
        let trailing = base.coeff(0).numer().abs();
        let leading = base.leading().unwrap().numer().abs();
        let (num_divs, num_complete) = small_divisors(&trailing);
        let (den_divs, den_complete) = small_divisors(&leading);
        if !(num_complete && den_complete) {
            // Coefficients too large to factor cheaply; report only the
            // guaranteed roots found so far.
            roots.sort();
            return roots;
        }
        for n in &num_divs {
            for d in &den_divs {
                let cand = Rational::new(n.clone(), d.clone());
                for r in [cand.clone(), -cand] {
                    if base.eval(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Number of sign variations in the coefficient sequence (zeros skipped).
    pub fn coeff_sign_variations(&self) -> usize {
        let mut count = 0;
        let mut last = 0;
        for c in &self.coeffs {
            let s = sign(c);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }
}

/// All positive divisors of `n` (n > 0) by trial division, plus a flag for
/// completeness. Gives up (complete = false) when the unfactored cofactor
/// exceeds the trial bound squared.
fn small_divisors(n: &BigInt) -> (Vec<BigInt>, bool) {
    const TRIAL_BOUND: u64 = 100_000;
    let mut divisors = vec![BigInt::one()];
    let mut rest = n.clone();
    let mut complete = true;
    let mut p = BigInt::from(2);
    let bound = BigInt::from(TRIAL_BOUND);
    while &p * &p <= rest && p <= bound {
        if (&rest % &p).is_zero() {
            let mut power = BigInt::one();
            let mut powers = vec![];
            while (&rest % &p).is_zero() {
                rest /= &p;
                power *= &p;
                powers.push(power.clone());
            }
            let mut extended = divisors.clone();
            for pw in &powers {
                extended.extend(divisors.iter().map(|d| d * pw));
            }
            divisors = extended;
        }
        p += 1;
    }
    if rest > BigInt::one() {
        if &rest > &(&bound * &bound) {
            complete = false;
        } else {
            // rest is prime (it survived trial division past its sqrt)
            let mut extended = divisors.clone();
            extended.extend(divisors.iter().map(|d| d * &rest));
            divisors = extended;
        }
    }
    (divisors, complete)
}
