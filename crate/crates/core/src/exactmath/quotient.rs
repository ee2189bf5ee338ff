//! Arithmetic in Q[t]/(m) where m is squarefree, together with exact sign
//! queries at one designated real root of m.
//!
//! Elements are plain `UniPoly` values; callers may hold unreduced
//! representatives (products grow the degree) and reduce when comparing.
//! Because m is squarefree, an element reduces to the zero polynomial iff it
//! vanishes at *every* root of m; vanishing at just the designated root is a
//! weaker condition answered by `sign_at_root`.

use super::algebraic::AlgebraicNumber;
use super::rational::Rational;
use super::unipoly::UniPoly;
use num_traits::One;

#[derive(Clone, Debug)]
pub struct NumberField {
    modulus: UniPoly,
    root: AlgebraicNumber,
}

impl NumberField {
    /// Field/ring of the defining polynomial of `root`.
    pub fn new(root: AlgebraicNumber) -> Self {
        NumberField {
            modulus: root.defining().clone(),
            root,
        }
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn root(&self) -> &AlgebraicNumber {
        &self.root
    }

    /// Canonical representative: remainder modulo m, degree < deg m.
    pub fn reduce(&self, p: &UniPoly) -> UniPoly {
        let (_, r) = p.div_rem(&self.modulus);
        r
    }

    pub fn add(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        self.reduce(&a.add(b))
    }

    pub fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        self.reduce(&a.mul(b))
    }

    /// True iff `p` is zero in the quotient ring (vanishes at all roots of m).
    pub fn is_zero_elem(&self, p: &UniPoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Multiplicative inverse modulo m, when gcd(p, m) = 1.
    pub fn inv(&self, p: &UniPoly) -> Option<UniPoly> {
        // extended Euclid on (m, p): maintain r = s*m + u*p; we only need u
        let (mut r0, mut r1) = (self.modulus.clone(), self.reduce(p));
        let (mut u0, mut u1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let u = u0.sub(&q.mul(&u1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
        }
        if r0.degree() != Some(0) {
            return None; // gcd not a unit
        }
        let g = r0.coeff(0);
        Some(self.reduce(&u0.scale(&(Rational::one() / g))))
    }

    /// Exact sign of the element at the designated root.
    pub fn sign_at_root(&self, p: &UniPoly) -> i32 {
        self.root.sign_of_poly_at(&self.reduce(p))
    }

    /// Constant value of `p` in the quotient ring, if it reduces to one.
    pub fn to_rational(&self, p: &UniPoly) -> Option<Rational> {
        let r = self.reduce(p);
        match r.degree() {
            None => Some(Rational::from_integer(0.into())),
            Some(0) => Some(r.coeff(0)),
            _ => None,
        }
    }
}
