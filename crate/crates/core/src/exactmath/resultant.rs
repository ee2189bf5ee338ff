//! Resultants of bivariate polynomials, used to produce a single defining
//! polynomial (in s) for quantities defined implicitly by a pair of
//! polynomial relations in (t, s).
//!
//! A `BiPoly` is a polynomial in t whose coefficients are polynomials in s.
//! `resultant_eliminating_t` forms the Sylvester matrix with respect to t and
//! evaluates its determinant by fraction-free (Bareiss) elimination, which
//! keeps every intermediate entry a polynomial and every division exact.

use super::rational::Rational;
use super::unipoly::UniPoly;

/// Polynomial in t with coefficients in Q[s]; `tcoeffs[i]` multiplies t^i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    tcoeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(mut tcoeffs: Vec<UniPoly>) -> Self {
        while tcoeffs.last().is_some_and(|c| c.is_zero()) {
            tcoeffs.pop();
        }
        BiPoly { tcoeffs }
    }

    /// Embed a polynomial in t (rational coefficients, no s).
    pub fn from_t_poly(p: &UniPoly) -> Self {
        BiPoly::new(
            p.coeffs()
                .iter()
                .map(|c| UniPoly::constant(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.tcoeffs.is_empty()
    }

    /// Degree in t.
    pub fn degree_t(&self) -> Option<usize> {
        if self.tcoeffs.is_empty() {
            None
        } else {
            Some(self.tcoeffs.len() - 1)
        }
    }

    pub fn tcoeff(&self, i: usize) -> UniPoly {
        self.tcoeffs.get(i).cloned().unwrap_or_else(UniPoly::zero)
    }
}

/// Res_t(p, q) as a polynomial in s. Zero input gives the zero polynomial;
/// two constants (in t) give 1, the empty determinant.
pub fn resultant_eliminating_t(p: &BiPoly, q: &BiPoly) -> UniPoly {
    if p.is_zero() || q.is_zero() {
        return UniPoly::zero();
    }
    let n = p.degree_t().unwrap();
    let m = q.degree_t().unwrap();
    if n == 0 && m == 0 {
        return UniPoly::one();
    }
    if n == 0 {
        return poly_pow(&p.tcoeff(0), m);
    }
    if m == 0 {
        return poly_pow(&q.tcoeff(0), n);
    }

    // Sylvester matrix: m rows of p's coefficients (descending in t), each
    // shifted one column right from the previous, then n rows of q's.
    let size = n + m;
    let mut mat: Vec<Vec<UniPoly>> = vec![vec![UniPoly::zero(); size]; size];
    for (row, item) in mat.iter_mut().enumerate().take(m) {
        for k in 0..=n {
            item[row + k] = p.tcoeff(n - k);
        }
    }
    for row in 0..n {
        for k in 0..=m {
            mat[m + row][row + k] = q.tcoeff(m - k);
        }
    }
    bareiss_determinant(mat)
}

fn poly_pow(base: &UniPoly, e: usize) -> UniPoly {
    let mut acc = UniPoly::one();
    for _ in 0..e {
        acc = acc.mul(base);
    }
    acc
}

/// Fraction-free determinant with row pivoting; all entries stay polynomials
/// and the division at each step is exact.
fn bareiss_determinant(mut mat: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = mat.len();
    if n == 0 {
        return UniPoly::one();
    }
    let mut sign = 1i32;
    let mut prev_pivot = UniPoly::one();
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&i| !mat[i][k].is_zero()) {
                Some(i) => {
                    mat.swap(k, i);
                    sign = -sign;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = mat[k][k].mul(&mat[i][j]).sub(&mat[i][k].mul(&mat[k][j]));
                mat[i][j] = num.exact_div(&prev_pivot);
            }
            mat[i][k] = UniPoly::zero();
        }
        prev_pivot = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if sign < 0 {
        det.scale(&Rational::from_integer((-1).into()))
    } else {
        det
    }
}
