//! Exact arithmetic kernel: rationals, polynomials, Sturm sequences, real
//! root isolation, algebraic numbers, quotient-ring arithmetic and
//! resultants.
//!
//! Everything here is deterministic and allocation-happy rather than clever:
//! inputs are small (degree <= 8 univariate, degree-4 ternary forms) and
//! correctness is the entire point.

mod algebraic;
mod multipoly;
mod nonneg;
mod quotient;
mod rational;
mod resultant;
mod sturm;
mod unipoly;

pub use algebraic::{isolate_roots, AlgebraicNumber, ExactReal};
pub use multipoly::{CoeffRing, MultiPoly, MultiPolyQ, MultiPolyT};
pub use nonneg::{univariate_nonneg, NonnegDomain, NonnegResult};
pub use quotient::NumberField;
pub use rational::{
    dec_string, parse_rational, rat, rat_from_f64_approx, rat_i, rat_to_f64, Rational,
};
pub use resultant::{resultant_eliminating_t, BiPoly};
pub use sturm::{cauchy_root_bound, sturm_root_count, RealBound};
pub use unipoly::UniPoly;
