//! Exact decision procedure for symmetric quartic ternary forms.
//!
//! A form is given in the symmetric power-sum basis
//!
//! ```text
//! f(x,y,z) = w4 + a*w3 + b*w2 + c*w1
//! w4 = x^4+y^4+z^4                      w3 = x^3 y + y^3 z + z^3 x + x y^3 + y z^3 + z x^3
//! w2 = x^2 y^2 + y^2 z^2 + z^2 x^2      w1 = xyz (x+y+z)
//! ```
//!
//! and the engine answers, in exact rational/algebraic arithmetic:
//!
//! * whether `f >= 0` on all of R^3 or on the nonnegative octant
//!   ([`forms::decide`]), with an exact rational counterexample on failure;
//! * the sharp thresholds `b_min(a, c)` and `c_min(a, b)` as exact algebraic
//!   numbers with defining polynomials ([`frontier`]);
//! * machine-checkable positivity certificates — conic combinations of
//!   catalogued nonnegative facts and explicit squares — together with an
//!   independent verifier ([`certificates`]);
//! * a floating-point sampling oracle used to cross-check the exact engine
//!   ([`oracle`]).

pub mod certificates;
pub mod exactmath;
pub mod forms;
pub mod frontier;
pub mod oracle;
