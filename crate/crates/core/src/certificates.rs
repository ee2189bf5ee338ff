//! Positivity certificates: conic combinations of squares and catalog facts
//! that expand *exactly* to a given quartic form, plus an independent
//! verifier and a canonical JSON serialization.
//!
//! Three families of certificates are produced:
//!
//! * a two-square identity in `u = (x-y)(x+y+az)`, `v = (x-z)(x+z+ay)`
//!   covering the region where the threshold is linear in the coefficients,
//! * a three-square split in `X, Y, Z` (quadratics whose coefficients live
//!   in the field of the frontier parameter t) covering the curved part of
//!   the frontier, with slack absorbed by a catalog fact, and
//! * a conic combination of classical octant facts (Schur's inequality and
//!   friends) for the nonnegative-octant region with a >= -1.
//!
//! All scalars are exact: rationals, or residues in Q[t] modulo the defining
//! polynomial of an algebraic parameter. Verification re-expands the whole
//! combination and demands a zero residual, term-by-term nonnegative
//! multipliers, and domain-compatible axioms.

use crate::exactmath::{
    parse_rational, rat, rat_i, sturm_root_count, AlgebraicNumber, ExactReal, MultiPolyQ,
    MultiPolyT, NumberField, Rational, RealBound, UniPoly,
};
use crate::forms::{decide, w1, w2, w3, w4, Domain, QuarticForm, Verdict};
use crate::frontier::{b_numerator, c_numerator, case_intervals, invert_b, invert_c, param_point};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Value};
use std::collections::BTreeMap;
use std::fmt;

pub const CERTIFICATE_FORMAT_VERSION: u32 = 1;

/// Record of a randomized nonnegativity check backing an axiom fact.
#[derive(Clone, Debug, PartialEq)]
pub struct SpotCheckRecord {
    pub points: u32,
    pub min_value: f64,
    pub seed: u64,
}

/// How a catalog fact is known to be nonnegative.
#[derive(Clone, Debug, PartialEq)]
pub enum FactWitness {
    /// Exact expansion: the fact equals a nonnegative combination of squares.
    Squares(Vec<(Rational, MultiPolyQ)>),
    /// Trusted classical fact on its validity domain, with a recorded
    /// floating-point spot check.
    Axiom(SpotCheckRecord),
}

/// A named nonnegative symmetric polynomial usable as a certificate block.
#[derive(Clone, Debug, PartialEq)]
pub struct BaseFact {
    pub name: &'static str,
    pub polynomial: MultiPolyQ,
    pub validity: Domain,
    pub witness: FactWitness,
}

fn poly_i(terms: &[((u32, u32, u32), i64)]) -> MultiPolyQ {
    MultiPolyQ::from_terms(terms.iter().map(|(e, c)| (*e, rat_i(*c))))
}

fn poly_q(terms: Vec<((u32, u32, u32), Rational)>) -> MultiPolyQ {
    MultiPolyQ::from_terms(terms)
}

fn spot_check(poly: &MultiPolyQ, domain: Domain, seed: u64) -> SpotCheckRecord {
    let points = 100_000u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min_value = f64::INFINITY;
    for _ in 0..points {
        let (x, y, z) = match domain {
            Domain::Reals => (
                rng.gen_range(-1.0..=1.0),
                rng.gen_range(-1.0..=1.0),
                rng.gen_range(-1.0..=1.0),
            ),
            Domain::NonnegOrthant => (
                rng.gen_range(0.0..=1.0),
                rng.gen_range(0.0..=1.0),
                rng.gen_range(0.0..=1.0),
            ),
        };
        let v = poly.eval_f64(x, y, z);
        if v < min_value {
            min_value = v;
        }
    }
    SpotCheckRecord {
        points,
        min_value,
        seed,
    }
}

/// The catalog of base nonnegative facts, keyed by behavior-describing
/// names. Square-witnessed facts are valid everywhere; axiom facts only on
/// the nonnegative octant.
pub fn catalog() -> Vec<BaseFact> {
    let x2 = |a: (u32, u32, u32), b: (u32, u32, u32)| {
        // monomial difference a - b
        poly_i(&[(a, 1), (b, -1)])
    };
    let xy = (1u32, 1u32, 0u32);
    let yz = (0u32, 1u32, 1u32);
    let zx = (1u32, 0u32, 1u32);

    let mut facts = Vec::new();

    // 2w4 - w3 = sum over pairs of (p-q)^2(p^2+pq+q^2), each pair split into
    // two rational squares: [(p-q)(p+q/2)]^2 + (3/4)[(p-q)q]^2
    {
        let pair = |p: usize, q: usize| -> [((u32, u32, u32), i64); 3] {
            let mut sq = [(0u32, 0u32, 0u32); 2];
            sq[0] = match p {
                0 => (2, 0, 0),
                1 => (0, 2, 0),
                _ => (0, 0, 2),
            };
            sq[1] = match q {
                0 => (2, 0, 0),
                1 => (0, 2, 0),
                _ => (0, 0, 2),
            };
            let mut cross = [0u32; 3];
            cross[p] += 1;
            cross[q] += 1;
            [
                (sq[0], 2),
                ((cross[0], cross[1], cross[2]), -1),
                (sq[1], -1),
            ]
        };
        let mut parts = Vec::new();
        for (p, q) in [(0usize, 1usize), (1, 2), (2, 0)] {
            // (p-q)(p + q/2) = p^2 - pq/2 - q^2/2, stored doubled then halved
            let b1 = pair(p, q);
            let first = poly_q(b1.iter().map(|(e, c)| (*e, rat(*c, 2))).collect());
            parts.push((rat_i(1), first));
            // (p-q)q = pq - q^2
            let mut cross = [0u32; 3];
            cross[p] += 1;
            cross[q] += 1;
            let qq = match q {
                0 => (2, 0, 0),
                1 => (0, 2, 0),
                _ => (0, 0, 2),
            };
            parts.push((
                rat(3, 4),
                poly_i(&[((cross[0], cross[1], cross[2]), 1), (qq, -1)]),
            ));
        }
        facts.push(BaseFact {
            name: "2w4-w3",
            polynomial: w4().scale(&rat_i(2)).sub(&w3()),
            validity: Domain::Reals,
            witness: FactWitness::Squares(parts),
        });
    }

    // w4 - w2 = 1/2 * sum of (x^2-y^2)^2 over the three pairs
    facts.push(BaseFact {
        name: "w4-w2",
        polynomial: w4().sub(&w2()),
        validity: Domain::Reals,
        witness: FactWitness::Squares(vec![
            (rat(1, 2), x2((2, 0, 0), (0, 2, 0))),
            (rat(1, 2), x2((0, 2, 0), (0, 0, 2))),
            (rat(1, 2), x2((0, 0, 2), (2, 0, 0))),
        ]),
    });

    // w2 = (xy)^2 + (yz)^2 + (zx)^2
    facts.push(BaseFact {
        name: "w2",
        polynomial: w2(),
        validity: Domain::Reals,
        witness: FactWitness::Squares(vec![
            (rat_i(1), poly_i(&[(xy, 1)])),
            (rat_i(1), poly_i(&[(yz, 1)])),
            (rat_i(1), poly_i(&[(zx, 1)])),
        ]),
    });

    // w2 - w1 = 1/2 * [(xy-yz)^2 + (yz-zx)^2 + (zx-xy)^2]
    facts.push(BaseFact {
        name: "w2-w1",
        polynomial: w2().sub(&w1()),
        validity: Domain::Reals,
        witness: FactWitness::Squares(vec![
            (rat(1, 2), x2(xy, yz)),
            (rat(1, 2), x2(yz, zx)),
            (rat(1, 2), x2(zx, xy)),
        ]),
    });

    // w2 + 2w1 = (xy + yz + zx)^2
    facts.push(BaseFact {
        name: "w2+2w1",
        polynomial: w2().add(&w1().scale(&rat_i(2))),
        validity: Domain::Reals,
        witness: FactWitness::Squares(vec![(
            rat_i(1),
            poly_i(&[(xy, 1), (yz, 1), (zx, 1)]),
        )]),
    });

    // xyz(x+y+z) >= 0 on the octant
    facts.push(BaseFact {
        name: "w1",
        polynomial: w1(),
        validity: Domain::NonnegOrthant,
        witness: FactWitness::Axiom(spot_check(&w1(), Domain::NonnegOrthant, 11)),
    });

    // w3 - 2w2 = sum of pq(p-q)^2 over pairs >= 0 on the octant
    {
        let p = w3().sub(&w2().scale(&rat_i(2)));
        facts.push(BaseFact {
            name: "w3-2w2",
            polynomial: p.clone(),
            validity: Domain::NonnegOrthant,
            witness: FactWitness::Axiom(spot_check(&p, Domain::NonnegOrthant, 12)),
        });
    }

    // Schur: w4 + w1 - w3 >= 0 on the octant
    {
        let p = w4().add(&w1()).sub(&w3());
        facts.push(BaseFact {
            name: "w4+w1-w3",
            polynomial: p.clone(),
            validity: Domain::NonnegOrthant,
            witness: FactWitness::Axiom(spot_check(&p, Domain::NonnegOrthant, 13)),
        });
    }

    facts
}

fn catalog_map() -> BTreeMap<&'static str, BaseFact> {
    catalog().into_iter().map(|f| (f.name, f)).collect()
}

/// The quadratics u = (x-y)(x+y+az) and v = (x-z)(x+z+ay), whose combination
/// u^2 + v^2 - uv expands to w4 + a w3 + (a^2-1) w2 - (a^2+2a) w1.
pub fn uv_bases(a: &Rational) -> (MultiPolyQ, MultiPolyQ) {
    let u = poly_q(vec![
        ((2, 0, 0), rat_i(1)),
        ((0, 2, 0), rat_i(-1)),
        ((1, 0, 1), a.clone()),
        ((0, 1, 1), -a.clone()),
    ]);
    let v = poly_q(vec![
        ((2, 0, 0), rat_i(1)),
        ((0, 0, 2), rat_i(-1)),
        ((1, 1, 0), a.clone()),
        ((0, 1, 1), -a.clone()),
    ]);
    (u, v)
}

/// u^2 + v^2 - uv written as the rational square combination
/// (u - v/2)^2 + (3/4) v^2.
fn uv_square_parts(a: &Rational) -> Vec<(Rational, MultiPolyQ)> {
    let (u, v) = uv_bases(a);
    vec![
        (rat_i(1), u.sub(&v.scale(&rat(1, 2)))),
        (rat(3, 4), v),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertKind {
    /// Two-square identity plus linear slack facts.
    UvSquares,
    /// The a = -1/2 combination: two-square identity plus its two slacks.
    MinusHalfCombo,
    /// Three-square split at a frontier parameter plus slack.
    XyzSquares,
    /// Conic combination of octant facts including Schur's inequality.
    SchurConic,
}

impl CertKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertKind::UvSquares => "uv-squares",
            CertKind::MinusHalfCombo => "minus-half-combo",
            CertKind::XyzSquares => "xyz-squares",
            CertKind::SchurConic => "schur-conic",
        }
    }

    fn from_str(s: &str) -> Option<Self> {
        match s {
            "uv-squares" => Some(CertKind::UvSquares),
            "minus-half-combo" => Some(CertKind::MinusHalfCombo),
            "xyz-squares" => Some(CertKind::XyzSquares),
            "schur-conic" => Some(CertKind::SchurConic),
            _ => None,
        }
    }
}

/// One square with its (nonnegative) coefficient. The coefficient and the
/// base's coefficients are residues in Q[t]; plain rationals are stored as
/// constant polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarePart {
    pub coeff: UniPoly,
    pub base: MultiPolyT,
}

#[derive(Clone, Debug, PartialEq)]
pub enum TermPayload {
    /// A catalog fact, referenced by name.
    Fact(String),
    /// An explicit nonnegative combination of squares.
    Squares(Vec<SquarePart>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CertTerm {
    pub multiplier: UniPoly,
    pub payload: TermPayload,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub kind: CertKind,
    pub domain: Domain,
    pub form: QuarticForm,
    /// Frontier parameter for XyzSquares certificates.
    pub t: Option<ExactReal>,
    pub terms: Vec<CertTerm>,
    pub version: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CertificateError {
    /// The requested constructor's coefficient-region precondition fails.
    PreconditionViolated(&'static str),
    /// The form is not nonnegative on the requested domain, so no
    /// certificate exists.
    DoesNotHold,
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateError::PreconditionViolated(what) => {
                write!(f, "certificate precondition violated: {what}")
            }
            CertificateError::DoesNotHold => {
                write!(f, "the form is not nonnegative on the requested domain")
            }
        }
    }
}

impl std::error::Error for CertificateError {}

fn const_term(mult: Rational, payload: TermPayload) -> CertTerm {
    CertTerm {
        multiplier: UniPoly::constant(mult),
        payload,
    }
}

fn squares_payload_q(parts: Vec<(Rational, MultiPolyQ)>) -> TermPayload {
    TermPayload::Squares(
        parts
            .into_iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, b)| SquarePart {
                coeff: UniPoly::constant(c),
                base: b.lift(),
            })
            .collect(),
    )
}

fn push_fact_term(terms: &mut Vec<CertTerm>, mult: Rational, name: &str) {
    if !mult.is_zero() {
        terms.push(const_term(mult, TermPayload::Fact(name.to_string())));
    }
}

/// Certificate over the reals for the region c <= -a^2-2a, b >= -2a-c-1:
/// the two-square identity plus w2 and (w2 - w1) slack.
pub fn cert_uv(a: &Rational, b: &Rational, c: &Rational) -> Result<Certificate, CertificateError> {
    let m_w2 = rat_i(2) * a + b + c + rat_i(1);
    let m_w2w1 = -c.clone() - a * a - rat_i(2) * a;
    if m_w2.is_negative() || m_w2w1.is_negative() {
        return Err(CertificateError::PreconditionViolated(
            "requires c <= -a^2-2a and b >= -2a-c-1",
        ));
    }
    let mut terms = vec![const_term(rat_i(1), squares_payload_q(uv_square_parts(a)))];
    push_fact_term(&mut terms, m_w2, "w2");
    push_fact_term(&mut terms, m_w2w1, "w2-w1");
    Ok(Certificate {
        kind: CertKind::UvSquares,
        domain: Domain::Reals,
        form: QuarticForm::new(a.clone(), b.clone(), c.clone()),
        t: None,
        terms,
        version: CERTIFICATE_FORMAT_VERSION,
    })
}

/// Certificate on the octant for a <= -1, b >= a^2-1, c >= -2a-b-1: the
/// two-square identity plus (w2 - w1) and w1 slack.
pub fn cert_uv_orthant(
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<Certificate, CertificateError> {
    let m_w2w1 = b - a * a + rat_i(1);
    let m_w1 = rat_i(2) * a + b + c + rat_i(1);
    if m_w2w1.is_negative() || m_w1.is_negative() {
        return Err(CertificateError::PreconditionViolated(
            "requires b >= a^2-1 and c >= -2a-b-1",
        ));
    }
    let mut terms = vec![const_term(rat_i(1), squares_payload_q(uv_square_parts(a)))];
    push_fact_term(&mut terms, m_w2w1, "w2-w1");
    push_fact_term(&mut terms, m_w1, "w1");
    Ok(Certificate {
        kind: CertKind::UvSquares,
        domain: Domain::NonnegOrthant,
        form: QuarticForm::new(a.clone(), b.clone(), c.clone()),
        t: None,
        terms,
        version: CERTIFICATE_FORMAT_VERSION,
    })
}

/// Certificate over the reals on the line a = -1/2 for c > 3/4 (for
/// c <= 3/4 this routes to [`cert_uv`]): the a = -1/2 two-square identity
/// plus (c - 3/4)/2 * (w2 + 2w1) and (b - c/2 + 9/8) * w2.
pub fn cert_minus_half(b: &Rational, c: &Rational) -> Result<Certificate, CertificateError> {
    let a = rat(-1, 2);
    if *c <= rat(3, 4) {
        return cert_uv(&a, b, c);
    }
    let m_w2p2w1 = (c - rat(3, 4)) / rat_i(2);
    let m_w2 = b - c / rat_i(2) + rat(9, 8);
    if m_w2.is_negative() {
        return Err(CertificateError::PreconditionViolated(
            "requires b >= c/2 - 9/8",
        ));
    }
    let mut terms = vec![const_term(rat_i(1), squares_payload_q(uv_square_parts(&a)))];
    push_fact_term(&mut terms, m_w2p2w1, "w2+2w1");
    push_fact_term(&mut terms, m_w2, "w2");
    Ok(Certificate {
        kind: CertKind::MinusHalfCombo,
        domain: Domain::Reals,
        form: QuarticForm::new(a, b.clone(), c.clone()),
        t: None,
        terms,
        version: CERTIFICATE_FORMAT_VERSION,
    })
}

/// Certificate on the octant for a >= -1, b >= -2(a+1), c >= -2a-b-1: a
/// conic combination of Schur's inequality and three further octant facts.
pub fn cert_schur_nonneg(
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<Certificate, CertificateError> {
    let m_schur = rat_i(1);
    let m_w3 = a + rat_i(1);
    let m_w2w1 = rat_i(2) * a + rat_i(2) + b;
    let m_w1 = rat_i(2) * a + b + c + rat_i(1);
    if m_w3.is_negative() || m_w2w1.is_negative() || m_w1.is_negative() {
        return Err(CertificateError::PreconditionViolated(
            "requires a >= -1, b >= -2(a+1), c >= -2a-b-1",
        ));
    }
    let mut terms = Vec::new();
    push_fact_term(&mut terms, m_schur, "w4+w1-w3");
    push_fact_term(&mut terms, m_w3, "w3-2w2");
    push_fact_term(&mut terms, m_w2w1, "w2-w1");
    push_fact_term(&mut terms, m_w1, "w1");
    Ok(Certificate {
        kind: CertKind::SchurConic,
        domain: Domain::NonnegOrthant,
        form: QuarticForm::new(a.clone(), b.clone(), c.clone()),
        t: None,
        terms,
        version: CERTIFICATE_FORMAT_VERSION,
    })
}

/// The three quadratics of the frontier split, with coefficients taken from
/// an arbitrary scalar pair (p, q).
fn xyz_bases<C: Clone>(one: C, p: C, q: C) -> (Vec<((u32, u32, u32), C)>, Vec<((u32, u32, u32), C)>, Vec<((u32, u32, u32), C)>) {
    let x = vec![
        ((2, 0, 0), one.clone()),
        ((1, 1, 0), p.clone()),
        ((1, 0, 1), p.clone()),
        ((0, 1, 1), q.clone()),
    ];
    let y = vec![
        ((0, 2, 0), one.clone()),
        ((0, 1, 1), p.clone()),
        ((1, 1, 0), p.clone()),
        ((1, 0, 1), q.clone()),
    ];
    let z = vec![
        ((0, 0, 2), one),
        ((1, 0, 1), p.clone()),
        ((0, 1, 1), p),
        ((1, 1, 0), q),
    ];
    (x, y, z)
}

/// The split (k+1)/3 (X+Y+Z)^2 + (2-k)/6 [(X-Y)^2+(Y-Z)^2+(Z-X)^2], which
/// expands to X^2+Y^2+Z^2 + k(XY+YZ+ZX) and is a nonnegative combination
/// exactly when -1 <= k <= 2.
fn split_parts_q(
    k: &Rational,
    x: &MultiPolyQ,
    y: &MultiPolyQ,
    z: &MultiPolyQ,
) -> Vec<(Rational, MultiPolyQ)> {
    let c_sum = (k + rat_i(1)) / rat_i(3);
    let c_diff = (rat_i(2) - k) / rat_i(6);
    vec![
        (c_sum, x.add(y).add(z)),
        (c_diff.clone(), x.sub(y)),
        (c_diff.clone(), y.sub(z)),
        (c_diff, z.sub(x)),
    ]
}

/// The k-free degenerate split at t = 1 (which forces a = -2): the form
/// w4 - 2 w3 + 3 w2 equals half the sum of the three fourth powers
/// (x-y)^4 + (y-z)^4 + (x-z)^4.
fn degenerate_parts() -> Vec<(Rational, MultiPolyQ)> {
    let d = |p: (u32, u32, u32), q: (u32, u32, u32)| {
        // (p - q)^2 as a quadratic polynomial
        poly_i(&[(p, 1), (q, -1)])
    };
    let x = (1, 0, 0);
    let y = (0, 1, 0);
    let z = (0, 0, 1);
    vec![
        (rat(1, 2), d(x, y).square()),
        (rat(1, 2), d(y, z).square()),
        (rat(1, 2), d(x, z).square()),
    ]
}

/// Certificate at a rational frontier parameter t: the three-square split
/// with rational scalars, plus slack absorbed by w2 (reals; requires
/// c = c(t) exactly and b >= b(t)) or by w1 (octant; requires b = b(t)
/// exactly and c >= c(t)).
pub fn cert_xyz(
    a: &Rational,
    t: &Rational,
    b: &Rational,
    c: &Rational,
    domain: Domain,
) -> Result<Certificate, CertificateError> {
    let intervals = case_intervals(a, domain)
        .map_err(|_| CertificateError::PreconditionViolated("no admissible parameter intervals"))?;
    if !intervals.iter().any(|iv| iv.contains_rational(t)) {
        return Err(CertificateError::PreconditionViolated(
            "t outside the admissible parameter intervals",
        ));
    }
    let pp = param_point(a, t)
        .map_err(|_| CertificateError::PreconditionViolated("t is the curve pole"))?;

    let (slack, slack_fact): (Rational, &str) = match domain {
        Domain::Reals => {
            if *c != pp.ct {
                return Err(CertificateError::PreconditionViolated(
                    "c must equal the curve value c(t) exactly",
                ));
            }
            (b - &pp.bt, "w2")
        }
        Domain::NonnegOrthant => {
            if *b != pp.bt {
                return Err(CertificateError::PreconditionViolated(
                    "b must equal the curve value b(t) exactly",
                ));
            }
            (c - &pp.ct, "w1")
        }
    };
    if slack.is_negative() {
        return Err(CertificateError::DoesNotHold);
    }

    let parts = match &pp.k {
        None => {
            assert_eq!(*a, rat_i(-2), "t = 1 lies in an interval only when a = -2");
            degenerate_parts()
        }
        Some(k) => {
            assert!(
                *k >= rat_i(-1) && *k <= rat_i(2),
                "k stays within [-1, 2] on the admissible intervals"
            );
            let (xt, yt, zt) = xyz_bases(rat_i(1), pp.p.clone(), pp.q.clone());
            let x = poly_q(xt);
            let y = poly_q(yt);
            let z = poly_q(zt);
            split_parts_q(k, &x, &y, &z)
        }
    };

    let mut terms = vec![const_term(rat_i(1), squares_payload_q(parts))];
    push_fact_term(&mut terms, slack, slack_fact);
    Ok(Certificate {
        kind: CertKind::XyzSquares,
        domain,
        form: QuarticForm::new(a.clone(), b.clone(), c.clone()),
        t: Some(ExactReal::Rational(t.clone())),
        terms,
        version: CERTIFICATE_FORMAT_VERSION,
    })
}

/// Certificate at an algebraic frontier parameter: scalars are residues in
/// Q[t] modulo the parameter's defining polynomial, signs decided at the
/// isolated root.
fn cert_xyz_algebraic(
    a: &Rational,
    tstar: &AlgebraicNumber,
    b: &Rational,
    c: &Rational,
    domain: Domain,
) -> Result<Certificate, CertificateError> {
    let nf = NumberField::new(tstar.clone());
    let t = UniPoly::from_i64(&[0, 1]);
    let two_t_one = UniPoly::from_i64(&[1, 2]);
    let d_inv = nf
        .inv(&two_t_one)
        .expect("2t+1 is invertible: the pole is never a root of the defining polynomial");
    let t2 = nf.mul(&t, &t);

    // p = -(t^2+t+1)/(2t+1), q = (t^2+2t)/(2t+1)
    let p = nf.mul(&t2.add(&t).add(&UniPoly::from_i64(&[1])).neg(), &d_inv);
    let q = nf.mul(&t2.add(&t.scale(&rat_i(2))), &d_inv);

    // k = (2t^2 + 2(a+1)t + a + 2)/(t - 1); t = 1 is never a root here
    let t_minus_1 = UniPoly::from_i64(&[-1, 1]);
    let e_inv = nf
        .inv(&t_minus_1)
        .expect("t-1 is invertible: 1 is never a root of the defining polynomial");
    let k_num = t2
        .scale(&rat_i(2))
        .add(&t.scale(&(rat_i(2) * (a + rat_i(1)))))
        .add(&UniPoly::constant(a + rat_i(2)));
    let k = nf.mul(&k_num, &e_inv);
    assert!(
        nf.sign_at_root(&k.add(&UniPoly::constant(rat_i(1)))) >= 0
            && nf.sign_at_root(&UniPoly::constant(rat_i(2)).sub(&k)) >= 0,
        "k stays within [-1, 2] on the admissible intervals"
    );

    // curve values b(t) = -b_num/(2t+1), c(t) = c_num/(2t+1)
    let bt = nf.mul(&b_numerator(a), &d_inv).neg();
    let ct = nf.mul(&c_numerator(a), &d_inv);

    let (slack, slack_fact): (UniPoly, &str) = match domain {
        Domain::Reals => {
            debug_assert!(
                nf.is_zero_elem(&UniPoly::constant(c.clone()).sub(&ct)),
                "inversion guarantees c(t) = c"
            );
            (UniPoly::constant(b.clone()).sub(&bt), "w2")
        }
        Domain::NonnegOrthant => {
            debug_assert!(
                nf.is_zero_elem(&UniPoly::constant(b.clone()).sub(&bt)),
                "inversion guarantees b(t) = b"
            );
            (UniPoly::constant(c.clone()).sub(&ct), "w1")
        }
    };
    let slack = nf.reduce(&slack);
    if nf.sign_at_root(&slack) < 0 {
        return Err(CertificateError::DoesNotHold);
    }

    let one = UniPoly::from_i64(&[1]);
    let (xt, yt, zt) = xyz_bases(one.clone(), p, q);
    let x: MultiPolyT = MultiPolyT::from_terms(xt);
    let y: MultiPolyT = MultiPolyT::from_terms(yt);
    let z: MultiPolyT = MultiPolyT::from_terms(zt);

    let c_sum = nf.reduce(&k.add(&one).scale(&rat(1, 3)));
    let c_diff = nf.reduce(&UniPoly::constant(rat_i(2)).sub(&k).scale(&rat(1, 6)));
    let mut parts = Vec::new();
    for (coeff, base) in [
        (c_sum, x.add(&y).add(&z)),
        (c_diff.clone(), x.sub(&y)),
        (c_diff.clone(), y.sub(&z)),
        (c_diff, z.sub(&x)),
    ] {
        if !nf.is_zero_elem(&coeff) {
            parts.push(SquarePart { coeff, base });
        }
    }

    let mut terms = vec![CertTerm {
        multiplier: one,
        payload: TermPayload::Squares(parts),
    }];
    if !nf.is_zero_elem(&slack) {
        terms.push(CertTerm {
            multiplier: slack,
            payload: TermPayload::Fact(slack_fact.to_string()),
        });
    }
    Ok(Certificate {
        kind: CertKind::XyzSquares,
        domain,
        form: QuarticForm::new(a.clone(), b.clone(), c.clone()),
        t: Some(ExactReal::Algebraic(tstar.clone())),
        terms,
        version: CERTIFICATE_FORMAT_VERSION,
    })
}

/// Construct a certificate for any form that is nonnegative on the given
/// domain. Returns DoesNotHold for forms that are not.
pub fn certify(form: &QuarticForm, domain: Domain) -> Result<Certificate, CertificateError> {
    let (a, b, c) = (&form.a, &form.b, &form.c);
    match domain {
        Domain::Reals => {
            let c_corner = -(a * a) - rat_i(2) * a;
            if *c <= c_corner {
                return cert_uv(a, b, c).map_err(|_| CertificateError::DoesNotHold);
            }
            if *a == rat(-1, 2) {
                return cert_minus_half(b, c).map_err(|_| CertificateError::DoesNotHold);
            }
            let t = invert_c(a, c).expect("inversion is total for c above the linear region");
            match t.rational_value() {
                Some(tr) => cert_xyz(a, &tr, b, c, domain),
                None => cert_xyz_algebraic(a, &t, b, c, domain),
            }
        }
        Domain::NonnegOrthant => {
            if *a >= rat_i(-1) {
                return cert_schur_nonneg(a, b, c).map_err(|_| CertificateError::DoesNotHold);
            }
            if *b >= a * a - rat_i(1) {
                return cert_uv_orthant(a, b, c).map_err(|_| CertificateError::DoesNotHold);
            }
            if invert_b(a, b).is_err() {
                // b below the edge-restriction threshold: the form fails for
                // every c, so there is nothing to certify.
                return Err(CertificateError::DoesNotHold);
            }
            let t = invert_b(a, b).expect("checked above");
            match t.rational_value() {
                Some(tr) => cert_xyz(a, &tr, b, c, domain),
                None => cert_xyz_algebraic(a, &t, b, c, domain),
            }
        }
    }
}

/// Decide nonnegativity and, when it holds, attach a certificate.
pub fn decide_with_certificate(
    form: &QuarticForm,
    domain: Domain,
) -> (Verdict, Option<Certificate>) {
    let verdict = decide(form, domain);
    let cert = if verdict.holds() {
        certify(form, domain).ok()
    } else {
        None
    };
    (verdict, cert)
}

#[derive(Clone, Debug, PartialEq)]
pub enum VerifyOutcome {
    Valid,
    Invalid(String),
}

impl VerifyOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, VerifyOutcome::Valid)
    }
}

fn scalar_sign(p: &UniPoly, nf: Option<&NumberField>) -> Result<i32, String> {
    match nf {
        Some(nf) => Ok(nf.sign_at_root(p)),
        None => {
            if p.degree().unwrap_or(0) > 0 {
                Err("non-constant scalar in a certificate without an algebraic parameter".into())
            } else {
                let c = p.coeff(0);
                Ok(if c.is_zero() {
                    0
                } else if c.is_negative() {
                    -1
                } else {
                    1
                })
            }
        }
    }
}

/// Exact verification: nonnegative multipliers and square coefficients,
/// axiom facts restricted to their validity domain, and a zero expansion
/// residual (reduced modulo the parameter's defining polynomial when the
/// parameter is algebraic).
pub fn verify(cert: &Certificate, form: &QuarticForm) -> VerifyOutcome {
    if cert.version != CERTIFICATE_FORMAT_VERSION {
        return VerifyOutcome::Invalid(format!("unsupported version {}", cert.version));
    }
    if cert.form != *form {
        return VerifyOutcome::Invalid("embedded form differs from the target form".into());
    }
    let nf = match &cert.t {
        Some(ExactReal::Algebraic(x)) => Some(NumberField::new(x.clone())),
        _ => None,
    };
    let facts = catalog_map();

    let mut total = MultiPolyT::zero();
    for term in &cert.terms {
        match scalar_sign(&term.multiplier, nf.as_ref()) {
            Ok(s) if s < 0 => return VerifyOutcome::Invalid("negative multiplier".into()),
            Ok(_) => {}
            Err(e) => return VerifyOutcome::Invalid(e),
        }
        let payload_poly: MultiPolyT = match &term.payload {
            TermPayload::Fact(name) => {
                let Some(fact) = facts.get(name.as_str()) else {
                    return VerifyOutcome::Invalid(format!("unknown catalog fact '{name}'"));
                };
                if fact.validity == Domain::NonnegOrthant && cert.domain != Domain::NonnegOrthant {
                    return VerifyOutcome::Invalid(format!(
                        "axiom fact '{name}' used outside its validity domain"
                    ));
                }
                if let FactWitness::Squares(parts) = &fact.witness {
                    let mut sum = MultiPolyQ::zero();
                    for (coeff, base) in parts {
                        if coeff.is_negative() {
                            return VerifyOutcome::Invalid(format!(
                                "catalog fact '{name}' has a negative square coefficient"
                            ));
                        }
                        sum = sum.add(&base.square().scale(coeff));
                    }
                    if !sum.sub(&fact.polynomial).is_zero() {
                        return VerifyOutcome::Invalid(format!(
                            "catalog fact '{name}' witness does not expand to the fact"
                        ));
                    }
                }
                fact.polynomial.lift()
            }
            TermPayload::Squares(parts) => {
                let mut sum = MultiPolyT::zero();
                for part in parts {
                    match scalar_sign(&part.coeff, nf.as_ref()) {
                        Ok(s) if s < 0 => {
                            return VerifyOutcome::Invalid(
                                "negative square coefficient".into(),
                            )
                        }
                        Ok(_) => {}
                        Err(e) => return VerifyOutcome::Invalid(e),
                    }
                    sum = sum.add(&part.base.square().scale(&part.coeff));
                }
                sum
            }
        };
        total = total.add(&payload_poly.scale(&term.multiplier));
    }

    let residual = total.sub(&form.expand().lift());
    for (_, coeff) in residual.terms() {
        let zero = match &nf {
            Some(nf) => nf.is_zero_elem(coeff),
            None => coeff.is_zero(),
        };
        if !zero {
            return VerifyOutcome::Invalid("expansion residual is nonzero".into());
        }
    }
    VerifyOutcome::Valid
}

// ---------------------------------------------------------------------------
// Canonical JSON serialization
// ---------------------------------------------------------------------------

fn rat_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn scalar_to_value(p: &UniPoly) -> Value {
    if p.degree().unwrap_or(0) == 0 {
        Value::String(rat_string(&p.coeff(0)))
    } else {
        Value::Array(
            p.coeffs()
                .iter()
                .map(|c| Value::String(rat_string(c)))
                .collect(),
        )
    }
}

fn scalar_from_value(v: &Value) -> Result<UniPoly, String> {
    match v {
        Value::String(s) => Ok(UniPoly::constant(
            parse_rational(s)?,
        )),
        Value::Array(items) => {
            let mut coeffs = Vec::with_capacity(items.len());
            for item in items {
                let Value::String(s) = item else {
                    return Err("scalar coefficient must be a string".into());
                };
                coeffs.push(parse_rational(s)?);
            }
            Ok(UniPoly::new(coeffs))
        }
        _ => Err("scalar must be a string or an array of strings".into()),
    }
}

fn mpoly_to_value(p: &MultiPolyT) -> Value {
    Value::Array(
        p.terms()
            .map(|(&(i, j, k), c)| {
                Value::Array(vec![
                    Value::from(i),
                    Value::from(j),
                    Value::from(k),
                    scalar_to_value(c),
                ])
            })
            .collect(),
    )
}

fn mpoly_from_value(v: &Value) -> Result<MultiPolyT, String> {
    let Value::Array(items) = v else {
        return Err("polynomial must be an array of terms".into());
    };
    let mut out = MultiPolyT::zero();
    for item in items {
        let Value::Array(parts) = item else {
            return Err("polynomial term must be an array".into());
        };
        if parts.len() != 4 {
            return Err("polynomial term must be [i, j, k, coeff]".into());
        }
        let mut e = [0u32; 3];
        for (slot, p) in e.iter_mut().zip(&parts[..3]) {
            let n = p
                .as_u64()
                .and_then(|n| n.to_u32())
                .ok_or("exponent must be a small nonnegative integer")?;
            *slot = n;
        }
        out.add_term((e[0], e[1], e[2]), scalar_from_value(&parts[3])?);
    }
    Ok(out)
}

fn domain_str(d: Domain) -> &'static str {
    match d {
        Domain::Reals => "reals",
        Domain::NonnegOrthant => "nonneg-orthant",
    }
}

fn domain_from_str(s: &str) -> Option<Domain> {
    match s {
        "reals" => Some(Domain::Reals),
        "nonneg-orthant" => Some(Domain::NonnegOrthant),
        _ => None,
    }
}

fn t_to_value(t: &ExactReal) -> Value {
    match t {
        ExactReal::Rational(r) => Value::String(rat_string(r)),
        ExactReal::Algebraic(x) => {
            let mut obj = Map::new();
            obj.insert(
                "defining".into(),
                Value::Array(
                    x.defining()
                        .coeffs()
                        .iter()
                        .map(|c| Value::String(rat_string(c)))
                        .collect(),
                ),
            );
            let (lo, hi) = x.interval();
            obj.insert(
                "interval".into(),
                Value::Array(vec![
                    Value::String(rat_string(lo)),
                    Value::String(rat_string(hi)),
                ]),
            );
            Value::Object(obj)
        }
    }
}

fn t_from_value(v: &Value) -> Result<ExactReal, String> {
    match v {
        Value::String(s) => Ok(ExactReal::Rational(
            parse_rational(s)?,
        )),
        Value::Object(obj) => {
            let defining = obj.get("defining").ok_or("t object needs 'defining'")?;
            let interval = obj.get("interval").ok_or("t object needs 'interval'")?;
            let poly = scalar_from_value(defining)?;
            if poly.is_zero() {
                return Err("t defining polynomial must be nonzero".into());
            }
            let Value::Array(ends) = interval else {
                return Err("t interval must be an array".into());
            };
            if ends.len() != 2 {
                return Err("t interval must have two endpoints".into());
            }
            let parse_end = |v: &Value| -> Result<Rational, String> {
                let Value::String(s) = v else {
                    return Err("interval endpoint must be a string".into());
                };
                parse_rational(s)
            };
            let lo = parse_end(&ends[0])?;
            let hi = parse_end(&ends[1])?;
            if lo >= hi {
                return Err("t interval must be nondegenerate".into());
            }
            let sf = poly.squarefree_part().integer_primitive();
            let n = sturm_root_count(
                &sf,
                &RealBound::Finite(lo.clone()),
                &RealBound::Finite(hi.clone()),
            );
            if n != 1 {
                return Err(format!("t interval isolates {n} roots, expected 1"));
            }
            Ok(ExactReal::Algebraic(AlgebraicNumber::from_isolating(
                &sf, lo, hi,
            )))
        }
        _ => Err("t must be a rational string or a defining/interval object".into()),
    }
}

fn term_to_value(term: &CertTerm) -> Value {
    let mut obj = Map::new();
    obj.insert("multiplier".into(), scalar_to_value(&term.multiplier));
    match &term.payload {
        TermPayload::Fact(name) => {
            obj.insert("fact".into(), Value::String(name.clone()));
        }
        TermPayload::Squares(parts) => {
            obj.insert(
                "square".into(),
                Value::Array(
                    parts
                        .iter()
                        .map(|p| {
                            let mut po = Map::new();
                            po.insert("coeff".into(), scalar_to_value(&p.coeff));
                            po.insert("base".into(), mpoly_to_value(&p.base));
                            Value::Object(po)
                        })
                        .collect(),
                ),
            );
        }
    }
    Value::Object(obj)
}

fn term_from_value(v: &Value) -> Result<CertTerm, String> {
    let Value::Object(obj) = v else {
        return Err("certificate term must be an object".into());
    };
    let multiplier = scalar_from_value(obj.get("multiplier").ok_or("term needs 'multiplier'")?)?;
    let has_fact = obj.contains_key("fact");
    let has_square = obj.contains_key("square");
    if has_fact == has_square {
        return Err("term must have exactly one of 'fact' or 'square'".into());
    }
    let payload = if has_fact {
        let Some(Value::String(name)) = obj.get("fact") else {
            return Err("term 'fact' must be a string".into());
        };
        TermPayload::Fact(name.clone())
    } else {
        let Some(Value::Array(items)) = obj.get("square") else {
            return Err("term 'square' must be an array".into());
        };
        let mut parts = Vec::with_capacity(items.len());
        for item in items {
            let Value::Object(po) = item else {
                return Err("square part must be an object".into());
            };
            let coeff = scalar_from_value(po.get("coeff").ok_or("square part needs 'coeff'")?)?;
            let base = mpoly_from_value(po.get("base").ok_or("square part needs 'base'")?)?;
            parts.push(SquarePart { coeff, base });
        }
        TermPayload::Squares(parts)
    };
    Ok(CertTerm {
        multiplier,
        payload,
    })
}

/// Canonical JSON for a certificate: object keys sorted, scalars in lowest
/// terms, terms sorted by their own serialization. Byte-stable across
/// serialize/deserialize round trips.
pub fn to_canonical_json(cert: &Certificate) -> String {
    let mut obj = Map::new();
    obj.insert("kind".into(), Value::String(cert.kind.as_str().into()));
    obj.insert(
        "domain".into(),
        Value::String(domain_str(cert.domain).into()),
    );
    let mut form = Map::new();
    form.insert("a".into(), Value::String(rat_string(&cert.form.a)));
    form.insert("b".into(), Value::String(rat_string(&cert.form.b)));
    form.insert("c".into(), Value::String(rat_string(&cert.form.c)));
    obj.insert("form".into(), Value::Object(form));
    if let Some(t) = &cert.t {
        obj.insert("t".into(), t_to_value(t));
    }
    let mut terms: Vec<Value> = cert.terms.iter().map(term_to_value).collect();
    terms.sort_by_key(|v| serde_json::to_string(v).expect("serializing a Value cannot fail"));
    obj.insert("terms".into(), Value::Array(terms));
    obj.insert("version".into(), Value::from(cert.version));
    serde_json::to_string(&Value::Object(obj)).expect("serializing a Value cannot fail")
}

/// Parse a certificate from JSON, validating structure. Semantic soundness
/// is [`verify`]'s job.
pub fn from_json_str(s: &str) -> Result<Certificate, String> {
    let v: Value = serde_json::from_str(s).map_err(|e| format!("invalid JSON: {e}"))?;
    let Value::Object(obj) = v else {
        return Err("certificate must be a JSON object".into());
    };
    for key in obj.keys() {
        if !matches!(key.as_str(), "kind" | "domain" | "form" | "t" | "terms" | "version") {
            return Err(format!("unknown certificate field '{key}'"));
        }
    }
    let kind = match obj.get("kind") {
        Some(Value::String(s)) => {
            CertKind::from_str(s).ok_or_else(|| format!("unknown certificate kind '{s}'"))?
        }
        _ => return Err("certificate needs a string 'kind'".into()),
    };
    let domain = match obj.get("domain") {
        Some(Value::String(s)) => {
            domain_from_str(s).ok_or_else(|| format!("unknown domain '{s}'"))?
        }
        _ => return Err("certificate needs a string 'domain'".into()),
    };
    let form = match obj.get("form") {
        Some(Value::Object(f)) => {
            let get = |k: &str| -> Result<Rational, String> {
                match f.get(k) {
                    Some(Value::String(s)) => {
                        parse_rational(s)
                    }
                    _ => Err(format!("form needs a string '{k}'")),
                }
            };
            QuarticForm::new(get("a")?, get("b")?, get("c")?)
        }
        _ => return Err("certificate needs a 'form' object".into()),
    };
    let t = match obj.get("t") {
        None => None,
        Some(v) => Some(t_from_value(v)?),
    };
    let terms = match obj.get("terms") {
        Some(Value::Array(items)) => items
            .iter()
            .map(term_from_value)
            .collect::<Result<Vec<_>, _>>()?,
        _ => return Err("certificate needs a 'terms' array".into()),
    };
    let version = match obj.get("version") {
        Some(v) => v
            .as_u64()
            .and_then(|n| n.to_u32())
            .ok_or("version must be a small integer")?,
        None => return Err("certificate needs a 'version'".into()),
    };
    Ok(Certificate {
        kind,
        domain,
        form,
        t,
        terms,
        version,
    })
}
