//! Acceptance gate: the ten binding criteria for the engine, each as one
//! test emitting a single PASS line (the harness prints FAIL details on
//! assertion failure). Run with `cargo test --test acceptance`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symquartic::certificates::{
    cert_xyz, certify, from_json_str, to_canonical_json, verify, CertKind,
};
use symquartic::exactmath::{rat, rat_i, rat_to_f64, ExactReal, MultiPolyQ, Rational};
use symquartic::forms::{decide, w1, w2, w3, w4, Domain, QuarticForm};
use symquartic::frontier::{
    b_of_t, bmin_real, branch_points, c_of_t, case_intervals, cmin_nonneg, param_point, BoundKind,
    BoundResult, CminOutcome,
};
use symquartic::oracle::{numeric_min, VerdictHint};

fn eps() -> Rational {
    rat(1, 1_000_000_000_000)
}

fn approx_of(bound: &BoundResult) -> f64 {
    rat_to_f64(&bound.approx)
}

fn t_approx_of(bound: &BoundResult) -> f64 {
    match &bound.kind {
        BoundKind::Parametric { t } => rat_to_f64(&t.approx(&eps())),
        BoundKind::ClosedForm => panic!("expected a parametric bound"),
    }
}

/// random rational in [lo, hi] with the given denominator
fn rand_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> Rational {
    rat(rng.gen_range(lo * den..=hi * den), den)
}

#[test]
fn criterion_01_bmin_golden_ratio_threshold() {
    let start = Instant::now();
    let bound = bmin_real(&rat_i(2), &rat_i(4), &eps());
    let elapsed = start.elapsed();
    assert!(
        (approx_of(&bound) - 2.090169944).abs() < 1e-9,
        "value {}",
        approx_of(&bound)
    );
    let t = t_approx_of(&bound);
    assert!((t + 1.6180339887).abs() < 1e-9, "t {}", t);
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("PASS criterion 1: bmin(2,4) = 2.090169944 (t = -1.6180339887) in {elapsed:?}");
}

#[test]
fn criterion_02_bmin_second_decimal_example() {
    let start = Instant::now();
    let bound = bmin_real(&rat_i(-1), &rat_i(2), &eps());
    let elapsed = start.elapsed();
    assert!(
        (approx_of(&bound) - 0.305299773).abs() < 1e-8,
        "value {}",
        approx_of(&bound)
    );
    let t = t_approx_of(&bound);
    assert!((t + 0.27788).abs() < 1e-5, "t {}", t);
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("PASS criterion 2: bmin(-1,2) = 0.305299773 (t = -0.27788) in {elapsed:?}");
}

#[test]
fn criterion_03_cmin_decimal_examples() {
    let start = Instant::now();
    let CminOutcome::Bound(bound) = cmin_nonneg(&rat_i(-4), &rat_i(14), &eps()) else {
        panic!("cmin(-4,14) must be feasible");
    };
    let first = start.elapsed();
    assert!(
        (approx_of(&bound) + 6.72076).abs() < 1e-4,
        "value {}",
        approx_of(&bound)
    );
    let t = t_approx_of(&bound);
    assert!((t - 3.1951).abs() < 1e-4, "t {}", t);
    assert!(first.as_secs_f64() < 1.0, "took {first:?}");

    let start2 = Instant::now();
    let CminOutcome::Bound(bound) = cmin_nonneg(&rat_i(-6), &rat_i(31), &eps()) else {
        panic!("cmin(-6,31) must be feasible");
    };
    let second = start2.elapsed();
    assert!(
        (approx_of(&bound) + 18.131094).abs() < 1e-5,
        "value {}",
        approx_of(&bound)
    );
    let t = t_approx_of(&bound);
    assert!((t - 5.276).abs() < 1e-3, "t {}", t);
    assert!(second.as_secs_f64() < 1.0, "took {second:?}");
    println!(
        "PASS criterion 3: cmin(-4,14) = -6.72076 (t = 3.1951), cmin(-6,31) = -18.131094 (t = 5.276) in {first:?} + {second:?}"
    );
}

/// Sample a rational parameter strictly inside a case interval.
fn sample_t(rng: &mut ChaCha8Rng, a: &Rational) -> Option<Rational> {
    let intervals = case_intervals(a, Domain::Reals).ok()?;
    let iv = &intervals[rng.gen_range(0..intervals.len())];
    let coarse = rat(1, 1000);
    let lo = iv.lo.approx(&coarse);
    let hi = iv.hi.approx(&coarse);
    for _ in 0..32 {
        let lambda = rat(rng.gen_range(16..=48), 64);
        let t = &lo + &lambda * (&hi - &lo);
        // round to a modest denominator for speed
        let t = rat(
            (rat_to_f64(&t) * 1024.0).round() as i64,
            1024,
        );
        if t != rat_i(1) && iv.contains_rational(&t) {
            return Some(t);
        }
    }
    None
}

#[test]
fn criterion_04_parametric_identity_two_hundred_pairs() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0usize;
    while checked < 200 {
        // draw a across all four real case shapes in rotation
        let a = match checked % 4 {
            0 => rand_rat(&mut rng, 0, 4, 8),        // single interval, a > -1/2
            1 => rand_rat(&mut rng, -2, -1, 8),      // single interval, a < -1/2
            2 => rand_rat(&mut rng, 5, 12, 4),       // split intervals, a > 4
            3 => rand_rat(&mut rng, -10, -3, 4),     // split intervals, a < -2
            _ => unreachable!(),
        };
        if a == rat(-1, 2) {
            continue;
        }
        let Some(t) = sample_t(&mut rng, &a) else {
            continue;
        };
        let pp = param_point(&a, &t).expect("sampled t avoids the pole");
        let Some(k) = pp.k else { continue };
        // X, Y, Z quadratics of the split
        let quad = |e1: (u32, u32, u32), m1: (u32, u32, u32), m2: (u32, u32, u32), m3| {
            MultiPolyQ::from_terms(vec![
                (e1, rat_i(1)),
                (m1, pp.p.clone()),
                (m2, pp.p.clone()),
                (m3, pp.q.clone()),
            ])
        };
        let x = quad((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1));
        let y = quad((0, 2, 0), (0, 1, 1), (1, 1, 0), (1, 0, 1));
        let z = quad((0, 0, 2), (1, 0, 1), (0, 1, 1), (1, 1, 0));
        let combo = x
            .square()
            .add(&y.square())
            .add(&z.square())
            .add(&x.mul(&y).add(&y.mul(&z)).add(&z.mul(&x)).scale(&k));
        let form = QuarticForm::new(a.clone(), pp.bt.clone(), pp.ct.clone());
        assert_eq!(
            combo,
            form.expand(),
            "identity residual nonzero at a={a}, t={t}"
        );
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!("PASS criterion 4: zero residual for 200 random (a,t) pairs in {elapsed:?}");
}

#[test]
fn criterion_05_two_square_and_named_t_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    // two-square identity and the cyclic square form, 20 random a each
    for _ in 0..20 {
        let a = rand_rat(&mut rng, -12, 12, 16);
        let target = w4()
            .add(&w3().scale(&a))
            .add(&w2().scale(&(&a * &a - rat_i(1))))
            .sub(&w1().scale(&(&a * &a + rat_i(2) * &a)));
        // u^2 + v^2 - uv with u = (x-y)(x+y+az), v = (x-z)(x+z+ay)
        let (u, v) = symquartic::certificates::uv_bases(&a);
        assert_eq!(
            u.square().add(&v.square()).sub(&u.mul(&v)),
            target,
            "two-square identity fails at a={a}"
        );
        // 1/2 * sum over the cycle of (x-y)^2 (x+y+az)^2
        let lin = |p: (u32, u32, u32), q: (u32, u32, u32), r: (u32, u32, u32)| {
            MultiPolyQ::from_terms(vec![(p, rat_i(1)), (q, rat_i(-1))]).mul(
                &MultiPolyQ::from_terms(vec![(p, rat_i(1)), (q, rat_i(1)), (r, a.clone())]),
            )
        };
        let (x, y, z) = ((1, 0, 0), (0, 1, 0), (0, 0, 1));
        let cyc = lin(x, y, z)
            .square()
            .add(&lin(y, z, x).square())
            .add(&lin(z, x, y).square())
            .scale(&rat(1, 2));
        assert_eq!(cyc, target, "cyclic square form fails at a={a}");
    }

    // t = -2, a in [1,4]: f(a, 2a-2, 5a-8) = (x+y+z)^2 (x^2+y^2+z^2 + (a-2)(xy+yz+zx))
    for _ in 0..10 {
        let a = rand_rat(&mut rng, 1, 4, 8);
        let pp = param_point(&a, &rat_i(-2)).unwrap();
        assert_eq!(pp.bt, rat_i(2) * &a - rat_i(2));
        assert_eq!(pp.ct, rat_i(5) * &a - rat_i(8));
        let sum = MultiPolyQ::from_terms(vec![
            ((1, 0, 0), rat_i(1)),
            ((0, 1, 0), rat_i(1)),
            ((0, 0, 1), rat_i(1)),
        ]);
        let quad = MultiPolyQ::from_terms(vec![
            ((2, 0, 0), rat_i(1)),
            ((0, 2, 0), rat_i(1)),
            ((0, 0, 2), rat_i(1)),
            ((1, 1, 0), &a - rat_i(2)),
            ((0, 1, 1), &a - rat_i(2)),
            ((1, 0, 1), &a - rat_i(2)),
        ]);
        let form = QuarticForm::new(a.clone(), pp.bt.clone(), pp.ct.clone());
        assert_eq!(sum.square().mul(&quad), form.expand(), "t=-2 identity at a={a}");
    }

    // t = -1, a in [0,6]: w4 + a w3 + (2a-1) w2 + 4a w1 is the split with
    // p = q = 1, k = a/2 - 1
    for _ in 0..10 {
        let a = rand_rat(&mut rng, 0, 6, 8);
        let pp = param_point(&a, &rat_i(-1)).unwrap();
        assert_eq!(pp.bt, rat_i(2) * &a - rat_i(1));
        assert_eq!(pp.ct, rat_i(4) * &a);
        assert_eq!(pp.p, rat_i(1));
        assert_eq!(pp.q, rat_i(1));
        assert_eq!(pp.k, Some(&a / rat_i(2) - rat_i(1)));
        let split = split_combo(&pp.p, &pp.q, &pp.k.clone().unwrap());
        let form = QuarticForm::new(a.clone(), pp.bt.clone(), pp.ct.clone());
        assert_eq!(split, form.expand(), "t=-1 identity at a={a}");
    }

    // t = 0, a in [-4,-1]: w4 + a w3 - 2(a+1) w2 - a w1 is the split with
    // p = -1, q = 0, k = -a-2
    for _ in 0..10 {
        let a = rand_rat(&mut rng, -4, -1, 8);
        let pp = param_point(&a, &rat_i(0)).unwrap();
        assert_eq!(pp.bt, rat_i(-2) * (&a + rat_i(1)));
        assert_eq!(pp.ct, -a.clone());
        assert_eq!(pp.p, rat_i(-1));
        assert_eq!(pp.q, rat_i(0));
        assert_eq!(pp.k, Some(-a.clone() - rat_i(2)));
        let split = split_combo(&pp.p, &pp.q, &pp.k.clone().unwrap());
        let form = QuarticForm::new(a.clone(), pp.bt.clone(), pp.ct.clone());
        assert_eq!(split, form.expand(), "t=0 identity at a={a}");
    }
    println!(
        "PASS criterion 5: two-square, cyclic-square, and t = -2/-1/0 identities verified exactly"
    );
}

/// X^2+Y^2+Z^2 + k(XY+YZ+ZX) for the split quadratics at scalars (p, q).
fn split_combo(p: &Rational, q: &Rational, k: &Rational) -> MultiPolyQ {
    let quad = |e1: (u32, u32, u32), m1: (u32, u32, u32), m2: (u32, u32, u32), m3| {
        MultiPolyQ::from_terms(vec![
            (e1, rat_i(1)),
            (m1, p.clone()),
            (m2, p.clone()),
            (m3, q.clone()),
        ])
    };
    let x = quad((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1));
    let y = quad((0, 2, 0), (0, 1, 1), (1, 1, 0), (1, 0, 1));
    let z = quad((0, 0, 2), (1, 0, 1), (0, 1, 1), (1, 1, 0));
    x.square()
        .add(&y.square())
        .add(&z.square())
        .add(&x.mul(&y).add(&y.mul(&z)).add(&z.mul(&x)).scale(k))
}

#[test]
fn criterion_06_frontier_straddle() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let margin = rat(1, 1_000_000);
    let mut real_checked = 0;
    while real_checked < 30 {
        let a = rand_rat(&mut rng, -6, 6, 4);
        let c = rand_rat(&mut rng, -8, 8, 4);
        let bound = bmin_real(&a, &c, &eps());
        let above = QuarticForm::new(a.clone(), &bound.approx + &margin, c.clone());
        let below = QuarticForm::new(a.clone(), &bound.approx - &margin, c.clone());
        assert!(
            decide(&above, Domain::Reals).holds(),
            "must hold just above bmin at a={a}, c={c}"
        );
        assert!(
            !decide(&below, Domain::Reals).holds(),
            "must fail just below bmin at a={a}, c={c}"
        );
        real_checked += 1;
    }
    let mut orthant_checked = 0;
    while orthant_checked < 30 {
        let a = rand_rat(&mut rng, -6, 2, 4);
        let b = rand_rat(&mut rng, -4, 30, 4);
        let CminOutcome::Bound(bound) = cmin_nonneg(&a, &b, &eps()) else {
            continue;
        };
        let above = QuarticForm::new(a.clone(), b.clone(), &bound.approx + &margin);
        let below = QuarticForm::new(a.clone(), b.clone(), &bound.approx - &margin);
        assert!(
            decide(&above, Domain::NonnegOrthant).holds(),
            "must hold just above cmin at a={a}, b={b}"
        );
        assert!(
            !decide(&below, Domain::NonnegOrthant).holds(),
            "must fail just below cmin at a={a}, b={b}"
        );
        orthant_checked += 1;
    }
    println!("PASS criterion 6: decide flips across threshold +/- 1e-6 on 30 + 30 instances");
}

#[test]
fn criterion_07_decide_oracle_grid_agreement() {
    let start = Instant::now();
    let mut cells = 0u64;
    let mut contradictions = Vec::new();
    for ia in -10..=10i64 {
        for ib in -10..=10i64 {
            for ic in -10..=10i64 {
                let form = QuarticForm::new(rat(ia, 2), rat(ib, 2), rat(ic, 2));
                for domain in [Domain::Reals, Domain::NonnegOrthant] {
                    cells += 1;
                    let verdict = decide(&form, domain);
                    let report = numeric_min(&form, domain, 10_000, cells);
                    if report.hint == VerdictHint::LikelyFails && verdict.holds() {
                        contradictions.push((form.clone(), domain, report.min_estimate));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        contradictions.is_empty(),
        "oracle-negative/decide-holds contradictions: {contradictions:?}"
    );
    assert!(elapsed.as_secs_f64() < 300.0, "took {elapsed:?}");
    println!(
        "PASS criterion 7: zero oracle-negative/decide-holds contradictions on {cells} grid cells in {elapsed:?}"
    );
}

#[test]
fn criterion_08_minus_half_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let a = rat(-1, 2);
    for _ in 0..50 {
        let b = rand_rat(&mut rng, -6, 6, 16);
        let c = rand_rat(&mut rng, -6, 6, 16);
        let threshold = std::cmp::max(-c.clone(), &c / rat_i(2) - rat(9, 8));
        let expected = b >= threshold;
        let got = decide(&QuarticForm::new(a.clone(), b.clone(), c.clone()), Domain::Reals)
            .holds();
        assert_eq!(got, expected, "mismatch at b={b}, c={c}");
    }
    println!("PASS criterion 8: decide matches b >= max(-c, c/2 - 9/8) on 50 random (b,c)");
}

#[test]
fn criterion_09_branch_value_typo_resolution() {
    for a in [rat_i(6), rat_i(-4)] {
        let bp = branch_points(&a).expect("branch points exist for these a");
        let correct_c = &a * &a / rat_i(2) + &a;
        let wrong_c = &a * &a / rat_i(2) + rat_i(2);
        let expected_b = &a * &a / rat_i(4) + rat_i(2);
        for t in [&bp.t1, &bp.t2] {
            let ExactReal::Rational(t) = t else {
                panic!("branch parameters are rational at a={a}")
            };
            assert_eq!(c_of_t(&a, t).unwrap(), correct_c, "c at branch, a={a}");
            assert_ne!(c_of_t(&a, t).unwrap(), wrong_c, "typo value must differ, a={a}");
            assert_eq!(b_of_t(&a, t).unwrap(), expected_b, "b at branch, a={a}");
        }
    }
    println!(
        "PASS criterion 9: c(t1) = c(t2) = a^2/2 + a and b(t1) = b(t2) = a^2/4 + 2 at a = 6, -4"
    );
}

#[test]
fn criterion_10_certificate_round_trips() {
    // (a, t) pairs with their curve points, over the reals
    let named: &[(Rational, Rational)] = &[
        (rat_i(2), rat_i(-1)),
        (rat_i(2), rat_i(-3)),
        (rat(19, 4), rat_i(-1)),
        (rat(19, 4), rat_i(-4)),
        (rat_i(-2), rat_i(1)),
    ];
    for (a, t) in named {
        let pp = param_point(a, t).unwrap();
        if *a == rat(19, 4) {
            assert_eq!(pp.bt, rat(17, 2), "named threshold at a=19/4");
        }
        let form = QuarticForm::new(a.clone(), pp.bt.clone(), pp.ct.clone());
        let cert = cert_xyz(a, t, &pp.bt, &pp.ct, Domain::Reals).unwrap();
        let parsed = from_json_str(&to_canonical_json(&cert)).unwrap();
        assert!(
            verify(&parsed, &form).is_valid(),
            "round trip failed at a={a}, t={t}"
        );
    }
    // Schur on the octant
    let schur = QuarticForm::from_i64(-1, 0, 1);
    let cert = certify(&schur, Domain::NonnegOrthant).unwrap();
    assert_eq!(cert.kind, CertKind::SchurConic);
    let parsed = from_json_str(&to_canonical_json(&cert)).unwrap();
    assert!(verify(&parsed, &schur).is_valid(), "Schur round trip failed");
    println!("PASS criterion 10: certify + verify Valid on all named instances");
}
