//! Floating-point falsification and minimization, used to cross-validate
//! the exact decision procedure and to hunt for small exact
//! counterexamples.
//!
//! Degree-4 homogeneity makes a compact slice sufficient: the reals are
//! searched over the slice `max(|x|,|y|,|z|) = 1` and the nonnegative
//! octant over the simplex `x + y + z = 1`. The search is stratified
//! sampling followed by Nelder-Mead descent from the best seeds, fully
//! deterministic for a fixed seed and budget.

use crate::exactmath::{rat_from_f64_approx, rat_i, rat_to_f64};
use crate::forms::{Counterexample, Domain, QuarticForm};
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictHint {
    LikelyHolds,
    LikelyFails,
}

/// Result of a numeric minimization run.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    /// Estimated minimum of the form over the search slice, evaluated at
    /// `argmin`.
    pub min_estimate: f64,
    /// Approximate minimizer, rescaled so its largest coordinate magnitude
    /// is 1.
    pub argmin: [f64; 3],
    /// Total number of form evaluations spent.
    pub samples: u64,
    pub hint: VerdictHint,
}

/// Form evaluation with pre-converted float coefficients.
struct FastForm {
    a: f64,
    b: f64,
    c: f64,
}

impl FastForm {
    fn new(form: &QuarticForm) -> Self {
        FastForm {
            a: rat_to_f64(&form.a),
            b: rat_to_f64(&form.b),
            c: rat_to_f64(&form.c),
        }
    }

    fn eval(&self, x: f64, y: f64, z: f64) -> f64 {
        let (x2, y2, z2) = (x * x, y * y, z * z);
        let w4 = x2 * x2 + y2 * y2 + z2 * z2;
        let w3 = x2 * x * (y + z) + y2 * y * (x + z) + z2 * z * (x + y);
        let w2 = x2 * y2 + y2 * z2 + z2 * x2;
        let w1 = x * y * z * (x + y + z);
        w4 + self.a * w3 + self.b * w2 + self.c * w1
    }
}

/// Map chart coordinates to a point of the search slice.
///
/// Reals: any slice point is a coordinate permutation and global sign flip
/// of `(1, u, v)` with `|u|, |v| <= 1` (the form is symmetric and even under
/// the global flip), so the chart `(1, u, v)` rescaled by the largest
/// magnitude covers the whole slice. Octant: fold `(u, v)` into the
/// triangle and complete with `z = 1 - u - v`.
fn chart_point(domain: Domain, u: f64, v: f64) -> [f64; 3] {
    match domain {
        Domain::Reals => {
            let m = 1.0_f64.max(u.abs()).max(v.abs());
            [1.0 / m, u / m, v / m]
        }
        Domain::NonnegOrthant => {
            let u0 = u.clamp(0.0, 1.0);
            let v0 = v.clamp(0.0, 1.0);
            let (u0, v0) = if u0 + v0 > 1.0 {
                (1.0 - v0, 1.0 - u0)
            } else {
                (u0, v0)
            };
            [u0, v0, 1.0 - u0 - v0]
        }
    }
}

struct Search<'a> {
    form: &'a FastForm,
    domain: Domain,
    evals: u64,
}

impl Search<'_> {
    fn value(&mut self, u: f64, v: f64) -> f64 {
        let p = chart_point(self.domain, u, v);
        self.evals += 1;
        self.form.eval(p[0], p[1], p[2])
    }
}

/// One run of 2-D Nelder-Mead descent. Returns the best vertex found.
fn nelder_mead(search: &mut Search<'_>, start: (f64, f64), step: f64) -> (f64, (f64, f64)) {
    let mut pts = [
        start,
        (start.0 + step, start.1),
        (start.0, start.1 + step),
    ];
    let mut vals = [
        search.value(pts[0].0, pts[0].1),
        search.value(pts[1].0, pts[1].1),
        search.value(pts[2].0, pts[2].1),
    ];
    for _ in 0..120 {
        // order the simplex: index 0 best, index 2 worst
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| vals[i].partial_cmp(&vals[j]).unwrap());
        let (b, m, w) = (order[0], order[1], order[2]);
        let spread = vals[w] - vals[b];
        let diam = (pts[b].0 - pts[w].0).abs()
            + (pts[b].1 - pts[w].1).abs()
            + (pts[b].0 - pts[m].0).abs()
            + (pts[b].1 - pts[m].1).abs();
        if spread.abs() < 1e-15 * (1.0 + vals[b].abs()) && diam < 1e-12 {
            break;
        }
        let centroid = (
            (pts[b].0 + pts[m].0) / 2.0,
            (pts[b].1 + pts[m].1) / 2.0,
        );
        let reflect = (
            centroid.0 + (centroid.0 - pts[w].0),
            centroid.1 + (centroid.1 - pts[w].1),
        );
        let fr = search.value(reflect.0, reflect.1);
        if fr < vals[b] {
            let expand = (
                centroid.0 + 2.0 * (centroid.0 - pts[w].0),
                centroid.1 + 2.0 * (centroid.1 - pts[w].1),
            );
            let fe = search.value(expand.0, expand.1);
            if fe < fr {
                pts[w] = expand;
                vals[w] = fe;
            } else {
                pts[w] = reflect;
                vals[w] = fr;
            }
        } else if fr < vals[m] {
            pts[w] = reflect;
            vals[w] = fr;
        } else {
            let contract = (
                centroid.0 + 0.5 * (pts[w].0 - centroid.0),
                centroid.1 + 0.5 * (pts[w].1 - centroid.1),
            );
            let fc = search.value(contract.0, contract.1);
            if fc < vals[w] {
                pts[w] = contract;
                vals[w] = fc;
            } else {
                // shrink toward the best vertex
                for i in [m, w] {
                    pts[i] = (
                        pts[b].0 + 0.5 * (pts[i].0 - pts[b].0),
                        pts[b].1 + 0.5 * (pts[i].1 - pts[b].1),
                    );
                    vals[i] = search.value(pts[i].0, pts[i].1);
                }
            }
        }
    }
    let mut best = 0;
    for i in 1..3 {
        if vals[i] < vals[best] {
            best = i;
        }
    }
    (vals[best], pts[best])
}

/// Estimate the minimum of the form over the domain's compact slice with a
/// given sampling budget. Deterministic for fixed seed and budget.
pub fn numeric_min(form: &QuarticForm, domain: Domain, budget: u64, seed: u64) -> OracleReport {
    assert!(budget >= 1, "budget must be at least 1");
    let fast = FastForm::new(form);
    let mut search = Search {
        form: &fast,
        domain,
        evals: 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let (lo, hi) = match domain {
        Domain::Reals => (-1.0, 1.0),
        Domain::NonnegOrthant => (0.0, 1.0),
    };
    let strata = (budget as f64).sqrt().ceil() as u64;
    let cell = (hi - lo) / strata as f64;

    // keep the best seeds for local descent
    const KEEP: usize = 32;
    let mut best_seeds: Vec<(f64, (f64, f64))> = Vec::with_capacity(KEEP + 1);
    let push_seed = |val: f64, pt: (f64, f64), seeds: &mut Vec<(f64, (f64, f64))>| {
        let at = seeds
            .binary_search_by(|probe| probe.0.partial_cmp(&val).unwrap())
            .unwrap_or_else(|e| e);
        if at < KEEP {
            seeds.insert(at, (val, pt));
            seeds.truncate(KEEP);
        }
    };

    let mut drawn = 0u64;
    'outer: for i in 0..strata {
        for j in 0..strata {
            if drawn == budget {
                break 'outer;
            }
            drawn += 1;
            let u = lo + (i as f64 + rng.gen_range(0.0..1.0)) * cell;
            let v = lo + (j as f64 + rng.gen_range(0.0..1.0)) * cell;
            let val = search.value(u, v);
            push_seed(val, (u, v), &mut best_seeds);
        }
    }

    let mut best = best_seeds[0];
    for &(_, start) in best_seeds.clone().iter() {
        let (val, pt) = nelder_mead(&mut search, start, cell.max(1e-3));
        if val < best.0 {
            best = (val, pt);
        }
    }

    // report at the max-normalized representative of the best ray
    let p = chart_point(domain, best.1 .0, best.1 .1);
    let m = p[0].abs().max(p[1].abs()).max(p[2].abs());
    let argmin = [p[0] / m, p[1] / m, p[2] / m];
    let min_estimate = fast.eval(argmin[0], argmin[1], argmin[2]);

    let scale = 1.0 + fast.a.abs() + fast.b.abs() + fast.c.abs();
    let hint = if min_estimate < -1e-9 * scale {
        VerdictHint::LikelyFails
    } else {
        VerdictHint::LikelyHolds
    };
    OracleReport {
        min_estimate,
        argmin,
        samples: search.evals,
        hint,
    }
}

/// Round a clearly negative numeric minimizer to an exact rational
/// counterexample, escalating the denominator bound until the exact value
/// is negative. Returns None when the numeric search finds no clearly
/// negative value or no nearby rational point evaluates negative.
pub fn find_counterexample(
    form: &QuarticForm,
    domain: Domain,
    budget: u64,
    seed: u64,
) -> Option<Counterexample> {
    let report = numeric_min(form, domain, budget, seed);
    if report.hint != VerdictHint::LikelyFails {
        return None;
    }
    for cap in [1u64, 10, 100, 1_000, 10_000, 100_000, 1_000_000] {
        let mut point = [rat_i(0), rat_i(0), rat_i(0)];
        for (slot, &coord) in point.iter_mut().zip(report.argmin.iter()) {
            *slot = rat_from_f64_approx(coord, cap)?;
        }
        if domain == Domain::NonnegOrthant && point.iter().any(|c| c.is_negative()) {
            continue;
        }
        let value = form.eval(&point[0], &point[1], &point[2]);
        if value.is_negative() {
            return Some(Counterexample { point, value });
        }
    }
    None
}
