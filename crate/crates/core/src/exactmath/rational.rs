//! Arbitrary-precision rationals and exact string conversions.
//!
//! `Rational` is `num_rational::BigRational`, which already maintains the
//! invariants we rely on everywhere: lowest terms, denominator > 0.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from an integer pair. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_i(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Parse an exact scalar: an integer (`-3`), a fraction (`209/100`), or a
/// decimal with optional exponent (`2.09`, `1e-12`, `-0.5e3`). Decimals are
/// converted exactly — `2.09` becomes 209/100, never a float.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty scalar".into());
    }
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in {s:?}"))?;
        let den: BigInt = d
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in {s:?}"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(num, den));
    }
    // [sign] digits [. digits] [e [sign] digits]
    let (mantissa, exp10) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e.parse().map_err(|_| format!("bad exponent in {s:?}"))?;
            (m, exp)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(format!("no digits in {s:?}"));
    }
    let num: BigInt = digits.parse().map_err(|_| format!("bad number {s:?}"))?;
    let shift = exp10 - frac_part.len() as i64;
    let ten = BigInt::from(10);
    Ok(if shift >= 0 {
        Rational::from_integer(num * ten.pow(shift as u32))
    } else {
        Rational::new(num, ten.pow((-shift) as u32))
    })
}

/// Decimal string for `r`, rounded to `digits` places after the point.
/// Exact when `r` terminates within `digits`; used only for `*_approx`
/// output fields, never for computation.
pub fn dec_string(r: &Rational, digits: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let abs = r.abs();
    let scale = BigInt::from(10).pow(digits as u32);
    // round half away from zero
    let scaled = (abs.numer() * &scale * 2 + abs.denom()) / (abs.denom() * 2);
    let int = &scaled / &scale;
    let frac: BigInt = &scaled % &scale;
    if digits == 0 {
        return format!("{sign}{int}");
    }
    let frac_str = format!("{:0>width$}", frac.to_string(), width = digits);
    format!("{sign}{int}.{frac_str}")
}

/// Closest `f64` to `r` (for reporting and the sampling oracle).
pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Out-of-range BigInt conversion; clamp via sign.
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Best rational approximation to `x` with denominator at most `max_den`,
/// via continued-fraction convergents. Returns None for non-finite input.
pub fn rat_from_f64_approx(x: f64, max_den: u64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    // Continued-fraction expansion of |x|, tracking convergents p/q.
    let neg = x < 0.0;
    let mut v = x.abs();
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let bound = BigInt::from(max_den);
    for _ in 0..64 {
        let a = v.floor();
        if a > 1e18 {
            break;
        }
        let ai = BigInt::from(a as i64);
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        if q2 > bound {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = v - a;
        if frac < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1.is_zero() {
        return None;
    }
    let r = Rational::new(p1, q1);
    Some(if neg { -r } else { r })
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(r: &Rational) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals_exactly() {
        assert_eq!(parse_rational("209/100").unwrap(), rat(209, 100));
        assert_eq!(parse_rational("2.09").unwrap(), rat(209, 100));
        assert_eq!(parse_rational("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("3").unwrap(), rat_i(3));
        assert_eq!(parse_rational("1e-12").unwrap(), rat(1, 1_000_000_000_000));
        assert_eq!(parse_rational("2.5e2").unwrap(), rat_i(250));
        assert_eq!(parse_rational("-2.5e-1").unwrap(), rat(-1, 4));
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn decimal_strings_round_half_away() {
        assert_eq!(dec_string(&rat(1, 3), 6), "0.333333");
        assert_eq!(dec_string(&rat(2, 3), 6), "0.666667");
        assert_eq!(dec_string(&rat(-1, 2), 1), "-0.5");
        assert_eq!(dec_string(&rat(5, 1), 2), "5.00");
        assert_eq!(dec_string(&rat(209, 100), 4), "2.0900");
        assert_eq!(dec_string(&rat(15, 100), 1), "0.2"); // ties away from zero
    }

    #[test]
    fn continued_fraction_recovers_simple_fractions() {
        let r = rat_from_f64_approx(0.333333333333333, 1_000_000).unwrap();
        assert_eq!(r, rat(1, 3));
        let r = rat_from_f64_approx(-1.618033988749895, 1_000_000).unwrap();
        // golden ratio: best small-denominator approximations are Fibonacci
        // ratios; with bound 10^6 the error is far below f64 noise
        assert!((rat_to_f64(&r) + 1.618033988749895).abs() < 1e-11);
        assert!(*r.denom() <= num_bigint::BigInt::from(1_000_000));
        assert_eq!(rat_from_f64_approx(0.25, 100).unwrap(), rat(1, 4));
        assert!(rat_from_f64_approx(f64::NAN, 100).is_none());
    }
}
