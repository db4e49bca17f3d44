//! Rigorous enclosures of `I(alpha) = integral over [-1, inf) of (1+p^2)^(-alpha) dp`.

use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::numerics::rational::ceil_dyadic;
use crate::numerics::{int, pow_frac, rat, Interval, NumericsError, Rational};

pub const DEFAULT_CUTOFF: i64 = 64;
pub const DEFAULT_PANELS: u32 = 16384;
const ROUND_BITS: u32 = 96;

#[derive(Clone, Debug, Serialize)]
pub struct QuadratureEnclosure {
    #[serde(serialize_with = "ser_rat")]
    pub alpha: Rational,
    #[serde(skip)]
    pub value: Interval,
    #[serde(serialize_with = "ser_rat")]
    pub cutoff: Rational,
    pub panels: u32,
    /// Total midpoint-rule remainder bound.
    #[serde(skip)]
    pub remainder: Rational,
    #[serde(skip)]
    pub tail: Interval,
}

fn ser_rat<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::numerics::rational::format_rational(r))
}

/// Splits `alpha` as `n/4` when possible, else errors.
fn quarter(alpha: &Rational) -> Result<(i64, u32), NumericsError> {
    let a = alpha * int(4);
    if !a.is_integer() {
        let (n, d) = (alpha.numer().to_i64(), alpha.denom().to_u32());
        return match (n, d) {
            (Some(n), Some(d)) => Ok((n, d)),
            _ => Err(NumericsError::Domain("exponent too large".into())),
        };
    }
    Ok((a.to_integer().to_i64().ok_or_else(|| NumericsError::Domain("exponent too large".into()))?, 4))
}

/// Encloses `v^(-num/den)` for `v >= 1` by widening an f64 estimate and
/// confirming `lo^den v^num <= 1 <= hi^den v^num` exactly.
fn neg_power(v: &Rational, num: i64, den: u32, tol: &Rational) -> Result<Interval, NumericsError> {
    let est = crate::numerics::rational::to_f64(v).powf(-(num as f64) / den as f64);
    if est.is_finite() && est > 0.0 && num > 0 {
        let lo = Rational::from_float(est * (1.0 - 1e-13));
        let hi = Rational::from_float(est * (1.0 + 1e-13));
        if let (Some(lo), Some(hi)) = (lo, hi) {
            let vn = num_traits::pow::pow(v.clone(), num as usize);
            let one = Rational::one();
            if num_traits::pow::pow(lo.clone(), den as usize) * &vn <= one
                && num_traits::pow::pow(hi.clone(), den as usize) * &vn >= one
            {
                return Interval::new(lo, hi);
            }
        }
    }
    pow_frac(&Interval::point(v.clone()), -num, den, tol)
}

/// Upper bound of `|f''|` on `[a, b]`, with
/// `f''(p) = 2 alpha (1+p^2)^(-alpha-2) ((2 alpha + 1) p^2 - 1)`.
/// Uses `(1+p^2)^(-alpha-2) <= (1+p_min^2)^(-floor(alpha)-2)`.
fn second_derivative_bound(alpha: &Rational, a: &Rational, b: &Rational) -> Rational {
    let p = Interval::span(a.clone(), b.clone());
    let sq = p.sqr();
    let poly = sq.scale(&(alpha * int(2) + int(1))).add_rat(&int(-1)).mag();
    let base = Rational::one() + sq.lo();
    let k = alpha.floor().to_integer().to_u32().unwrap_or(0) + 2;
    alpha * int(2) * poly / num_traits::pow::pow(base, k as usize)
}

pub fn quad_enclosure(alpha: &Rational, cutoff: &Rational, panels: u32) -> Result<QuadratureEnclosure, NumericsError> {
    if *alpha <= rat(1, 2) {
        return Err(NumericsError::Domain("integral diverges for alpha <= 1/2".into()));
    }
    if *cutoff < Rational::one() || panels == 0 {
        return Err(NumericsError::Domain("need cutoff >= 1 and at least one panel".into()));
    }
    let (num, den) = quarter(alpha)?;
    let tol = rat(1, 1) / Rational::from_integer(num_bigint::BigInt::one() << 72u32);
    let h = (cutoff + int(1)) / int(panels as i64);
    let h3_24 = &h * &h * &h / int(24);
    let pieces: Vec<Result<(Interval, Rational), NumericsError>> = (0..panels)
        .into_par_iter()
        .map(|i| {
            let a = int(-1) + &h * int(i as i64);
            let b = &a + &h;
            let m = (&a + &b) / int(2);
            let v = Rational::one() + &m * &m;
            let f = neg_power(&v, num, den, &tol)?.scale(&h).round_outward(ROUND_BITS);
            Ok((f, ceil_dyadic(&(&h3_24 * second_derivative_bound(alpha, &a, &b)), ROUND_BITS)))
        })
        .collect();
    let mut sum = Interval::zero();
    let mut remainder = Rational::from_integer(0.into());
    for p in pieces {
        let (f, r) = p?;
        sum = sum.add(&f);
        remainder += r;
    }
    // integral of p^(-2 alpha) over [T, inf) = T^(1 - 2 alpha)/(2 alpha - 1)
    let two_a = alpha * int(2);
    let expo = Rational::one() - &two_a;
    let (en, ed) = (expo.numer().to_i64().unwrap_or(i64::MIN), expo.denom().to_u32().unwrap_or(1));
    let tail_hi = pow_frac(&Interval::point(cutoff.clone()), en, ed, &tol)?.scale(&(Rational::one() / (two_a - int(1))));
    let tail = Interval::span(Rational::from_integer(0.into()), tail_hi.hi().clone());
    let value = Interval::span(sum.lo() - &remainder, sum.hi() + &remainder + tail.hi());
    Ok(QuadratureEnclosure { alpha: alpha.clone(), value, cutoff: cutoff.clone(), panels, remainder, tail })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_one_is_arctan() {
        // integral = pi/2 + pi/4 = 3 pi / 4
        let q = quad_enclosure(&int(1), &int(64), 2048).unwrap();
        let three_pi_4 = crate::numerics::pi_enclosure().scale(&rat(3, 4));
        assert!(q.value.contains_interval(&three_pi_4));
        assert!(q.value.width() < rat(1, 50));
    }

    #[test]
    fn verified_power_matches_bisection() {
        let tol = rat(1, 1) / Rational::from_integer(num_bigint::BigInt::one() << 80u32);
        for v in [rat(1, 1), rat(5, 4), rat(3217, 1000), rat(4097, 1)] {
            let fast = neg_power(&v, 7, 4, &tol).unwrap();
            let slow = pow_frac(&Interval::point(v.clone()), -7, 4, &tol).unwrap();
            assert!(fast.intersect(&slow).is_some());
            assert!(fast.width() < rat(1, 1_000_000_000_000));
        }
    }

    #[test]
    fn diverging_rejected() {
        assert!(quad_enclosure(&rat(1, 2), &int(64), 16).is_err());
        assert!(quad_enclosure(&rat(7, 4), &rat(1, 2), 16).is_err());
    }

    #[test]
    fn tail_term_included() {
        let q = quad_enclosure(&rat(7, 4), &int(64), 256).unwrap();
        assert!(q.tail.hi() > &rat(1, 100_000));
        assert!(q.value.width() >= *q.tail.hi());
    }

    #[test]
    fn refinement_shrinks_width() {
        let a = quad_enclosure(&rat(9, 4), &int(64), 512).unwrap();
        let b = quad_enclosure(&rat(9, 4), &int(64), 1024).unwrap();
        assert!(b.value.width() < a.value.width());
        assert!(b.value.hi() <= &(a.value.hi() + a.tail.hi()));
    }
}
