//! Enclosures of n-th roots and fractional powers by exact bisection.

use num_traits::{One, Signed, Zero};

use super::interval::Interval;
use super::rational::{ceil_dyadic, floor_dyadic, max_r, to_f64, Rational};
use super::NumericsError;

fn pow_n(x: &Rational, n: u32) -> Rational {
    num_traits::pow::pow(x.clone(), n as usize)
}

fn bits_for(tol: &Rational) -> u32 {
    let t = to_f64(tol);
    let b = if t > 0.0 { (-t.log2()).ceil() as i64 + 4 } else { 64 };
    b.clamp(60, 4000) as u32
}

/// Bracket `[a, b]` with `a^n <= v <= b^n` and `b - a <= tol`.
fn bracket(v: &Rational, n: u32, tol: &Rational) -> (Rational, Rational) {
    if v.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    let bits = bits_for(tol);
    let seed = to_f64(v).powf(1.0 / n as f64);
    let (mut a, mut b) = if seed.is_finite() && seed > 0.0 {
        let lo = Rational::from_float(seed * (1.0 - 1e-12)).unwrap_or_else(Rational::zero);
        let hi = Rational::from_float(seed * (1.0 + 1e-12)).unwrap_or_else(|| max_r(v, &Rational::one()));
        let lo = floor_dyadic(&lo, bits);
        let hi = ceil_dyadic(&hi, bits);
        if pow_n(&lo, n) <= *v && pow_n(&hi, n) >= *v {
            (lo, hi)
        } else {
            (Rational::zero(), max_r(v, &Rational::one()))
        }
    } else {
        (Rational::zero(), max_r(v, &Rational::one()))
    };
    let two = Rational::from_integer(2.into());
    while &b - &a > *tol {
        let m = floor_dyadic(&((&a + &b) / &two), bits + 8);
        if m <= a || m >= b {
            break;
        }
        if pow_n(&m, n) <= *v {
            a = m;
        } else {
            b = m;
        }
    }
    (a, b)
}

/// Encloses `{t^(1/n) : t in x}` for `x >= 0`, within `tol` of the exact image.
pub fn root_enclosure(x: &Interval, n: u32, tol: &Rational) -> Result<Interval, NumericsError> {
    if n == 0 {
        return Err(NumericsError::Domain("root of order zero".into()));
    }
    if x.lo().is_negative() {
        return Err(NumericsError::Domain("root of a negative number".into()));
    }
    if !tol.is_positive() {
        return Err(NumericsError::Domain("tolerance must be positive".into()));
    }
    if n == 1 {
        return Ok(x.clone());
    }
    let half = tol / Rational::from_integer(2.into());
    let (lo, _) = bracket(x.lo(), n, &half);
    let (_, hi) = bracket(x.hi(), n, &half);
    Interval::new(lo, hi)
}

pub fn sqrt_enclosure(x: &Interval, tol: &Rational) -> Result<Interval, NumericsError> {
    root_enclosure(x, 2, tol)
}

/// Encloses `x^(p/q)` for `x > 0` (or `x >= 0` when `p >= 0`).
pub fn pow_frac(x: &Interval, p: i64, q: u32, tol: &Rational) -> Result<Interval, NumericsError> {
    if p < 0 {
        let inner = pow_frac(x, -p, q, tol)?;
        return inner.recip();
    }
    let r = root_enclosure(x, q, tol)?;
    Ok(r.powi(p as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::rat;

    #[test]
    fn perfect_square() {
        let r = root_enclosure(&Interval::from_int(4), 2, &rat(1, 1000)).unwrap();
        assert!(r.contains(&rat(2, 1)));
        assert!(r.width() <= rat(1, 1000));
    }

    #[test]
    fn soundness_of_endpoints() {
        let x = Interval::new(rat(2, 1), rat(3, 1)).unwrap();
        for n in 2..6 {
            let y = root_enclosure(&x, n, &rat(1, 1_000_000)).unwrap();
            assert!(pow_n(y.lo(), n) <= *x.hi());
            assert!(pow_n(y.hi(), n) >= *x.lo());
            assert!(pow_n(y.lo(), n) <= *x.lo());
            assert!(pow_n(y.hi(), n) >= *x.hi());
        }
    }

    #[test]
    fn negative_rejected() {
        let x = Interval::new(rat(-1, 1), rat(1, 1)).unwrap();
        assert!(root_enclosure(&x, 2, &rat(1, 10)).is_err());
    }

    #[test]
    fn tight_tolerance_refines() {
        let tol = Rational::new(1.into(), num_bigint::BigInt::from(10).pow(40));
        let y = root_enclosure(&Interval::from_int(2), 2, &tol).unwrap();
        assert!(y.width() <= tol);
    }

    #[test]
    fn fractional_power() {
        let y = pow_frac(&Interval::from_int(16), -5, 4, &rat(1, 1 << 30)).unwrap();
        assert!(y.contains(&rat(1, 32)));
    }
}
