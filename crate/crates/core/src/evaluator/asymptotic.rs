//! Leading-order far-field values of the tritronquée with their error radii.

use super::complex::{float_to_f64, ComplexValue, Work, RM};
use super::frames::z_to_x;
use super::EvalError;
use crate::certificates::check_omega_i;
use crate::numerics::rational::to_f64;
use crate::numerics::{int, rat, Interval, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionKind {
    /// `x` on the positive imaginary axis, `|x| >= rho`.
    OmegaI,
    /// `|x| >= rho >= 3`, `arg x` in `[-pi/2, -pi/4]`.
    Omega4,
}

#[derive(Clone, Debug)]
pub struct Region {
    pub kind: RegionKind,
    pub rho: Rational,
}

impl Region {
    pub fn omega_i(rho: &Rational) -> Region {
        Region { kind: RegionKind::OmegaI, rho: rho.clone() }
    }

    pub fn omega_4(rho: &Rational) -> Region {
        Region { kind: RegionKind::Omega4, rho: rho.clone() }
    }
}

#[derive(Clone, Debug)]
pub struct Asymptotic {
    pub value: ComplexValue,
    pub error_bound: f64,
    pub x: ComplexValue,
}

/// Slack for the on-ray and sector tests, relative to `|x|`.
const ANGLE_SLACK: f64 = 1e-25;

fn base_factor(z: &ComplexValue, x: &ComplexValue, w: &Work) -> Result<(ComplexValue, ComplexValue), EvalError> {
    let six = w.int(6);
    let root = ComplexValue::i(w).mul(&z.div_real(&six, w).sqrt(w), w);
    let x2 = x.sqr(w);
    let corr = ComplexValue::from_real(w.ratio(4, 25), w).div(&x2, w)?;
    Ok((root, ComplexValue::one(w).sub(&corr, w)))
}

/// `h0(x)` with `xi = S e^{-x} / sqrt(x)`, `S = i sqrt(6/(5 pi))`.
pub fn h0_value(x: &ComplexValue, w: &mut Work) -> Result<ComplexValue, EvalError> {
    let p = w.bits();
    let pi = w.pi();
    let s_abs = w.sqrt(&w.int(6).div(&pi.mul(&w.int(5), p, RM), p, RM));
    let stokes = ComplexValue::new(w.int(0), s_abs);
    let xi = stokes.mul(&x.neg().exp(w), w).div(&x.sqrt(w), w)?;
    let poly = |cs: &[(i64, i64)], w: &Work| -> ComplexValue {
        let mut acc = ComplexValue::zero(w);
        for &(n, d) in cs.iter().rev() {
            acc = acc.mul(&xi, w).add(&ComplexValue::from_real(w.ratio(n, d), w), w);
        }
        acc.mul(&xi, w)
    };
    let lead = poly(&[(1, 1), (1, 6), (1, 48), (1, 432), (5, 20736)], w);
    let first = poly(&[(-1, 8), (-11, 72), (-43, 1152)], w);
    let second = poly(&[(9, 128)], w);
    let inv = x.recip(w)?;
    Ok(lead.add(&inv.mul(&first.add(&inv.mul(&second, w), w), w), w))
}

/// `y(z)` from the far-field form, with a bound on the neglected part.
pub fn asymptotic_y(z: &ComplexValue, region: &Region, w: &mut Work) -> Result<Asymptotic, EvalError> {
    let rho = region.rho.clone();
    let x = z_to_x(z, w)?;
    let ax = float_to_f64(&x.abs(w));
    if ax < to_f64(&rho) {
        return Err(EvalError::Region(format!("|x| = {ax} is below rho = {}", to_f64(&rho))));
    }
    let (xr, xi) = x.to_f64();
    let (root, head) = base_factor(z, &x, w)?;
    match region.kind {
        RegionKind::OmegaI => {
            if xi <= 0.0 || xr.abs() > ANGLE_SLACK * ax {
                return Err(EvalError::Region("x must lie on the positive imaginary axis".into()));
            }
            let pre = check_omega_i(&Interval::point(rho.clone()), &rat(1, 40));
            if !pre.verdict {
                return Err(EvalError::Region("far-field contraction fails at this rho with eps = 1/40".into()));
            }
            let value = root.mul(&head, w);
            let weight = root.abs_f64() / ax.sqrt();
            let norm = to_f64(&(rat(41, 40) * rat(784, 3125)));
            Ok(Asymptotic { value, error_bound: weight * norm * ax.powf(-2.5), x })
        }
        RegionKind::Omega4 => {
            if rho < int(3) {
                return Err(EvalError::Region("omega_4 needs rho >= 3".into()));
            }
            let arg = xi.atan2(xr);
            let (lo, hi) = (-std::f64::consts::FRAC_PI_2, -std::f64::consts::FRAC_PI_4);
            if arg < lo - ANGLE_SLACK.max(1e-15) || arg > hi + 1e-15 {
                return Err(EvalError::Region(format!("arg x = {arg} outside [-pi/2, -pi/4]")));
            }
            let h0 = h0_value(&x, w)?;
            let value = root.mul(&head.add(&h0, w), w);
            Ok(Asymptotic { value, error_bound: root.abs_f64() * 4.0 * ax.powi(-3), x })
        }
    }
}
