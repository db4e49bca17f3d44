//! Coordinate frames: `z` (the equation), `x` (far field) and `t` (inner segment).
//!
//! `x = e^{i pi/4} (24 z)^{5/4} / 30` on the principal branch, `z = -t e^{i pi/5}`,
//! and `g(t) = e^{2 pi i/5} y(z)`, `g'(t) = -e^{3 pi i/5} y'(z)`.

use serde::Serialize;

use super::complex::{ComplexValue, Work, RM};
use super::EvalError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Frame {
    Z,
    X,
    T,
}

impl Frame {
    pub fn parse(s: &str) -> Option<Frame> {
        match s {
            "z" => Some(Frame::Z),
            "x" => Some(Frame::X),
            "t" => Some(Frame::T),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FramePoint {
    pub z: ComplexValue,
    /// Absent at `z = 0`.
    pub x: Option<ComplexValue>,
    /// Real on the inner segment, complex elsewhere.
    pub t: ComplexValue,
    pub frame: Frame,
}

impl FramePoint {
    pub fn coord(&self) -> Option<&ComplexValue> {
        match self.frame {
            Frame::Z => Some(&self.z),
            Frame::X => self.x.as_ref(),
            Frame::T => Some(&self.t),
        }
    }
}

pub fn z_to_x(z: &ComplexValue, w: &mut Work) -> Result<ComplexValue, EvalError> {
    if z.is_zero() {
        return Err(EvalError::Domain("the x frame is undefined at z = 0".into()));
    }
    let e = w.ratio(5, 4);
    let p = z.scale_int(24, w).powr(&e, w)?;
    let rot = ComplexValue::root_of_unity(1, 4, w);
    Ok(p.mul(&rot, w).div_real(&w.int(30), w))
}

/// Inverse of [`z_to_x`] with `arg z` in `[-3 pi/5, pi)`.
///
/// The rays `arg z = -3 pi/5` and `arg z = pi` share their image, and points on
/// the latter come back on the former.
pub fn x_to_z(x: &ComplexValue, w: &mut Work) -> Result<ComplexValue, EvalError> {
    if x.is_zero() {
        return Err(EvalError::Domain("x = 0 has no preimage".into()));
    }
    let rot = ComplexValue::root_of_unity(-1, 4, w);
    let v = x.mul(&rot, w).scale_int(30, w);
    let p = w.bits();
    let mut theta = v.arg(w);
    let lower = w.pi_frac(-3, 4).sub(&w.real(f64::powi(2.0, -64)), p, RM);
    if theta.cmp(&lower).unwrap_or(0) < 0 {
        let two_pi = w.pi_frac(2, 1);
        theta = theta.add(&two_pi, p, RM);
    }
    let four_fifths = w.ratio(4, 5);
    let log_r = w.ln(&v.abs(w)).mul(&four_fifths, p, RM);
    let r = w.exp(&log_r);
    let ang = theta.mul(&four_fifths, p, RM);
    Ok(ComplexValue::polar(&r, &ang, w).div_real(&w.int(24), w))
}

pub fn z_to_t(z: &ComplexValue, w: &mut Work) -> ComplexValue {
    z.mul(&ComplexValue::root_of_unity(-1, 5, w), w).neg()
}

pub fn t_to_z(t: &ComplexValue, w: &mut Work) -> ComplexValue {
    t.mul(&ComplexValue::root_of_unity(1, 5, w), w).neg()
}

/// Map a point given in `from` coordinates into all frames, tagged `to`.
pub fn frame_map(p: &ComplexValue, from: Frame, to: Frame, w: &mut Work) -> Result<FramePoint, EvalError> {
    let z = match from {
        Frame::Z => p.clone(),
        Frame::X => x_to_z(p, w)?,
        Frame::T => t_to_z(p, w),
    };
    let x = match from {
        Frame::X => Some(p.clone()),
        _ if z.is_zero() => None,
        _ => Some(z_to_x(&z, w)?),
    };
    if to == Frame::X && x.is_none() {
        return Err(EvalError::Domain("the x frame is undefined at z = 0".into()));
    }
    let t = match from {
        Frame::T => p.clone(),
        _ => z_to_t(&z, w),
    };
    Ok(FramePoint { z, x, t, frame: to })
}

/// `(y, y') -> (g, g')`.
pub fn y_to_g(y: &ComplexValue, yp: &ComplexValue, w: &mut Work) -> (ComplexValue, ComplexValue) {
    let g = y.mul(&ComplexValue::root_of_unity(2, 5, w), w);
    let gp = yp.mul(&ComplexValue::root_of_unity(3, 5, w), w).neg();
    (g, gp)
}

/// `(g, g') -> (y, y')`.
pub fn g_to_y(g: &ComplexValue, gp: &ComplexValue, w: &mut Work) -> (ComplexValue, ComplexValue) {
    let y = g.mul(&ComplexValue::root_of_unity(-2, 5, w), w);
    let yp = gp.mul(&ComplexValue::root_of_unity(-3, 5, w), w).neg();
    (y, yp)
}

/// The `k`-th image under the five-fold symmetry: `y_k(z) = factor * y(arg)`.
pub fn symmetry_image(k: i64, z: &ComplexValue, w: &mut Work) -> (ComplexValue, ComplexValue) {
    let factor = ComplexValue::root_of_unity(4 * k, 5, w);
    let arg = z.mul(&ComplexValue::root_of_unity(2 * k, 5, w), w);
    (factor, arg)
}
