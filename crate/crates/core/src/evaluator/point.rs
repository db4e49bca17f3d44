//! Point evaluation of `y(z)`, choosing between far-field forms and integration.

use serde::Serialize;

use super::asymptotic::{asymptotic_y, Region};
use super::complex::{ComplexValue, Work};
use super::frames::{g_to_y, z_to_t, z_to_x};
use super::integrate::{march, IntegrateOptions, Outcome, State};
use super::pole::origin_state;
use super::EvalError;
use crate::numerics::rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    FarFieldOmegaI,
    FarFieldOmega4,
    Integration,
}

#[derive(Clone, Debug)]
pub struct PointValue {
    pub z: ComplexValue,
    pub t: ComplexValue,
    pub x: Option<ComplexValue>,
    pub y: ComplexValue,
    pub yp: Option<ComplexValue>,
    /// Far-field error radius, or the round-trip defect for integration.
    pub error: Option<f64>,
    pub method: Method,
    /// Set when integration stopped near a pole; `z` is then the stopping point.
    pub warning: Option<String>,
}

/// `y(z)` from the cheapest applicable method.
pub fn evaluate_y(z: &ComplexValue, opts: &IntegrateOptions, w: &mut Work) -> Result<PointValue, EvalError> {
    let x = if z.is_zero() { None } else { Some(z_to_x(z, w)?) };
    if x.is_some() {
        for (region, method) in [
            (Region::omega_i(&rat(3437, 1000)), Method::FarFieldOmegaI),
            (Region::omega_4(&rat(3, 1)), Method::FarFieldOmega4),
        ] {
            if let Ok(a) = asymptotic_y(z, &region, w) {
                return Ok(PointValue {
                    z: z.clone(),
                    t: z_to_t(z, w),
                    x: Some(a.x),
                    y: a.value,
                    yp: None,
                    error: Some(a.error_bound),
                    method,
                    warning: None,
                });
            }
        }
    }
    let origin = origin_state(opts, w)?;
    let t = z_to_t(z, w);
    let (end, warning) = match march(&origin, &t, opts, w, None, &mut |_| false)? {
        Outcome::Arrived(s, _) => (s, None),
        Outcome::Blowup(s) | Outcome::Stopped(s) => {
            let guess = s.pole_guess(w).map(|p| p.to_f64());
            let msg = format!("stopped near an estimated pole at t = {guess:?}; value is at the stopping point and non-rigorous");
            (s, Some(msg))
        }
    };
    let error = if warning.is_none() { round_trip_defect(&end, &origin, opts, w) } else { None };
    let (y, yp) = g_to_y(&end.g, &end.gp, w);
    let zz = super::frames::t_to_z(&end.t, w);
    let x = if zz.is_zero() { None } else { Some(z_to_x(&zz, w)?) };
    Ok(PointValue { z: zz, t: end.t, x, y, yp: Some(yp), error, method: Method::Integration, warning })
}

fn round_trip_defect(end: &State, origin: &State, opts: &IntegrateOptions, w: &Work) -> Option<f64> {
    match march(end, &origin.t, opts, w, None, &mut |_| false).ok()? {
        Outcome::Arrived(back, _) => Some(back.g.dist_f64(&origin.g, w).max(back.gp.dist_f64(&origin.gp, w))),
        _ => None,
    }
}
