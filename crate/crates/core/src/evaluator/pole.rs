//! First-pole location by integrating outward from `t = 0`.

use rayon::prelude::*;
use serde::Serialize;

use super::complex::{ComplexValue, Work};
use super::integrate::{integrate, march, matching_data, IntegrateOptions, Outcome, State};
use super::EvalError;

#[derive(Clone, Debug)]
pub struct PoleOptions {
    /// Largest `|t|` examined along a ray.
    pub horizon: f64,
    /// `|g|` at which a ray is considered to pass a pole and refinement starts.
    pub detect: f64,
    pub refinements: usize,
    pub integrate: IntegrateOptions,
}

impl Default for PoleOptions {
    fn default() -> Self {
        PoleOptions { horizon: 10.0, detect: 1e2, refinements: 8, integrate: IntegrateOptions::default() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PoleEstimate {
    /// Ray angle in the `t` plane.
    pub direction: f64,
    pub location: (f64, f64),
    pub distance: f64,
    /// `|g (t - t_p)^2 - 1|` at the last integration point.
    pub fit_residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct PoleScan {
    pub directions: Vec<(f64, Option<PoleEstimate>)>,
    pub nearest: Option<PoleEstimate>,
}

/// `(g, g')` at `t = 0` obtained by integrating the matching data.
pub fn origin_state(opts: &IntegrateOptions, w: &Work) -> Result<State, EvalError> {
    let start = matching_data(w);
    Ok(integrate(&start, &ComplexValue::zero(w), opts, w)?.end)
}

fn fit_residual(s: &State, tp: &ComplexValue, w: &Work) -> f64 {
    let d = s.t.sub(tp, w);
    s.g.mul(&d.sqr(w), w).sub(&ComplexValue::one(w), w).abs_f64()
}

/// Nearest pole met along the ray of angle `direction` from `origin`.
pub fn pole_estimate(origin: &State, direction: f64, opts: &PoleOptions, w: &mut Work) -> Result<PoleEstimate, EvalError> {
    let unit = ComplexValue::polar(&w.real(opts.horizon), &w.real(direction), w);
    let target = origin.t.add(&unit, w);
    let detect = opts.detect;
    let mut s = match march(origin, &target, &opts.integrate, w, None, &mut |s| s.g.abs_f64() > detect)? {
        Outcome::Arrived(..) => return Err(EvalError::NotFound { horizon: opts.horizon }),
        Outcome::Blowup(s) | Outcome::Stopped(s) => s,
    };
    let mut guess = s.pole_guess(w).ok_or_else(|| EvalError::Arithmetic("g' vanished near a pole".into()))?;
    for _ in 0..opts.refinements {
        if s.g.abs_f64() > opts.integrate.blowup {
            break;
        }
        s = match march(&s, &guess, &opts.integrate, w, None, &mut |_| false)? {
            Outcome::Arrived(s, _) | Outcome::Blowup(s) | Outcome::Stopped(s) => s,
        };
        guess = s.pole_guess(w).ok_or_else(|| EvalError::Arithmetic("g' vanished near a pole".into()))?;
    }
    let location = guess.to_f64();
    Ok(PoleEstimate {
        direction,
        location,
        distance: guess.sub(&origin.t, w).abs_f64(),
        fit_residual: fit_residual(&s, &guess, w),
    })
}

/// Scan `n` equally spaced rays from angle 0 and keep the closest pole.
pub fn pole_scan(origin: &State, n: usize, opts: &PoleOptions, bits: usize) -> Result<PoleScan, EvalError> {
    let directions: Vec<(f64, Option<PoleEstimate>)> = (0..n)
        .into_par_iter()
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64;
            let est = Work::new(bits).ok().and_then(|mut w| pole_estimate(origin, theta, opts, &mut w).ok());
            (theta, est)
        })
        .collect();
    let nearest = directions
        .iter()
        .filter_map(|(_, e)| e.clone())
        .min_by(|a, b| a.distance.total_cmp(&b.distance));
    Ok(PoleScan { directions, nearest })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pole_on_positive_axis() {
        let mut w = Work::new(128).unwrap();
        let o = origin_state(&IntegrateOptions::default(), &w).unwrap();
        let p = pole_estimate(&o, 0.0, &PoleOptions::default(), &mut w).unwrap();
        assert!((p.distance - 2.38).abs() < 0.05 * 2.38, "{}", p.distance);
        assert!(p.distance > 37.0 / 20.0);
        assert!(p.location.1.abs() < 1e-20);
        assert!(p.fit_residual < 1e-6);
    }

    #[test]
    fn pole_free_direction() {
        let mut w = Work::new(128).unwrap();
        let o = origin_state(&IntegrateOptions::default(), &w).unwrap();
        let r = pole_estimate(&o, std::f64::consts::PI, &PoleOptions::default(), &mut w);
        assert!(matches!(r, Err(EvalError::NotFound { .. })), "{r:?}");
    }

    #[test]
    fn scan_nearest_is_axis_pole() {
        let w = Work::new(128).unwrap();
        let o = origin_state(&IntegrateOptions::default(), &w).unwrap();
        let scan = pole_scan(&o, 24, &PoleOptions::default(), 128).unwrap();
        let n = scan.nearest.unwrap();
        assert!((n.distance - 2.3824).abs() < 1e-3, "{}", n.distance);
    }
}
