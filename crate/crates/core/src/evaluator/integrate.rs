//! Adaptive Taylor-step integration of `g'' = 6 g^2 + t` along straight segments.

use super::complex::{ComplexValue, Work};
use super::taylor::taylor_coeffs;
use super::EvalError;
use crate::numerics::rat;

#[derive(Clone, Debug)]
pub struct IntegrateOptions {
    /// Local Taylor order.
    pub order: usize,
    /// Per-step truncation target.
    pub tol: f64,
    /// Fixed step length; overrides the adaptive rule.
    pub step: Option<f64>,
    pub max_steps: usize,
    /// `|g|` beyond which the run stops as pole-proximate.
    pub blowup: f64,
    pub record: bool,
}

impl Default for IntegrateOptions {
    fn default() -> Self {
        IntegrateOptions { order: 24, tol: 1e-28, step: None, max_steps: 100_000, blowup: 1e8, record: false }
    }
}

#[derive(Clone, Debug)]
pub struct State {
    pub t: ComplexValue,
    pub g: ComplexValue,
    pub gp: ComplexValue,
}

impl State {
    /// `t + 2 g / g'`, the pole location if `g ~ (t - t_p)^{-2}`.
    pub fn pole_guess(&self, w: &Work) -> Option<ComplexValue> {
        let q = self.g.div(&self.gp, w).ok()?;
        Some(self.t.add(&q.scale_int(2, w), w))
    }
}

/// Initial data at `t0 = -17/10`: `g = -280/519`, `g' = 150/1013`.
pub fn matching_data(w: &Work) -> State {
    let zero = rat(0, 1);
    State {
        t: ComplexValue::from_rational(w, &rat(-17, 10), &zero),
        g: ComplexValue::from_rational(w, &rat(-280, 519), &zero),
        gp: ComplexValue::from_rational(w, &rat(150, 1013), &zero),
    }
}

#[derive(Clone, Debug, Default)]
pub struct Trajectory {
    /// `(t, g)` after every step, starting point included.
    pub points: Vec<(ComplexValue, ComplexValue)>,
}

impl Trajectory {
    /// `t,re_g,im_g` rows on real paths; `re_t,im_t,re_g,im_g` otherwise.
    pub fn to_csv(&self, digits: usize) -> String {
        let real = self.points.iter().all(|(t, _)| t.im.is_zero());
        let mut out = String::from(if real { "t,re_g,im_g\n" } else { "re_t,im_t,re_g,im_g\n" });
        for (t, g) in &self.points {
            let (tr, ti) = t.to_decimal(digits);
            let (gr, gi) = g.to_decimal(digits);
            if real {
                out.push_str(&format!("{tr},{gr},{gi}\n"));
            } else {
                out.push_str(&format!("{tr},{ti},{gr},{gi}\n"));
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct Integration {
    pub end: State,
    pub steps: usize,
    /// Forward-backward round-trip defect, when requested.
    pub defect: Option<f64>,
    pub trajectory: Option<Trajectory>,
}

pub(crate) enum Outcome {
    Arrived(State, usize),
    Blowup(State),
    Stopped(State),
}

fn step_length(coeffs: &[ComplexValue], opts: &IntegrateOptions) -> f64 {
    if let Some(h) = opts.step {
        return h;
    }
    let n = coeffs.len() - 1;
    let mut h = f64::INFINITY;
    for k in [n - 1, n] {
        let a = coeffs[k].abs_f64();
        if a > 0.0 {
            h = h.min((opts.tol / a).powf(1.0 / k as f64));
        }
    }
    h
}

/// Step from `start` toward `to`; `stop` may end the run early after any step.
pub(crate) fn march(
    start: &State,
    to: &ComplexValue,
    opts: &IntegrateOptions,
    w: &Work,
    mut trajectory: Option<&mut Trajectory>,
    stop: &mut dyn FnMut(&State) -> bool,
) -> Result<Outcome, EvalError> {
    let mut cur = start.clone();
    if let Some(tr) = trajectory.as_deref_mut() {
        tr.points.push((cur.t.clone(), cur.g.clone()));
    }
    for steps in 0..opts.max_steps {
        let delta = to.sub(&cur.t, w);
        let remaining = delta.abs_f64();
        if remaining == 0.0 {
            return Ok(Outcome::Arrived(cur, steps));
        }
        let series = taylor_coeffs(&cur.g, &cur.gp, &cur.t, opts.order, w)?;
        let h = step_length(&series.coeffs, opts);
        if !(h > 0.0) {
            return Err(EvalError::Arithmetic(format!("step length {h} at t = {:?}", cur.t.to_f64())));
        }
        let (s, next_t) = if h >= remaining {
            (delta, to.clone())
        } else {
            let s = delta.scale(&w.real(h / remaining), w);
            let nt = cur.t.add(&s, w);
            (s, nt)
        };
        let (g, gp) = series.eval(&s, w);
        if !g.is_finite() || !gp.is_finite() {
            return Err(EvalError::Arithmetic("non-finite value".into()));
        }
        cur = State { t: next_t, g, gp };
        if let Some(tr) = trajectory.as_deref_mut() {
            tr.points.push((cur.t.clone(), cur.g.clone()));
        }
        if cur.g.abs_f64() > opts.blowup {
            return Ok(Outcome::Blowup(cur));
        }
        if stop(&cur) {
            return Ok(Outcome::Stopped(cur));
        }
    }
    Err(EvalError::StepLimit(opts.max_steps))
}

fn pole_error(s: &State, w: &Work) -> EvalError {
    let est = s.pole_guess(w).map(|p| p.to_f64()).unwrap_or((f64::NAN, f64::NAN));
    EvalError::Pole { at: s.t.to_f64(), estimate: est }
}

/// Integrate from `start` to `to`.
pub fn integrate(start: &State, to: &ComplexValue, opts: &IntegrateOptions, w: &Work) -> Result<Integration, EvalError> {
    let mut tr = opts.record.then(Trajectory::default);
    match march(start, to, opts, w, tr.as_mut(), &mut |_| false)? {
        Outcome::Arrived(end, steps) => Ok(Integration { end, steps, defect: None, trajectory: tr }),
        Outcome::Blowup(s) | Outcome::Stopped(s) => Err(pole_error(&s, w)),
    }
}

/// Integrate to `to` and back; the defect is the larger of the `g` and `g'` mismatches.
pub fn integrate_round_trip(
    start: &State,
    to: &ComplexValue,
    opts: &IntegrateOptions,
    w: &Work,
) -> Result<Integration, EvalError> {
    let mut fwd = integrate(start, to, opts, w)?;
    let quiet = IntegrateOptions { record: false, ..opts.clone() };
    let back = integrate(&fwd.end, &start.t, &quiet, w)?;
    let d = back.end.g.dist_f64(&start.g, w).max(back.end.gp.dist_f64(&start.gp, w));
    fwd.defect = Some(d);
    Ok(fwd)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Work {
        Work::new(128).unwrap()
    }

    #[test]
    fn lands_on_target_exactly() {
        let w = w();
        let s = matching_data(&w);
        let r = integrate(&s, &ComplexValue::zero(&w), &IntegrateOptions::default(), &w).unwrap();
        assert!(r.end.t.is_zero());
        assert!(r.steps > 1);
    }

    #[test]
    fn value_and_slope_at_origin() {
        let w = w();
        let s = matching_data(&w);
        let r = integrate_round_trip(&s, &ComplexValue::zero(&w), &IntegrateOptions::default(), &w).unwrap();
        let (g, gi) = r.end.g.to_f64();
        let (gp, _) = r.end.gp.to_f64();
        assert!((g + 87.0 / 469.0).abs() < 1.0 / 167.0);
        assert!((gp - 41.0 / 134.0).abs() < 1.0 / 108.0);
        assert_eq!(gi, 0.0);
        assert!(r.defect.unwrap() < 1e-20);
    }

    #[test]
    fn zero_data_follows_cubic() {
        let w = w();
        let z = ComplexValue::zero(&w);
        let s = State { t: z.clone(), g: z.clone(), gp: z.clone() };
        let to = ComplexValue::from_f64(&w, 0.25, 0.0);
        let r = integrate(&s, &to, &IntegrateOptions::default(), &w).unwrap();
        let expect = 0.25f64.powi(3) / 6.0;
        assert!((r.end.g.to_f64().0 - expect).abs() < 1e-6);
    }

    #[test]
    fn blowup_reports_location() {
        let w = w();
        let big = ComplexValue::from_f64(&w, 10.0, 0.0);
        let s = State { t: ComplexValue::zero(&w), g: ComplexValue::from_f64(&w, 1.0, 0.0), gp: ComplexValue::from_f64(&w, 2.0, 0.0) };
        match integrate(&s, &big, &IntegrateOptions::default(), &w) {
            Err(EvalError::Pole { at, estimate }) => {
                assert!(at.0 > 0.0 && at.0 < 2.0);
                assert!((estimate.0 - at.0).abs() < 1e-3);
            }
            other => panic!("expected a pole, got {other:?}"),
        }
    }

    #[test]
    fn trajectory_csv() {
        let w = w();
        let s = matching_data(&w);
        let opts = IntegrateOptions { record: true, ..Default::default() };
        let r = integrate(&s, &ComplexValue::zero(&w), &opts, &w).unwrap();
        let csv = r.trajectory.unwrap().to_csv(10);
        assert!(csv.starts_with("t,re_g,im_g\n-1.7000000000,-0.5394990366,0.0000000000\n"));
        assert!(csv.trim_end().lines().last().unwrap().starts_with("0.0000000000,-0.18550"));
    }
}
