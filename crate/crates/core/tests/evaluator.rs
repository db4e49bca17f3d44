//! Floating-point evaluator checked against itself and the far-field forms.

use p1cert::evaluator::frames::{t_to_z, x_to_z, z_to_t};
use p1cert::evaluator::{
    asymptotic_y, g_to_y, integrate, integrate_round_trip, maclaurin, matching_data, origin_state, ComplexValue,
    IntegrateOptions, Region, State, Work,
};
use p1cert::numerics::rat;

fn work() -> Work {
    Work::new(128).unwrap()
}

#[test]
fn maclaurin_series_agrees_with_integration_on_unit_circle() {
    let mut w = work();
    let opts = IntegrateOptions::default();
    let series = maclaurin(64, &opts, &w).unwrap();
    let origin = origin_state(&opts, &w).unwrap();
    for k in 0..8 {
        let theta = w.real(std::f64::consts::PI * k as f64 / 4.0);
        let t = ComplexValue::cis(&theta, &mut w);
        let (g, gp) = series.eval(&t, &w);
        let end = integrate(&origin, &t, &opts, &w).unwrap().end;
        assert!(g.dist_f64(&end.g, &w) < 1e-10, "g at angle {k} pi/4");
        assert!(gp.dist_f64(&end.gp, &w) < 1e-10, "g' at angle {k} pi/4");
    }
}

#[test]
fn series_residual_vanishes() {
    let w = work();
    let s = maclaurin(32, &IntegrateOptions::default(), &w).unwrap();
    assert!(s.residual(&w).iter().all(|r| r.abs_f64() < 1e-30));
    let c = &s.coeffs;
    let d = c[2].sub(&c[0].sqr(&w).scale_int(3, &w), &w);
    assert!(d.abs_f64() < 1e-35);
    let est = s.radius_estimate();
    assert!((1.8..3.2).contains(&est), "radius estimate {est}");
}

/// Numerical solution at `z`, integrated from the matching data.
fn ode_y(z: &ComplexValue, w: &mut Work) -> (ComplexValue, f64) {
    let t = z_to_t(z, w);
    let run = integrate_round_trip(&matching_data(w), &t, &IntegrateOptions::default(), w).unwrap();
    let (y, _) = g_to_y(&run.end.g, &run.end.gp, w);
    (y, run.defect.unwrap())
}

/// Uncertainty of the matching data, carried to the y frame without growth.
fn matching_spread() -> f64 {
    3.0 / 890.0 + 29.0 / 4468.0
}

#[test]
fn corner_of_far_sector_matches_integration() {
    let mut w = work();
    let x = ComplexValue::from_f64(&w, 0.0, -3.0);
    let z = x_to_z(&x, &mut w).unwrap();
    let a = asymptotic_y(&z, &Region::omega_4(&rat(3, 1)), &mut w).unwrap();
    let (y, defect) = ode_y(&z, &mut w);
    assert!(defect < 1e-20);
    let gap = a.value.dist_f64(&y, &w);
    assert!(gap <= a.error_bound + matching_spread(), "gap {gap} vs bound {}", a.error_bound);
}

#[test]
fn anti_stokes_ray_matches_far_field() {
    let mut w = work();
    for s in [6.0, 8.0] {
        let t = ComplexValue::from_f64(&w, -s, 0.0);
        let z = t_to_z(&t, &mut w);
        let a = asymptotic_y(&z, &Region::omega_i(&rat(3437, 1000)), &mut w).unwrap();
        let (y, defect) = ode_y(&z, &mut w);
        assert!(defect < 1e-18);
        let gap = a.value.dist_f64(&y, &w);
        assert!(gap <= a.error_bound + matching_spread(), "t = -{s}: gap {gap}, bound {}", a.error_bound);
    }
}

#[test]
fn pole_free_direction_is_tolerance_stable() {
    let w = work();
    let origin = origin_state(&IntegrateOptions::default(), &w).unwrap();
    let to = ComplexValue::from_f64(&w, -6.0, 0.0);
    let coarse = IntegrateOptions { tol: 1e-24, ..Default::default() };
    let fine = IntegrateOptions { tol: 5e-25, ..Default::default() };
    let a = integrate(&origin, &to, &coarse, &w).unwrap().end;
    let b = integrate(&origin, &to, &fine, &w).unwrap().end;
    assert!(a.g.dist_f64(&b.g, &w) < 1e-18);
    assert!(a.gp.dist_f64(&b.gp, &w) < 1e-18);
    assert_eq!(a.g.to_f64().1, 0.0);
}

fn endpoint_error(order: usize, step: f64, reference: &State, w: &Work) -> f64 {
    let opts = IntegrateOptions { order, step: Some(step), ..Default::default() };
    let end = integrate(&matching_data(w), &ComplexValue::zero(w), &opts, w).unwrap().end;
    end.g.dist_f64(&reference.g, w).max(end.gp.dist_f64(&reference.gp, w))
}

/// Degree `n` truncates `g'` at `h^n` per step, so the global order is `n - 1`.
#[test]
fn fixed_step_error_falls_with_the_order() {
    let w = work();
    let reference = origin_state(&IntegrateOptions::default(), &w).unwrap();
    for order in [4usize, 5, 6] {
        let e1 = endpoint_error(order, 0.1, &reference, &w);
        let e2 = endpoint_error(order, 0.05, &reference, &w);
        let ratio = e1 / e2;
        assert!(ratio >= 4.0, "order {order}: {e1:e} -> {e2:e}");
        assert!(ratio >= 0.5 * 2f64.powi(order as i32 - 1), "order {order}: ratio {ratio}");
    }
}

#[test]
fn precision_floor_is_enforced() {
    assert!(Work::new(99).is_err());
    let w = Work::new(100).unwrap();
    let run = integrate_round_trip(&matching_data(&w), &ComplexValue::zero(&w), &IntegrateOptions::default(), &w).unwrap();
    assert!(run.defect.unwrap() < 1e-20);
}
