//! Value and slope at the origin, as pinned down by the inner certificate.

use super::complex::{ComplexValue, Work};
use super::frames::g_to_y;
use super::EvalError;
use crate::certificates::inner::{target_slope, target_value, Thresholds};
use crate::certificates::CertificateReport;
use crate::numerics::{Interval, Rational};

pub const INNER_REPORT: &str = "inner interval contraction";

#[derive(Clone, Debug)]
pub struct ZeroEnclosure {
    /// `g(0)` lies strictly inside.
    pub value: Interval,
    /// `g'(0)` lies strictly inside.
    pub slope: Interval,
    /// Centre of the disc containing `y(0)`; radius is that of `value`.
    pub y_value: ComplexValue,
    /// Centre of the disc containing `y'(0)`; radius is that of `slope`.
    pub y_slope: ComplexValue,
    pub value_radius: Rational,
    pub slope_radius: Rational,
}

/// Requires a passing inner-interval report.
pub fn y_at_zero(report: &CertificateReport, w: &mut Work) -> Result<ZeroEnclosure, EvalError> {
    if report.name != INNER_REPORT || !report.verdict {
        return Err(EvalError::Precondition(format!("needs a passing '{INNER_REPORT}' report")));
    }
    let a = -target_value();
    let b = target_slope();
    let (ra, rb) = (Thresholds::value(), Thresholds::slope());
    let zero = Rational::from_integer(0.into());
    let g = ComplexValue::from_rational(w, &a, &zero);
    let gp = ComplexValue::from_rational(w, &b, &zero);
    let (y, yp) = g_to_y(&g, &gp, w);
    Ok(ZeroEnclosure {
        value: Interval::ball(&a, &ra),
        slope: Interval::ball(&b, &rb),
        y_value: y,
        y_slope: yp,
        value_radius: ra,
        slope_radius: rb,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::to_f64;

    #[test]
    fn centres_and_precondition() {
        let mut w = Work::new(128).unwrap();
        let mut rep = CertificateReport::new(INNER_REPORT);
        let e = y_at_zero(&rep, &mut w).unwrap();
        assert!((to_f64(&e.value.midpoint()) + 0.185501).abs() < 1e-6);
        assert!((to_f64(&e.slope.midpoint()) - 0.305970).abs() < 1e-6);
        assert!((e.y_value.abs_f64() - 87.0 / 469.0).abs() < 1e-15);
        rep.violate("forced");
        assert!(matches!(y_at_zero(&rep, &mut w), Err(EvalError::Precondition(_))));
        let other = CertificateReport::new("radius");
        assert!(y_at_zero(&other, &mut w).is_err());
    }
}
