//! Local Taylor expansions of `g'' = 6 g^2 + t`.

use super::complex::{ComplexValue, Work};
use super::EvalError;

#[derive(Clone, Debug)]
pub struct SeriesState {
    pub center: ComplexValue,
    /// `c_0 ..= c_N`.
    pub coeffs: Vec<ComplexValue>,
    pub order: usize,
}

/// Coefficients of the solution with `g(center) = c0`, `g'(center) = c1`.
///
/// `(k+1)(k+2) c_{k+2} = 6 sum_{j<=k} c_j c_{k-j} + [k=0] center + [k=1]`.
pub fn taylor_coeffs(
    c0: &ComplexValue,
    c1: &ComplexValue,
    center: &ComplexValue,
    n: usize,
    w: &Work,
) -> Result<SeriesState, EvalError> {
    if n < 2 {
        return Err(EvalError::Order(n));
    }
    let mut c = Vec::with_capacity(n + 1);
    c.push(c0.clone());
    c.push(c1.clone());
    for k in 0..=n - 2 {
        let mut acc = convolution(&c, k, w).scale_int(6, w);
        if k == 0 {
            acc = acc.add(center, w);
        } else if k == 1 {
            acc = acc.add(&ComplexValue::one(w), w);
        }
        let d = w.int(((k + 1) * (k + 2)) as i64);
        c.push(acc.div_real(&d, w));
    }
    Ok(SeriesState { center: center.clone(), coeffs: c, order: n })
}

/// `sum_{j=0}^{k} c_j c_{k-j}`, using the symmetry of the sum.
fn convolution(c: &[ComplexValue], k: usize, w: &Work) -> ComplexValue {
    let mut acc = ComplexValue::zero(w);
    for j in 0..=k / 2 {
        let term = c[j].mul(&c[k - j], w);
        acc = if 2 * j == k { acc.add(&term, w) } else { acc.add(&term.scale_int(2, w), w) };
    }
    acc
}

impl SeriesState {
    /// `(g, g')` at `center + s`.
    pub fn eval(&self, s: &ComplexValue, w: &Work) -> (ComplexValue, ComplexValue) {
        let n = self.order;
        let mut g = self.coeffs[n].clone();
        let mut gp = self.coeffs[n].scale_int(n as i64, w);
        for k in (0..n).rev() {
            g = g.mul(s, w).add(&self.coeffs[k], w);
            if k >= 1 {
                gp = gp.mul(s, w).add(&self.coeffs[k].scale_int(k as i64, w), w);
            }
        }
        (g, gp)
    }

    /// Coefficients of `g'' - 6 g^2 - t` for the truncated series, orders `0..=N-2`.
    pub fn residual(&self, w: &Work) -> Vec<ComplexValue> {
        let c = &self.coeffs;
        (0..=self.order - 2)
            .map(|k| {
                let lhs = c[k + 2].scale_int(((k + 1) * (k + 2)) as i64, w);
                let mut r = lhs.sub(&convolution(c, k, w).scale_int(6, w), w);
                if k == 0 {
                    r = r.sub(&self.center, w);
                } else if k == 1 {
                    r = r.sub(&ComplexValue::one(w), w);
                }
                r
            })
            .collect()
    }

    /// Root-test estimate of the radius of convergence from the top coefficients.
    pub fn radius_estimate(&self) -> f64 {
        let n = self.order;
        let lo = n.saturating_sub(4).max(2);
        let mut best = f64::INFINITY;
        for k in lo..=n {
            let a = self.coeffs[k].abs_f64();
            if a > 0.0 && a.is_finite() {
                best = best.min(a.powf(-1.0 / k as f64));
            }
        }
        best
    }

    /// `k,re,im` rows.
    pub fn to_csv(&self, digits: usize) -> String {
        let mut out = String::from("k,re,im\n");
        for (k, c) in self.coeffs.iter().enumerate() {
            let (re, im) = c.to_decimal(digits);
            out.push_str(&format!("{k},{re},{im}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Work {
        Work::new(128).unwrap()
    }

    #[test]
    fn forced_cubic_term() {
        let w = w();
        let z = ComplexValue::zero(&w);
        let s = taylor_coeffs(&z, &z, &z, 6, &w).unwrap();
        assert!(s.coeffs[2].is_zero());
        assert_eq!(s.coeffs[3].to_f64(), (1.0 / 6.0, 0.0));
    }

    #[test]
    fn low_order_closed_forms() {
        let w = w();
        let a = 87.0 / 469.0;
        let b = 41.0 / 134.0;
        let c0 = ComplexValue::from_f64(&w, -a, 0.0);
        let c1 = ComplexValue::from_f64(&w, b, 0.0);
        let s = taylor_coeffs(&c0, &c1, &ComplexValue::zero(&w), 8, &w).unwrap();
        assert!((s.coeffs[2].to_f64().0 - 3.0 * a * a).abs() < 1e-15);
        assert!((s.coeffs[3].to_f64().0 - (2.0 * (-a) * b + 1.0 / 6.0)).abs() < 1e-15);
        let centered = taylor_coeffs(&c0, &c1, &ComplexValue::from_f64(&w, 0.5, 0.0), 8, &w).unwrap();
        assert!((centered.coeffs[2].to_f64().0 - (3.0 * a * a + 0.25)).abs() < 1e-15);
        assert!((centered.coeffs[3].to_f64().0 - s.coeffs[3].to_f64().0).abs() < 1e-15);
    }

    #[test]
    fn residual_vanishes() {
        let w = w();
        let c0 = ComplexValue::from_f64(&w, -0.3, 0.1);
        let c1 = ComplexValue::from_f64(&w, 0.2, -0.4);
        let center = ComplexValue::from_f64(&w, 0.7, 0.2);
        let s = taylor_coeffs(&c0, &c1, &center, 40, &w).unwrap();
        let r = s.residual(&w);
        assert_eq!(r.len(), 39);
        for (k, v) in r.iter().enumerate() {
            assert!(v.abs_f64() < 1e-33, "order {k}: {}", v.abs_f64());
        }
    }

    #[test]
    fn order_below_two_rejected() {
        let w = w();
        let z = ComplexValue::zero(&w);
        assert!(matches!(taylor_coeffs(&z, &z, &z, 1, &w), Err(EvalError::Order(1))));
    }

    #[test]
    fn csv_shape() {
        let w = w();
        let z = ComplexValue::zero(&w);
        let s = taylor_coeffs(&z, &z, &z, 3, &w).unwrap();
        let csv = s.to_csv(6);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "k,re,im");
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[4], "3,0.166666,0.000000");
    }
}
