//! Lower bound on the Maclaurin radius at `t = 0`.

use super::inner::{target_slope, target_value, Thresholds};
use super::report::{CertificateReport, Relation};
use crate::formal::verify_auxiliary_identities;
use crate::numerics::rational::{ceil_dyadic, format_rational};
use crate::numerics::{int, rat, Interval, Rational};

pub const INDUCTION_HORIZON: usize = 256;
const INDUCTION_BITS: u32 = 128;

pub fn radius() -> Rational {
    rat(37, 20)
}

/// Coefficient ranges over `sigma in [-1, 1]^2`, with `c0 = -a + eps s1`,
/// `c1 = b + eps s2`, `c2 = 3 c0^2`, `c3 = 2 c0 c1 + 1/6`. Each variable
/// occurs once per expression so interval evaluation is exact.
pub fn coefficient_ranges() -> [Interval; 4] {
    let eps = Thresholds::slope();
    let sigma = Interval::span(int(-1), int(1));
    let c0 = sigma.scale(&eps).add_rat(&-target_value());
    let c1 = sigma.scale(&eps).add_rat(&target_slope());
    let c2 = c0.sqr().scale(&int(3));
    let c3 = c0.mul(&c1).scale(&int(2)).add_rat(&rat(1, 6));
    [c0, c1, c2, c3]
}

/// Runs `d_(k+2) = 6 sum d_j d_(k-j) / ((k+1)(k+2))` from the scaled base
/// bounds and returns the first `k` with `d_k >= k+1`, if any.
pub fn induction_failure(base: &[Rational; 4], horizon: usize) -> Option<usize> {
    let r0 = radius();
    let mut d: Vec<Rational> = base
        .iter()
        .enumerate()
        .map(|(k, b)| ceil_dyadic(&(b * num_traits::pow::pow(r0.clone(), k + 2)), INDUCTION_BITS))
        .collect();
    for k in 2..=horizon.saturating_sub(2) {
        let s: Rational = (0..=k).map(|j| &d[j] * &d[k - j]).sum();
        let next = ceil_dyadic(&(s * int(6) / int(((k + 1) * (k + 2)) as i64)), INDUCTION_BITS);
        if k + 2 < d.len() {
            d[k + 2] = next;
        } else {
            d.push(next);
        }
    }
    d.iter().enumerate().position(|(k, v)| *v >= int(k as i64 + 1))
}

pub fn check_taylor_radius() -> CertificateReport {
    let mut rep = CertificateReport::new("Maclaurin radius");
    rep.input("a", "87/469").input("b", "41/134").input("eps", "1/108").input("R0", "37/20");
    let [c0, c1, c2, c3] = coefficient_ranges();
    let bounds = [rat(1, 5), rat(6, 19), rat(1, 8), rat(1, 15)];
    rep.above("-c0 > 0", c0.neg(), true, &int(0));
    rep.below("-c0 < 1/5", c0.neg(), true, &bounds[0]);
    rep.above("c1 > 0", c1.clone(), true, &int(0));
    rep.below("c1 < 6/19", c1, true, &bounds[1]);
    rep.above("c2 > 0", c2.clone(), true, &int(0));
    rep.below("c2 < 1/8", c2, true, &bounds[2]);
    rep.above("c3 > 0", c3.clone(), true, &int(0));
    rep.below("c3 < 1/15", c3, true, &bounds[3]);
    let r0 = radius();
    for (k, b) in bounds.iter().enumerate() {
        let target = int(k as i64 + 1) / num_traits::pow::pow(r0.clone(), k + 2);
        rep.below(format!("k = {k}: bound < (k+1)/R0^(k+2)"), Interval::point(b.clone()), true, &target);
    }
    let fail = induction_failure(&bounds, INDUCTION_HORIZON);
    rep.check(
        format!("induction d_k < k+1 for k <= {INDUCTION_HORIZON}"),
        Interval::from_int(if fail.is_some() { 1 } else { 0 }),
        Relation::Le,
        Interval::zero(),
    );
    if let Some(k) = fail {
        rep.note(format!("induction first fails at k = {k}"));
    }
    let aux = verify_auxiliary_identities();
    let comparison_ok = aux.items.iter().filter(|i| i.desc.contains("(k+1)(k+2)(k+3)")).all(|i| i.pass);
    rep.check(
        "comparison sequence (k+1)/R^(k+2) solves the recurrence exactly",
        Interval::from_int(if comparison_ok { 0 } else { 1 }),
        Relation::Le,
        Interval::zero(),
    );
    rep.note(format!("radius of convergence at least {}", format_rational(&r0)));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_certificate_passes() {
        let r = check_taylor_radius();
        assert!(r.verdict, "{}", r.render());
    }

    #[test]
    fn center_values() {
        let c0 = -target_value();
        assert_eq!(&c0 * &c0 * int(3), rat(3 * 87 * 87, 469 * 469));
        let [_, _, c2, _] = coefficient_ranges();
        assert_eq!(c2.hi(), &((target_value() + Thresholds::slope()).pow(2) * int(3)));
    }

    #[test]
    fn first_base_case() {
        assert!(rat(1, 5) < rat(400, 1369));
    }

    #[test]
    fn induction_detects_bad_base() {
        let bad = [rat(1, 5), rat(1, 2), rat(1, 8), rat(1, 15)];
        assert!(induction_failure(&bad, 64).is_some());
    }
}
