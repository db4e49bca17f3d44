//! Contraction around the polynomial quasi-solution on `[t0, 0]`.

use super::report::CertificateReport;
use crate::data::{DataError, PartitionData};
use crate::numerics::rational::{format_rational, to_decimal};
use crate::numerics::{int, rat, Interval, Rational};
use crate::polybound::{sup_bound, InnerPolys, Poly};

#[derive(Clone, Debug)]
pub struct InnerParams {
    /// Bound on `|g(t0) - g0(t0)|`.
    pub alpha1: Rational,
    /// Bound on `|g'(t0) - g0'(t0)|`.
    pub alpha2: Rational,
    /// Radius of the ball in the norm `max(||d||, ||d'||/2)`.
    pub radius: Rational,
}

impl Default for InnerParams {
    fn default() -> Self {
        InnerParams { alpha1: rat(1, 290), alpha2: rat(1, 152), radius: rat(1, 158) }
    }
}

/// Certified sup-norm thresholds, in the order they are checked.
pub struct Thresholds;

impl Thresholds {
    pub fn residual() -> Rational {
        rat(1, 8619)
    }
    pub fn j1() -> Rational {
        rat(6, 5)
    }
    pub fn j2() -> Rational {
        rat(3, 7)
    }
    pub fn j1p() -> Rational {
        rat(5, 2)
    }
    pub fn j2p() -> Rational {
        rat(21, 20)
    }
    pub fn w_minus_one() -> Rational {
        rat(1, 500)
    }
    pub fn a() -> Rational {
        rat(1, 1216)
    }
    pub fn b1() -> Rational {
        rat(1, 492)
    }
    pub fn combo() -> Rational {
        rat(1, 180)
    }
    pub fn combo_prime() -> Rational {
        rat(1, 90)
    }
    pub fn eps1() -> Rational {
        rat(1, 1500)
    }
    pub fn eps2() -> Rational {
        rat(1, 658)
    }
    pub fn factor() -> Rational {
        rat(1, 6)
    }
    pub fn value() -> Rational {
        rat(1, 167)
    }
    pub fn slope() -> Rational {
        rat(1, 108)
    }
}

/// Value and slope at `t = 0` that the inner analysis pins down.
pub fn target_value() -> Rational {
    rat(87, 469)
}

pub fn target_slope() -> Rational {
    rat(41, 134)
}

fn upto(r: Rational) -> Interval {
    Interval::span(int(0), r)
}

pub fn check_inner_interval(parts: &PartitionData, params: &InnerParams) -> Result<CertificateReport, DataError> {
    let p = InnerPolys::standard();
    let mut rep = CertificateReport::new("inner interval contraction");
    rep.input("alpha1", format_rational(&params.alpha1))
        .input("alpha2", format_rational(&params.alpha2))
        .input("radius", format_rational(&params.radius))
        .input("t0", "-17/10");
    let sup = |poly: &Poly, plan: &str| -> Result<Rational, DataError> { Ok(sup_bound(poly, parts.plan(plan)?)) };

    let r_sup = sup(&p.residual, "residual")?;
    rep.below("|R| < 1/8619", upto(r_sup.clone()), true, &Thresholds::residual());
    let j1 = sup(&p.j1, "J1")?;
    let j2 = sup(&p.j2, "J2")?;
    let j1p = sup(&p.j1p, "J1_prime")?;
    let j2p = sup(&p.j2p, "J2_prime")?;
    rep.below("||J1|| <= 6/5", upto(j1.clone()), false, &Thresholds::j1());
    rep.below("||J2|| <= 3/7", upto(j2.clone()), false, &Thresholds::j2());
    rep.below("||J1'|| <= 5/2", upto(j1p), false, &Thresholds::j1p());
    rep.below("||J2'|| <= 21/20", upto(j2p), false, &Thresholds::j2p());
    let wm1 = sup(&p.wronskian_minus_one, "W")?;
    rep.below("|W - 1| < 1/500", upto(wm1.clone()), true, &Thresholds::w_minus_one());
    let w_inf = int(1) - &wm1;
    if w_inf <= int(0) {
        rep.violate("Wronskian not certified positive");
        return Ok(rep);
    }
    let j1w = &j1 / &w_inf;
    let j2w = &j2 / &w_inf;
    rep.below("||J1/W|| <= 6/5", upto(j1w.clone()), false, &Thresholds::j1());
    rep.below("||J2/W|| <= 3/7", upto(j2w.clone()), false, &Thresholds::j2());
    rep.note(format!(
        "J1/W bound {} vs J1 bound {}: {} is binding; J2/W bound {} vs J2 bound {}",
        to_decimal(&j1w, 6),
        to_decimal(&j1, 6),
        if j1w >= j1 { "J1/W" } else { "J1" },
        to_decimal(&j2w, 6),
        to_decimal(&j2, 6)
    ));
    let a = sup(&p.a_num, "A")? / &w_inf;
    let b1 = sup(&p.b1_num, "B1")? / &w_inf;
    rep.below("||A|| < 1/1216", upto(a), true, &Thresholds::a());
    rep.below("||B1|| < 1/492", upto(b1), true, &Thresholds::b1());

    let (a1, a2) = (&params.alpha1, &params.alpha2);
    let neg_a2 = -a2.clone();
    let corners = [
        ("|a1 J1 + a2 J2| < 1/180 at (alpha1, alpha2)", p.combo(a1, a2), "f_alpha", Thresholds::combo()),
        ("|a1 J1 + a2 J2| < 1/180 at (alpha1, -alpha2)", p.combo(a1, &neg_a2), "f_alpha_flip", Thresholds::combo()),
        ("|a1 J1' + a2 J2'| < 1/90 at (alpha1, alpha2)", p.combo_prime(a1, a2), "fprime_alpha", Thresholds::combo_prime()),
        (
            "|a1 J1' + a2 J2'| < 1/90 at (alpha1, -alpha2)",
            p.combo_prime(a1, &neg_a2),
            "fprime_alpha_flip",
            Thresholds::combo_prime(),
        ),
    ];
    for (desc, poly, plan, target) in corners {
        let b = sup(&poly, plan)?;
        rep.below(desc, upto(b), true, &target);
    }

    // Assembly from the certified thresholds.
    let len = rat(17, 10);
    let k1 = &len * (Thresholds::j2() * Thresholds::j1() + Thresholds::j1() * Thresholds::j2());
    let k2 = &len * (Thresholds::j2p() * Thresholds::j1() + Thresholds::j1p() * Thresholds::j2());
    rep.note(format!("||K1|| <= {}, ||K2|| <= {}", to_decimal(&k1, 6), to_decimal(&k2, 6)));
    let r = &params.radius;
    let lip = Thresholds::a() * int(2) + Thresholds::b1() + r * int(12);
    let factor = crate::numerics::rational::max_r(&(&k1 * &lip), &(&k2 * &lip / int(2)));
    rep.below("contraction factor max(||K1|| L, ||K2|| L/2) < 1/6", Interval::point(factor), true, &Thresholds::factor());
    let inner = Thresholds::a() * int(2) * r + Thresholds::b1() * r + r * r * int(6) + Thresholds::residual();
    let e1 = &k1 * &inner;
    let e2 = &k2 * &inner;
    rep.below("eps1 = ||K1|| (2||A|| r + ||B1|| r + 6 r^2 + ||R||) < 1/1500", Interval::point(e1), true, &Thresholds::eps1());
    rep.below("eps2 = ||K2|| (2||A|| r + ||B1|| r + 6 r^2 + ||R||) < 1/658", Interval::point(e2), true, &Thresholds::eps2());
    let ball = crate::numerics::rational::max_r(
        &(Thresholds::combo() + Thresholds::eps1()),
        &((Thresholds::combo_prime() + Thresholds::eps2()) / int(2)),
    );
    rep.below("ball maps into itself: max(1/180 + eps1, (1/90 + eps2)/2) <= radius", Interval::point(ball), false, r);

    let zero = int(0);
    let g0 = p.g0.eval(&zero);
    let g0p = p.g0.derivative().eval(&zero);
    use num_traits::Signed;
    let val = (&g0 + target_value()).abs() + a1 * p.j1.eval(&zero).abs() + a2 * p.j2.eval(&zero).abs() + Thresholds::eps1();
    let slope =
        (&g0p - target_slope()).abs() + a1 * p.j1p.eval(&zero).abs() + a2 * p.j2p.eval(&zero).abs() + Thresholds::eps2();
    rep.below("|g(0) + 87/469| < 1/167", Interval::point(val), true, &Thresholds::value());
    rep.below("|g'(0) - 41/134| < 1/108", Interval::point(slope), true, &Thresholds::slope());
    rep.note(format!("sup |W - 1| <= {}", to_decimal(&wm1, 8)));
    rep.note("initial data are anchored at t0 (the Green operators integrate from t0)");
    Ok(rep)
}
