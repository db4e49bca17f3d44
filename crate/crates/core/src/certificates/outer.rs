//! Contraction checks in the far region, the matching errors at `z0`, and
//! the intermediate sector.

use super::quadrature::{quad_enclosure, QuadratureEnclosure, DEFAULT_CUTOFF, DEFAULT_PANELS};
use super::report::CertificateReport;
use crate::numerics::constants::default_tol;
use crate::numerics::rational::{format_rational, from_decimal, to_decimal};
use crate::numerics::{int, pow_frac, rat, sqrt_enclosure, Constants, Interval, NumericsError, Rational};

/// Bound on the first iterate: `(2/5)(392/625)`.
pub fn h0_norm_bound() -> Rational {
    rat(784, 3125)
}

fn show(i: &Interval) -> String {
    if i.is_point() {
        format_rational(i.lo())
    } else {
        format!("[{}, {}]", to_decimal(i.lo(), 15), to_decimal(i.hi(), 15))
    }
}

/// Both conditions for the far-region map to be a contraction of the ball
/// of radius `(1+eps) ||H0||` into itself.
pub fn check_omega_i(rho: &Interval, eps: &Rational) -> CertificateReport {
    let mut rep = CertificateReport::new("omega_I contraction");
    rep.input("rho", show(rho)).input("eps", format_rational(eps));
    if rho.lo() < &int(1) || *eps <= int(0) {
        rep.violate("need rho >= 1 and eps > 0");
        return rep;
    }
    let h0 = h0_norm_bound();
    rep.below("||H0|| <= (2/5)(392/625)", Interval::point(rat(2, 5) * rat(392, 625)), false, &h0);
    let one_eps = Interval::point(int(1) + eps);
    let inv_rho = rho.recip().expect("rho >= 1");
    let a = one_eps.mul(&inv_rho).scale(&rat(1, 14));
    let b = one_eps.sqr().mul(&inv_rho.sqr()).scale(&(&h0 / int(9)));
    rep.below("(1+eps)/(14 rho) + (1+eps)^2 ||H0||/(9 rho^2) <= eps", a.add(&b), false, eps);
    let c = inv_rho.scale(&rat(1, 14)).add(&one_eps.mul(&inv_rho.sqr()).scale(&(&h0 * rat(2, 9))));
    rep.below("1/(14 rho) + 2 (1+eps) ||H0||/(9 rho^2) < 1", c, true, &int(1));
    rep.note(format!("ball radius (1+eps)||H0|| = {}", format_rational(&((int(1) + eps) * &h0))));
    rep
}

/// Matching errors at `x0`, and the leading-order values there.
pub fn check_z0_bounds() -> Result<CertificateReport, NumericsError> {
    let c = Constants::get();
    let tol = default_tol();
    let ax = &c.abs_x0;
    let mut rep = CertificateReport::new("matching errors at z0");
    rep.input("|x0|", show(ax)).input("eps", "1/40");
    let pre = check_omega_i(ax, &rat(1, 40));
    rep.check(
        "far-region contraction holds at (|x0|, 1/40)",
        Interval::from_int(pre.failures().count() as i64),
        super::report::Relation::Le,
        Interval::zero(),
    );
    let h_norm = rat(41, 40) * h0_norm_bound();
    let x_m52 = pow_frac(ax, -5, 2, &tol)?;
    let x_m72 = pow_frac(ax, -7, 2, &tol)?;
    let x_m92 = pow_frac(ax, -9, 2, &tol)?;
    let h = x_m52.scale(&h_norm);
    let hp = x_m72
        .scale(&(&h_norm / int(14)))
        .add(&x_m92.scale(&(&h_norm * &h_norm / int(9))))
        .add(&x_m72.scale(&rat(392, 625)));
    rep.note(format!("|H(x0)| <= {}", show(&h.round_outward(64))));
    rep.note(format!("|H'(x0)| <= {}", show(&hp.round_outward(64))));
    let z0 = Interval::point(c.z0mod.clone());
    let e0 = sqrt_enclosure(&z0.div(&ax.scale(&int(6)))?, &tol)?.mul(&h);
    rep.below("|y(z0) - y0(z0)| <= 3/890", e0, false, &rat(3, 890));
    let pref = sqrt_enclosure(&z0.scale(&rat(1, 6)), &tol)?.div(&z0.mul(&sqrt_enclosure(ax, &tol)?))?;
    let e1 = pref.mul(&h.scale(&rat(1, 8)).add(&ax.mul(&hp).scale(&rat(5, 4))));
    rep.below("|y'(z0) - y0'(z0)| <= 29/4468", e1, false, &rat(29, 4468));
    let x2 = ax.sqr();
    let c1 = sqrt_enclosure(&z0.scale(&rat(1, 6)), &tol)?
        .mul(&Interval::one().add(&x2.recip()?.scale(&rat(4, 25))))
        .neg();
    let c2 = sqrt_enclosure(&Interval::from_int(6).div(&z0)?, &tol)?
        .mul(&Interval::point(rat(1, 12)).sub(&x2.recip()?.scale(&rat(4, 75))));
    for (name, v, lo, hi) in [
        ("C1", c1, "-0.5394995", "-0.5394994"),
        ("C2", c2, "0.148075", "0.148076"),
    ] {
        let lo = from_decimal(lo)?;
        let hi = from_decimal(hi)?;
        rep.above(format!("{name} >= {}", to_decimal(&lo, 7)), v.clone(), false, &lo);
        rep.below(format!("{name} <= {}", to_decimal(&hi, 7)), v, false, &hi);
    }
    Ok(rep)
}

/// Quadrature-based constants of the intermediate sector.
#[derive(Clone, Debug)]
pub struct SectorConstants {
    pub m: Interval,
    pub n: Interval,
    pub l: Interval,
    pub quads: Vec<QuadratureEnclosure>,
}

pub fn sector_constants(panels: u32) -> Result<SectorConstants, NumericsError> {
    let c = Constants::get();
    let t = int(DEFAULT_CUTOFF);
    let (q7, (q9, q11)) = rayon::join(
        || quad_enclosure(&rat(7, 4), &t, panels),
        || rayon::join(|| quad_enclosure(&rat(9, 4), &t, panels), || quad_enclosure(&rat(11, 4), &t, panels)),
    );
    let (q7, q9, q11) = (q7?, q9?, q11?);
    let r4 = &c.fourth_root2;
    let m = r4.scale(&int(2)).mul(&q7.value).add_rat(&rat(2, 5)).scale(&rat(196, 625));
    let n = r4.mul(&q11.value).add_rat(&rat(1, 18));
    let l = q9.value.div(&r4.scale(&int(2)))?.add_rat(&rat(1, 28));
    Ok(SectorConstants { m, n, l, quads: vec![q7, q9, q11] })
}

pub fn check_omega_12_with(eps: &Rational, panels: u32) -> Result<CertificateReport, NumericsError> {
    let c = Constants::get();
    let mut rep = CertificateReport::new("omega_12 contraction");
    rep.input("rho0", show(&c.abs_x0)).input("eps", format_rational(eps)).input("panels", panels.to_string());
    rep.input("cutoff", DEFAULT_CUTOFF.to_string());
    let k = sector_constants(panels)?;
    let (bm, bn, bl) = (rat(32, 25), rat(203, 138), rat(3, 5));
    rep.below("M <= 32/25", k.m.clone(), false, &bm);
    rep.below("N <= 203/138", k.n.clone(), false, &bn);
    rep.below("L <= 3/5", k.l.clone(), false, &bl);
    rep.check(
        "far-side bound 784 sqrt2/3125 < M",
        c.sqrt2.scale(&rat(784, 3125)),
        super::report::Relation::Lt,
        k.m.clone(),
    );
    rep.check("far-side linear bound sqrt2/14 < L", c.sqrt2.scale(&rat(1, 14)), super::report::Relation::Lt, k.l.clone());
    let inv = c.abs_x0.recip()?;
    let one_eps = int(1) + eps;
    let first = inv
        .scale(&(&bl * &one_eps))
        .add(&inv.sqr().scale(&(&bn * &bm * &one_eps * &one_eps)));
    rep.below("L (1+eps)/rho0 + N M (1+eps)^2/rho0^2 <= eps", first, false, eps);
    let second = inv.scale(&bl).add(&inv.sqr().scale(&(&bn * &bm * int(2) * &one_eps)));
    rep.below("L/rho0 + 2 N M (1+eps)/rho0^2 < 1", second, true, &int(1));
    for q in &k.quads {
        rep.note(format!(
            "I({}) in [{}, {}] (midpoint remainder {:.2e}, tail {:.2e})",
            format_rational(&q.alpha),
            to_decimal(q.value.lo(), 9),
            to_decimal(q.value.hi(), 9),
            crate::numerics::rational::to_f64(&q.remainder),
            q.tail.hi_f64()
        ));
    }
    rep.note(format!("ball radius (1+eps) M = ({}) M <= {}", format_rational(&one_eps), format_rational(&(&one_eps * &bm))));
    Ok(rep)
}

pub fn check_omega_12() -> Result<CertificateReport, NumericsError> {
    check_omega_12_with(&rat(3, 2), DEFAULT_PANELS)
}
