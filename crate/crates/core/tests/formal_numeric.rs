//! The shipped tables checked as functions of `x` against direct
//! 200-bit evaluation of the defining expressions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use p1cert::data::AppendixData;
use p1cert::evaluator::asymptotic::h0_value;
use p1cert::evaluator::{ComplexValue, Work};
use p1cert::formal::{table_series, FormalSeries};

const BITS: usize = 200;
const STEP: f64 = 1e-14;
const TOL: f64 = 1e-20;

struct Ctx {
    w: Work,
    s: ComplexValue,
}

impl Ctx {
    fn new() -> Self {
        let mut w = Work::new(BITS).unwrap();
        let pi = w.pi();
        let p = w.bits();
        let six_over_five_pi = w.int(6).div(&pi.mul(&w.int(5), p, astro_rm()), p, astro_rm());
        let s = ComplexValue::new(w.int(0), w.sqrt(&six_over_five_pi));
        Ctx { w, s }
    }

    fn c(&self, re: f64, im: f64) -> ComplexValue {
        ComplexValue::from_f64(&self.w, re, im)
    }

    /// `sum c S^k x^(-j/2) e^(-m x)` with the principal square root.
    fn series(&mut self, f: &FormalSeries, x: &ComplexValue) -> ComplexValue {
        let w = &mut self.w;
        let inv_root = x.sqrt(w).recip(w).unwrap();
        let mut acc = ComplexValue::zero(w);
        for (key, c) in f.terms() {
            let mut term = ComplexValue::from_real(w.rational(c), w);
            term = term.mul(&self.s.powi(key.k, w), w);
            let base = if key.j >= 0 { inv_root.clone() } else { x.sqrt(w) };
            term = term.mul(&base.powi(key.j.unsigned_abs(), w), w);
            let e = x.scale_int(-(key.m as i64), w).exp(w);
            acc = acc.add(&term.mul(&e, w), w);
        }
        acc
    }

    /// Value, first and second derivative by central differences.
    fn jet(&mut self, f: &mut dyn FnMut(&mut Self, &ComplexValue) -> ComplexValue, x: &ComplexValue) -> [ComplexValue; 3] {
        let h = self.c(STEP, 0.0);
        let xp = x.add(&h, &self.w);
        let xm = x.sub(&h, &self.w);
        let (f0, fp, fm) = (f(self, x), f(self, &xp), f(self, &xm));
        let w = &self.w;
        let hb = w.real(STEP);
        let d1 = fp.sub(&fm, w).div_real(&hb, w).div_real(&w.int(2), w);
        let d2 = fp.add(&fm, w).sub(&f0.scale_int(2, w), w).div_real(&hb, w).div_real(&hb, w);
        [f0, d1, d2]
    }

    fn h0(&mut self, x: &ComplexValue) -> ComplexValue {
        h0_value(x, &mut self.w).unwrap()
    }

    /// Amplitude correction `J` written out term by term.
    fn big_j(&mut self, x: &ComplexValue) -> ComplexValue {
        let w = &mut self.w;
        let xi = self.s.mul(&x.neg().exp(w), w);
        let inv = x.sqrt(w).recip(w).unwrap();
        let terms = [(1, 3, 1, 0), (1, 16, 2, 1), (-19, 72, 1, 2), (1, 108, 3, 2), (-5, 48, 2, 3), (25, 20736, 4, 3)];
        let mut acc = ComplexValue::zero(w);
        for (n, d, k, j) in terms {
            let t = xi.powi(k, w).mul(&inv.powi(j, w), w).scale(&w.ratio(n, d), w);
            acc = acc.add(&t, w);
        }
        acc
    }

    fn y1(&mut self, x: &ComplexValue) -> ComplexValue {
        let j = self.big_j(x);
        let w = &mut self.w;
        let inv = x.sqrt(w).recip(w).unwrap();
        x.neg().exp(w).mul(&ComplexValue::one(w).add(&inv.mul(&j, w), w), w)
    }

    /// `e^(-x) + S e^(-2x)/(3 sqrt x)`.
    fn y1_head(&mut self, x: &ComplexValue) -> ComplexValue {
        let w = &mut self.w;
        let e = x.neg().exp(w);
        let inv = x.sqrt(w).recip(w).unwrap();
        e.add(&self.s.mul(&e.sqr(w), w).mul(&inv, w).scale(&w.ratio(1, 3), w), w)
    }

    /// `e^(2x)/2 - 2 S e^x/(3 sqrt x)`.
    fn z2_head(&mut self, x: &ComplexValue) -> ComplexValue {
        let w = &mut self.w;
        let e = x.exp(w);
        let inv = x.sqrt(w).recip(w).unwrap();
        e.sqr(w).scale(&w.ratio(1, 2), w).sub(&self.s.mul(&e, w).mul(&inv, w).scale(&w.ratio(2, 3), w), w)
    }

    /// `sqrt(x) (h0'' + h0'/x - h0 - h0^2/2 - (392/625) x^(-4))`.
    fn residual(&mut self, x: &ComplexValue) -> ComplexValue {
        let [h, d1, d2] = self.jet(&mut |c, x| c.h0(x), x);
        let w = &self.w;
        let inv = x.recip(w).unwrap();
        let inner = d2
            .add(&d1.mul(&inv, w), w)
            .sub(&h, w)
            .sub(&h.sqr(w).scale(&w.ratio(1, 2), w), w)
            .sub(&inv.powi(4, w).scale(&w.ratio(392, 625), w), w);
        x.sqrt(w).mul(&inner, w)
    }
}

fn astro_rm() -> astro_float::RoundingMode {
    astro_float::RoundingMode::ToEven
}

fn close(a: &ComplexValue, b: &ComplexValue, scale: f64, w: &Work) -> bool {
    a.dist_f64(b, w) <= TOL * scale.max(1.0)
}

/// Fixed corner plus seeded points with `|x|` in `[3, 12]`, `arg x` in `[-pi/2, pi/2]`.
fn points(ctx: &Ctx) -> Vec<ComplexValue> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut pts = vec![ctx.c(-5.0, 5.0), ctx.c(0.0, 3.437), ctx.c(3.0, -3.0)];
    for _ in 0..12 {
        let r: f64 = rng.gen_range(3.0..12.0);
        let th: f64 = rng.gen_range(-std::f64::consts::FRAC_PI_2..std::f64::consts::FRAC_PI_2);
        pts.push(ctx.c(r * th.cos(), r * th.sin()));
    }
    pts
}

fn table(name: &str) -> FormalSeries {
    table_series(&AppendixData::embedded(), name)
}

#[test]
fn residual_table_matches_direct_evaluation() {
    let mut ctx = Ctx::new();
    let r = table("r");
    for x in points(&ctx) {
        let direct = ctx.residual(&x);
        let tabled = ctx.series(&r, &x);
        let scale = ctx.h0(&x).abs_f64();
        assert!(close(&direct, &tabled, scale, &ctx.w), "x = {x}: {direct} vs {tabled}");
    }
}

#[test]
fn formal_h0_matches_numeric_h0() {
    let mut ctx = Ctx::new();
    let h = p1cert::formal::quasi::h0();
    for x in points(&ctx) {
        let a = ctx.series(&h, &x);
        let b = ctx.h0(&x);
        assert!(a.dist_f64(&b, &ctx.w) <= 1e-50 * b.abs_f64().max(1e-300), "x = {x}");
    }
}

#[test]
fn potential_table_matches_direct_evaluation() {
    let mut ctx = Ctx::new();
    let q = table("q");
    for x in points(&ctx) {
        let [y, _, d2] = ctx.jet(&mut |c, x| c.y1(x), &x);
        let h = ctx.h0(&x);
        let w = &ctx.w;
        let direct = d2.sub(&ComplexValue::one(w).add(&h, w).mul(&y, w), w);
        let scale = y.abs_f64();
        let tabled = ctx.series(&q, &x);
        assert!(close(&direct, &tabled, scale, &ctx.w), "x = {x}: {direct} vs {tabled}");
    }
}

#[test]
fn product_tables_match_direct_evaluation() {
    let mut ctx = Ctx::new();
    let (t, u) = (table("t"), table("u"));
    for x in points(&ctx) {
        let rhead = {
            let full = table("r").filter(|k| k.j == 5 || k.j == 6);
            ctx.series(&full, &x)
        };
        let direct_r = ctx.residual(&x);
        let r_rest = ctx.series(&table("r").filter(|k| k.j >= 7), &x);
        let w = &ctx.w;
        assert!(close(&direct_r.sub(&r_rest, w), &rhead, ctx.h0(&x).abs_f64(), &ctx.w));
        let yh = ctx.y1_head(&x);
        let zh = ctx.z2_head(&x);
        let w = &ctx.w;
        let big_t = yh.mul(&rhead, w);
        let big_u = big_t.mul(&zh, w);
        let (tt, uu) = (ctx.series(&t, &x), ctx.series(&u, &x));
        let scale = zh.abs_f64();
        assert!(close(&big_t, &tt, 1.0, &ctx.w), "x = {x}");
        assert!(close(&big_u, &uu, scale, &ctx.w), "x = {x}");
    }
}

#[test]
fn antiderivative_tables_match_numeric_derivatives() {
    let mut ctx = Ctx::new();
    let (tau, nu, tt, ut, p) = (table("tau"), table("nu"), table("t_tilde"), table("u_tilde"), table("p"));
    let (t, u) = (table("t"), table("u"));
    for x in points(&ctx) {
        let [tau0, dtau, _] = ctx.jet(&mut |c, x| c.series(&tau, x), &x);
        let [nu0, dnu, _] = ctx.jet(&mut |c, x| c.series(&nu, x), &x);
        let (t0, u0) = (ctx.series(&t, &x), ctx.series(&u, &x));
        let (tt0, ut0, p0) = (ctx.series(&tt, &x), ctx.series(&ut, &x), ctx.series(&p, &x));
        let zh = ctx.z2_head(&x);
        let w = &ctx.w;
        let big = |vs: &[&ComplexValue]| vs.iter().map(|v| v.abs_f64()).fold(0.0, f64::max);
        let zt = zh.mul(&tau0, w);
        assert!(close(&t0.sub(&dtau, w), &tt0, big(&[&t0, &dtau, &tau0]), w), "t~ at x = {x}");
        assert!(close(&u0.sub(&dnu, w), &ut0, big(&[&u0, &dnu, &nu0]), w), "u~ at x = {x}");
        assert!(close(&nu0.sub(&zt, w), &p0, big(&[&nu0, &zt]), w), "p at x = {x}");
    }
}

#[test]
fn leading_p_coefficient() {
    use p1cert::numerics::rat;
    let p = table("p");
    assert_eq!(p.coeff(2, 5, 1), rat(53, 192));
    let rebuilt = table("nu").sub(&p1cert::formal::quasi::z2_head().mul(&table("tau")));
    assert_eq!(rebuilt.coeff(2, 5, 1), rat(53, 192));
    assert_eq!(table("r").coeff(2, 5, 2), rat(-53, 64));
}
