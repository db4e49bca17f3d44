//! Subcommand bodies. Each returns an [`Output`] carrying all three renderings.

use std::path::Path;

use serde_json::{json, Map, Value};

use p1cert::certificates::inner::{check_inner_interval, InnerParams};
use p1cert::certificates::{run_scope, Scope, SuiteOptions};
use p1cert::data::DataSet;
use p1cert::evaluator::{
    evaluate_y, integrate, maclaurin, matching_data, origin_state, pole_scan, y_at_zero, ComplexValue,
    IntegrateOptions, PoleOptions, Work,
};
use p1cert::formal::verify_all;
use p1cert::functionals::{crosscheck_functional_tables, derive_all, matches_printed, REFERENCE_VALUES};
use p1cert::numerics::rational::{format_rational, to_decimal, to_decimal_directed, to_f64};
use p1cert::numerics::{int, rat, Interval, Rational};

use crate::parse;
use crate::Format;

const DIGITS: usize = 25;

pub struct Ctx {
    pub data: DataSet,
    pub bits: usize,
}

impl Ctx {
    pub fn new(tables: Option<&Path>, partitions: Option<&Path>, bits: usize) -> Result<Self, String> {
        Work::new(bits).map_err(|e| e.to_string())?;
        let data = DataSet::load(tables, partitions).map_err(|e| e.to_string())?;
        Ok(Ctx { data, bits })
    }

    fn work(&self) -> Work {
        Work::new(self.bits).expect("precision checked at startup")
    }
}

pub struct Output {
    pub command: &'static str,
    pub code: u8,
    pub inputs: Map<String, Value>,
    pub text: String,
    pub result: Value,
    pub csv: String,
    pub warnings: Vec<String>,
}

impl Output {
    fn new(command: &'static str) -> Self {
        Output {
            command,
            code: 0,
            inputs: Map::new(),
            text: String::new(),
            result: Value::Null,
            csv: String::new(),
            warnings: Vec::new(),
        }
    }

    fn input(mut self, k: &str, v: impl Into<Value>) -> Self {
        self.inputs.insert(k.into(), v.into());
        self
    }

    /// Unusable input or a violated precondition.
    fn refuse(mut self, msg: impl Into<String>) -> Self {
        let msg = msg.into();
        self.code = 2;
        self.text = format!("precondition violated: {msg}\n");
        self.result = json!({ "precondition": msg });
        self.csv = format!("error\n\"{msg}\"\n");
        self
    }

    pub fn emit(&self, ctx: &Ctx, format: Format) -> String {
        let a = &ctx.data.appendix;
        let p = &ctx.data.partitions;
        match format {
            Format::Text => format!(
                "p1cert {}\ntables: {} sha256={}\npartitions: {} sha256={}\n\n{}",
                self.command, a.origin, a.sha256, p.origin, p.sha256, self.text
            ),
            Format::Csv => self.csv.clone(),
            Format::Json => {
                let env = json!({
                    "tool": "p1cert",
                    "version": env!("CARGO_PKG_VERSION"),
                    "command": self.command,
                    "inputs": self.inputs,
                    "data": {
                        "tables": { "origin": a.origin, "sha256": a.sha256 },
                        "partitions": { "origin": p.origin, "sha256": p.sha256 },
                    },
                    "verdict": self.code == 0,
                    "exit_code": self.code,
                    "result": self.result,
                    "warnings": self.warnings,
                });
                let mut s = serde_json::to_string_pretty(&env).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn complex_json(c: &ComplexValue) -> Value {
    let (re, im) = c.to_decimal(DIGITS);
    json!([re, im])
}

fn complex_text(c: &ComplexValue) -> String {
    c.to_string()
}

pub fn verify(ctx: &Ctx, scope: &str, rho: &str, panels: u32) -> Output {
    let out = Output::new("verify").input("scope", scope).input("rho", rho).input("panels", panels);
    let scope = Scope::parse(scope).expect("validated by the argument parser");
    let rho = match parse::number(rho) {
        Ok(r) => r,
        Err(e) => return out.refuse(e),
    };
    let opts = SuiteOptions { rho, panels, ..SuiteOptions::default() };
    let r = run_scope(&ctx.data, &opts, scope);
    let mut out = out;
    out.code = if r.precondition_violated() {
        2
    } else if r.verdict {
        0
    } else {
        1
    };
    out.text = r.render();
    out.result = serde_json::to_value(&r).expect("serializable");
    out.csv = String::from("report,inequality,lhs_lo,lhs_hi,relation,rhs_lo,rhs_hi,pass\n");
    for rep in &r.reports {
        for i in &rep.inequalities {
            out.csv.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                csv_field(&rep.name),
                csv_field(&i.desc),
                to_decimal_directed(i.lhs.lo(), 20, false),
                to_decimal_directed(i.lhs.hi(), 20, true),
                i.rel,
                to_decimal_directed(i.rhs.lo(), 20, false),
                to_decimal_directed(i.rhs.hi(), 20, true),
                i.pass
            ));
        }
        if let Some(p) = &rep.precondition {
            out.csv.push_str(&format!("{},{},,,,,,false\n", csv_field(&rep.name), csv_field(&format!("precondition: {p}"))));
        }
    }
    out
}

pub fn constants(ctx: &Ctx, rho: &str) -> Output {
    let out = Output::new("constants").input("rho", rho);
    let rho = match parse::number(rho) {
        Ok(r) => r,
        Err(e) => return out.refuse(e),
    };
    if rho < int(3) {
        return out.refuse(format!("rho = {} is below 3", format_rational(&rho)));
    }
    let rows = match derive_all(&ctx.data.appendix, &rho) {
        Ok(r) => r,
        Err(e) => return out.refuse(e.to_string()),
    };
    let at_three = rho == int(3);
    let mut out = out;
    let mut failed = Vec::new();
    let mut json_rows = Vec::new();
    out.text = format!("{:<8} {:>16} {:>16} {:>12} {:>10}  {}\n", "name", "lo", "hi", "width", "reference", "check");
    out.csv = String::from("name,lo,hi,width,reference,matches\n");
    for d in &rows {
        let reference = REFERENCE_VALUES.iter().find(|(n, _)| *n == d.name).map(|(_, v)| *v);
        let width = d.value.width();
        let check = match (reference, at_three) {
            (Some(v), true) => Some(matches_printed(&d.value, v)),
            _ => None,
        };
        if check == Some(false) {
            failed.push(d.name.clone());
        }
        let width_s = format!("{:.2e}", to_f64(&width));
        out.text.push_str(&format!(
            "{:<8} {:>16} {:>16} {:>12} {:>10}  {}\n",
            d.name,
            d.lo,
            d.hi,
            width_s,
            reference.unwrap_or("-"),
            match check {
                Some(true) => "ok",
                Some(false) => "MISMATCH",
                None => "-",
            }
        ));
        out.csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            d.name,
            d.lo,
            d.hi,
            width_s,
            reference.unwrap_or(""),
            check.map(|c| c.to_string()).unwrap_or_default()
        ));
        let mut row = serde_json::to_value(d).expect("serializable");
        row["width"] = json!(width_s);
        row["reference"] = json!(reference);
        row["matches"] = json!(check);
        json_rows.push(row);
    }
    if !at_three {
        out.text.push_str("reference values are stated for rho = 3 only\n");
    }
    if !failed.is_empty() {
        out.code = 1;
        out.text.push_str(&format!("mismatched: {}\n", failed.join(", ")));
    }
    out.result = json!({ "rho": format_rational(&rho), "constants": json_rows, "mismatched": failed });
    out
}

pub fn identities(ctx: &Ctx) -> Output {
    let mut out = Output::new("identities");
    let tables = verify_all(&ctx.data.appendix);
    let cross = crosscheck_functional_tables(&ctx.data.appendix);
    let mut ok = tables.iter().all(|t| t.passed());
    out.csv = String::from("suite,item,pass\n");
    for t in &tables {
        out.text.push_str(&t.render());
        for i in &t.items {
            out.csv.push_str(&format!("{},{},{}\n", csv_field(&t.name), csv_field(&i.desc), i.pass));
        }
    }
    let cross_json = match &cross {
        Ok(c) => {
            ok &= c.passed();
            out.text.push_str(&c.render());
            for i in &c.items {
                out.csv.push_str(&format!("functionals,{},{}\n", csv_field(&i.name), i.pass));
            }
            serde_json::to_value(c).expect("serializable")
        }
        Err(e) => {
            ok = false;
            out.text.push_str(&format!("functional crosscheck failed to run: {e}\n"));
            json!({ "error": e.to_string() })
        }
    };
    out.text.push_str(&format!("\noverall: {}\n", if ok { "PASS" } else { "FAIL" }));
    out.code = if ok { 0 } else { 1 };
    out.result = json!({ "tables": tables, "functionals": cross_json });
    out
}

fn ball_text(center: &Rational, radius: &Rational) -> String {
    let iv = Interval::ball(center, radius);
    format!(
        "{} +- {}  = ({}, {})",
        format_rational(center),
        format_rational(radius),
        to_decimal_directed(iv.lo(), 10, false),
        to_decimal_directed(iv.hi(), 10, true)
    )
}

fn eval_origin(ctx: &Ctx, mut out: Output) -> Output {
    let mut w = ctx.work();
    let rep = match check_inner_interval(&ctx.data.partitions, &InnerParams::default()) {
        Ok(r) => r,
        Err(e) => return out.refuse(e.to_string()),
    };
    let enc = match y_at_zero(&rep, &mut w) {
        Ok(e) => e,
        Err(_) => {
            out.code = 1;
            out.text = format!("inner certificate failed; no enclosure at z = 0\n{}", rep.render());
            out.result = json!({ "inner": serde_json::to_value(&rep).expect("serializable") });
            out.csv = String::from("quantity,status\nenclosure,failed\n");
            return out;
        }
    };
    let a = enc.value.midpoint();
    let b = enc.slope.midpoint();
    let numeric = integrate(&matching_data(&w), &ComplexValue::zero(&w), &IntegrateOptions::default(), &w).ok();
    let inside = numeric.as_ref().map(|n| {
        let g = n.end.g.re_rational().unwrap_or_default();
        let gp = n.end.gp.re_rational().unwrap_or_default();
        (enc.value.contains(&g), enc.slope.contains(&gp), n.end.g.clone(), n.end.gp.clone())
    });
    out.text = format!(
        "g(0)  in {}\ng'(0) in {}\ny(0)  in disc centre {} radius {}\ny'(0) in disc centre {} radius {}\n",
        ball_text(&a, &enc.value_radius),
        ball_text(&b, &enc.slope_radius),
        complex_text(&enc.y_value),
        format_rational(&enc.value_radius),
        complex_text(&enc.y_slope),
        format_rational(&enc.slope_radius),
    );
    if let Some((gi, gpi, g, gp)) = &inside {
        out.text.push_str(&format!(
            "integrated from t0 (non-rigorous): g(0) = {}, g'(0) = {}; inside enclosures: {}\n",
            to_decimal(&g.re_rational().unwrap_or_default(), 15),
            to_decimal(&gp.re_rational().unwrap_or_default(), 15),
            gi & gpi
        ));
    }
    out.csv = format!(
        "quantity,centre_re,centre_im,radius\ng(0),{},0,{}\ng'(0),{},0,{}\ny(0),{},{},{}\ny'(0),{},{},{}\n",
        to_decimal(&a, DIGITS),
        format_rational(&enc.value_radius),
        to_decimal(&b, DIGITS),
        format_rational(&enc.slope_radius),
        enc.y_value.to_decimal(DIGITS).0,
        enc.y_value.to_decimal(DIGITS).1,
        format_rational(&enc.value_radius),
        enc.y_slope.to_decimal(DIGITS).0,
        enc.y_slope.to_decimal(DIGITS).1,
        format_rational(&enc.slope_radius),
    );
    out.result = json!({
        "z": ["0", "0"],
        "method": "inner_certificate",
        "rigorous": true,
        "g": { "centre": format_rational(&a), "radius": format_rational(&enc.value_radius) },
        "g_prime": { "centre": format_rational(&b), "radius": format_rational(&enc.slope_radius) },
        "y": { "centre": complex_json(&enc.y_value), "radius": format_rational(&enc.value_radius) },
        "y_prime": { "centre": complex_json(&enc.y_slope), "radius": format_rational(&enc.slope_radius) },
        "integrated": inside.as_ref().map(|(gi, gpi, g, gp)| json!({
            "g": complex_json(g), "g_prime": complex_json(gp), "inside": gi & gpi
        })),
    });
    out
}

pub fn eval(ctx: &Ctx, z: &str) -> Output {
    let out = Output::new("eval").input("z", z);
    let mut w = ctx.work();
    let zv = match parse::complex(z, &mut w) {
        Ok(v) => v,
        Err(e) => return out.refuse(e),
    };
    if zv.is_zero() {
        return eval_origin(ctx, out);
    }
    let p = match evaluate_y(&zv, &IntegrateOptions::default(), &mut w) {
        Ok(p) => p,
        Err(e) => return out.refuse(e.to_string()),
    };
    let mut out = out;
    let method = serde_json::to_value(p.method).expect("serializable");
    let method_s = method.as_str().unwrap_or_default().to_string();
    out.text = format!("z     = {}\nt     = {}\n", complex_text(&p.z), complex_text(&p.t));
    if let Some(x) = &p.x {
        out.text.push_str(&format!("x     = {}\n", complex_text(x)));
    }
    out.text.push_str(&format!("y(z)  = {}\n", complex_text(&p.y)));
    if let Some(yp) = &p.yp {
        out.text.push_str(&format!("y'(z) = {}\n", complex_text(yp)));
    }
    out.text.push_str(&format!("method: {method_s}\n"));
    match (p.method, p.error) {
        (p1cert::evaluator::Method::Integration, Some(e)) => {
            out.text.push_str(&format!("round-trip defect: {e:.3e} (estimate, non-rigorous)\n"))
        }
        (_, Some(e)) => out.text.push_str(&format!("error bound: {e:.6e}\n")),
        _ => {}
    }
    if let Some(wm) = &p.warning {
        out.text.push_str(&format!("warning: {wm}\n"));
        out.warnings.push(wm.clone());
    }
    let (yr, yi) = p.y.to_decimal(DIGITS);
    out.csv = format!("re_z,im_z,re_y,im_y,error,method\n{},{},{},{},{},{}\n",
        p.z.to_decimal(DIGITS).0, p.z.to_decimal(DIGITS).1, yr, yi,
        p.error.map(|e| format!("{e:e}")).unwrap_or_default(), method_s);
    out.result = json!({
        "z": complex_json(&p.z),
        "t": complex_json(&p.t),
        "x": p.x.as_ref().map(complex_json),
        "y": complex_json(&p.y),
        "y_prime": p.yp.as_ref().map(complex_json),
        "error": p.error,
        "method": method,
        "rigorous": false,
        "warning": p.warning,
    });
    out
}

pub fn series(ctx: &Ctx, order: usize) -> Output {
    let out = Output::new("series").input("order", order);
    let w = ctx.work();
    let s = match maclaurin(order, &IntegrateOptions::default(), &w) {
        Ok(s) => s,
        Err(e) => return out.refuse(e.to_string()),
    };
    let mut out = out;
    let check = s.coeffs[2].sub(&s.coeffs[0].sqr(&w).scale_int(3, &w), &w);
    out.text = format!("Maclaurin coefficients of g at t = 0 (order {order}, numerical)\n");
    let mut rows = Vec::new();
    for (k, c) in s.coeffs.iter().enumerate() {
        let (re, im) = c.to_decimal(DIGITS);
        out.text.push_str(&format!("c{k:<3} {re:>32} {im:>32}\n"));
        rows.push(json!({ "k": k, "re": re, "im": im }));
    }
    out.text.push_str(&format!("|c2 - 3 c0^2| = {:.3e}\n", check.abs_f64()));
    out.csv = s.to_csv(DIGITS);
    out.result = json!({ "center": ["0", "0"], "order": order, "coeffs": rows, "c2_minus_3c0sq": check.abs_f64() });
    out
}

pub fn pole(ctx: &Ctx, directions: usize, horizon: f64) -> Output {
    let out = Output::new("pole").input("directions", directions).input("horizon", horizon);
    if directions == 0 || !(horizon > 0.0) {
        return out.refuse("need at least one direction and a positive horizon");
    }
    let w = ctx.work();
    let origin = match origin_state(&IntegrateOptions::default(), &w) {
        Ok(o) => o,
        Err(e) => return out.refuse(e.to_string()),
    };
    let opts = PoleOptions { horizon, ..PoleOptions::default() };
    let scan = match pole_scan(&origin, directions, &opts, ctx.bits) {
        Ok(s) => s,
        Err(e) => return out.refuse(e.to_string()),
    };
    let mut out = out;
    let certified = to_f64(&rat(37, 20));
    out.csv = String::from("direction,found,distance,re,im\n");
    for (theta, e) in &scan.directions {
        match e {
            Some(e) => out.csv.push_str(&format!("{theta:.12},true,{:.12},{:.12},{:.12}\n", e.distance, e.location.0, e.location.1)),
            None => out.csv.push_str(&format!("{theta:.12},false,,,\n")),
        }
    }
    match &scan.nearest {
        Some(n) => {
            out.text = format!(
                "nearest pole of g: t = {:.10} {:+.10}i, |t| = {:.10} (direction {:.6})\nexceeds certified radius 37/20: {}\nrays scanned: {}, rays with a pole: {}\n",
                n.location.0,
                n.location.1,
                n.distance,
                n.direction,
                n.distance > certified,
                directions,
                scan.directions.iter().filter(|(_, e)| e.is_some()).count()
            );
        }
        None => {
            out.code = 1;
            out.text = format!("no pole found within horizon {horizon}\n");
        }
    }
    out.result = json!({
        "nearest": scan.nearest,
        "exceeds_certified_radius": scan.nearest.as_ref().map(|n| n.distance > certified),
        "directions": scan.directions.iter().map(|(t, e)| json!({ "direction": t, "estimate": e })).collect::<Vec<_>>(),
    });
    out
}
