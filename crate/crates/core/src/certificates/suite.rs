//! Runs every certificate and assembles the analyticity region.

use serde::Serialize;

use super::inner::{check_inner_interval, InnerParams};
use super::omega4::check_omega_4;
use super::outer::{check_omega_12_with, check_omega_i, check_z0_bounds};
use super::quadrature::DEFAULT_PANELS;
use super::radius::check_taylor_radius;
use super::report::{CertificateReport, Relation};
use crate::data::DataSet;
use crate::formal::verify_all;
use crate::functionals::crosscheck_functional_tables;
use crate::numerics::{int, rat, Constants, Interval, Rational};

pub const REGION: &str = "{z != 0 : arg z in [-3 pi/5, pi]} U {z : |z| < 37/20}";

/// Subset of the certificates selected on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    All,
    #[serde(rename = "omegaI")]
    OmegaI,
    Omega12,
    Omega4,
    Inner,
    Radius,
}

impl Scope {
    pub const NAMES: [&'static str; 6] = ["all", "omegaI", "omega12", "omega4", "inner", "radius"];

    pub fn parse(s: &str) -> Option<Scope> {
        match s {
            "all" => Some(Scope::All),
            "omegaI" => Some(Scope::OmegaI),
            "omega12" => Some(Scope::Omega12),
            "omega4" => Some(Scope::Omega4),
            "inner" => Some(Scope::Inner),
            "radius" => Some(Scope::Radius),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        Scope::NAMES[self as usize]
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub rho: Rational,
    pub inner: InnerParams,
    pub panels: u32,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { rho: int(3), inner: InnerParams::default(), panels: DEFAULT_PANELS }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub reports: Vec<CertificateReport>,
    pub verdict: bool,
    pub failing: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub region: Option<String>,
    pub narrative: Vec<String>,
}

impl SuiteResult {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.render());
        }
        out.push_str(&format!("\noverall: {}\n", if self.verdict { "PASS" } else { "FAIL" }));
        if !self.failing.is_empty() {
            out.push_str(&format!("failing: {}\n", self.failing.join(", ")));
        }
        if let Some(r) = &self.region {
            out.push_str(&format!("analytic region: {r}\n"));
        }
        for n in &self.narrative {
            out.push_str(&format!("  - {n}\n"));
        }
        out
    }

    pub fn precondition_violated(&self) -> bool {
        self.reports.iter().any(|r| r.precondition.is_some())
    }
}

fn formal_report(data: &DataSet) -> CertificateReport {
    let mut rep = CertificateReport::new("table identities");
    for t in verify_all(&data.appendix) {
        let bad = t.mismatches().count() + t.items.iter().filter(|i| !i.pass && i.mismatches.is_empty()).count();
        rep.check(
            format!("{}: failed checks", t.name),
            Interval::from_int(bad as i64),
            Relation::Le,
            Interval::zero(),
        );
    }
    match crosscheck_functional_tables(&data.appendix) {
        Ok(c) => {
            for item in c.items {
                rep.check(
                    format!("{} closed form reproduced from functionals: mismatched terms", item.name),
                    Interval::from_int(item.mismatches.len() as i64),
                    Relation::Le,
                    Interval::zero(),
                );
            }
        }
        Err(e) => rep.violate(e.to_string()),
    }
    rep
}

fn failed(name: &str, why: String) -> CertificateReport {
    let mut r = CertificateReport::new(name);
    r.violate(why);
    r
}

type Job<'a> = Box<dyn Fn() -> CertificateReport + Send + Sync + 'a>;

fn jobs<'a>(data: &'a DataSet, opts: &'a SuiteOptions, scope: Scope) -> Vec<Job<'a>> {
    let mut out: Vec<Job<'a>> = Vec::new();
    let all = scope == Scope::All;
    if all {
        out.push(Box::new(move || formal_report(data)));
    }
    if all || scope == Scope::OmegaI {
        out.push(Box::new(|| check_omega_i(&Interval::from_int(1), &rat(3, 20))));
        out.push(Box::new(|| {
            let mut r = check_omega_i(&Constants::get().abs_x0, &rat(1, 40));
            r.name = "omega_I contraction at |x0|".into();
            r
        }));
        out.push(Box::new(|| check_z0_bounds().unwrap_or_else(|e| failed("matching errors at z0", e.to_string()))));
    }
    if all || scope == Scope::Omega12 {
        out.push(Box::new(move || {
            check_omega_12_with(&rat(3, 2), opts.panels).unwrap_or_else(|e| failed("omega_12 contraction", e.to_string()))
        }));
    }
    if all || scope == Scope::Omega4 {
        out.push(Box::new(move || check_omega_4(&data.appendix, &opts.rho)));
    }
    if all || scope == Scope::Inner {
        out.push(Box::new(move || {
            check_inner_interval(&data.partitions, &opts.inner)
                .unwrap_or_else(|e| failed("inner interval contraction", e.to_string()))
        }));
    }
    if all || scope == Scope::Radius {
        out.push(Box::new(check_taylor_radius));
    }
    out
}

/// Runs all certificates concurrently; reports are ordered by name.
pub fn run_all(data: &DataSet, opts: &SuiteOptions) -> SuiteResult {
    run_scope(data, opts, Scope::All)
}

/// Runs the certificates in `scope`; the region is stated only for the full run.
pub fn run_scope(data: &DataSet, opts: &SuiteOptions, scope: Scope) -> SuiteResult {
    use rayon::prelude::*;
    let mut reports: Vec<CertificateReport> = jobs(data, opts, scope).par_iter().map(|j| j()).collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    let failing: Vec<String> = reports.iter().filter(|r| !r.verdict).map(|r| r.name.clone()).collect();
    let verdict = failing.is_empty();
    if scope != Scope::All {
        return SuiteResult { verdict, region: None, failing, reports, narrative: Vec::new() };
    }
    let narrative = vec![
        "outer sector |z| >= 17/10, -3 pi/5 <= arg z <= pi/5: contraction in the far, intermediate and anti-Stokes regions".into(),
        "matching at z0 = (17/10) e^(i pi/5), i.e. t0 = -17/10, with errors 3/890 and 29/4468".into(),
        "inner interval [t0, 0]: g(0) and g'(0) enclosed to 1/167 and 1/108".into(),
        "Maclaurin series at t = 0 converges in |t| < 37/20".into(),
        "reflection symmetry (real on the imaginary x axis) extends regularity to arg z in [pi/5, pi]; this step is not machine-checked".into(),
    ];
    SuiteResult { verdict, region: verdict.then(|| REGION.to_string()), failing, reports, narrative }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_rho_reports_precondition() {
        let opts = SuiteOptions { rho: int(2), panels: 256, ..SuiteOptions::default() };
        let r = run_all(&DataSet::default(), &opts);
        assert!(!r.verdict);
        assert!(r.precondition_violated());
        assert!(r.region.is_none());
    }

    #[test]
    fn scopes_select_reports() {
        let data = DataSet::default();
        let r = run_scope(&data, &SuiteOptions::default(), Scope::OmegaI);
        assert_eq!(r.reports.len(), 3);
        assert!(r.verdict && r.region.is_none());
        let r = run_scope(&data, &SuiteOptions { rho: int(2), ..SuiteOptions::default() }, Scope::Omega4);
        assert!(r.precondition_violated());
        for n in Scope::NAMES {
            assert_eq!(Scope::parse(n).unwrap().name(), n);
        }
    }
}
