//! Certificate reports: named interval inequalities with a verdict.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::numerics::rational::{format_rational, to_decimal, to_decimal_directed};
use crate::numerics::{Interval, Rational};

/// Decimal places in serialized endpoints; rounding is outward.
pub const REPORT_DIGITS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        })
    }
}

fn ser_interval<S: Serializer>(v: &Interval, s: S) -> Result<S::Ok, S::Error> {
    [to_decimal_directed(v.lo(), REPORT_DIGITS, false), to_decimal_directed(v.hi(), REPORT_DIGITS, true)].serialize(s)
}

/// Exact rational beside its decimal for short points, outward decimals otherwise.
fn show_side(v: &Interval) -> String {
    if v.is_point() {
        let exact = format_rational(v.lo());
        if exact.len() <= 24 {
            return if exact.contains('/') { format!("{exact} (~{})", to_decimal(v.lo(), 10)) } else { exact };
        }
    }
    format!("[{}, {}]", to_decimal_directed(v.lo(), 10, false), to_decimal_directed(v.hi(), 10, true))
}

#[derive(Clone, Debug, Serialize)]
pub struct Inequality {
    pub desc: String,
    #[serde(serialize_with = "ser_interval")]
    pub lhs: Interval,
    pub rel: Relation,
    #[serde(serialize_with = "ser_interval")]
    pub rhs: Interval,
    pub pass: bool,
}

impl Inequality {
    /// Pass only when every point of `lhs` relates to every point of `rhs`.
    pub fn new(desc: impl Into<String>, lhs: Interval, rel: Relation, rhs: Interval) -> Self {
        let pass = match rel {
            Relation::Lt => lhs.hi() < rhs.lo(),
            Relation::Le => lhs.hi() <= rhs.lo(),
            Relation::Gt => lhs.lo() > rhs.hi(),
            Relation::Ge => lhs.lo() >= rhs.hi(),
        };
        Inequality { desc: desc.into(), lhs, rel, rhs, pass }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub name: String,
    pub inputs: BTreeMap<String, String>,
    pub inequalities: Vec<Inequality>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precondition: Option<String>,
    pub verdict: bool,
}

impl CertificateReport {
    pub fn new(name: impl Into<String>) -> Self {
        CertificateReport {
            name: name.into(),
            inputs: BTreeMap::new(),
            inequalities: Vec::new(),
            notes: Vec::new(),
            precondition: None,
            verdict: true,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    pub fn push(&mut self, ineq: Inequality) -> bool {
        let pass = ineq.pass;
        self.verdict &= pass;
        self.inequalities.push(ineq);
        pass
    }

    pub fn check(&mut self, desc: impl Into<String>, lhs: Interval, rel: Relation, rhs: Interval) -> bool {
        self.push(Inequality::new(desc, lhs, rel, rhs))
    }

    /// Shorthand for `lhs < c` or `lhs <= c` with a rational right side.
    pub fn below(&mut self, desc: impl Into<String>, lhs: Interval, strict: bool, c: &Rational) -> bool {
        let rel = if strict { Relation::Lt } else { Relation::Le };
        self.check(desc, lhs, rel, Interval::point(c.clone()))
    }

    pub fn above(&mut self, desc: impl Into<String>, lhs: Interval, strict: bool, c: &Rational) -> bool {
        let rel = if strict { Relation::Gt } else { Relation::Ge };
        self.check(desc, lhs, rel, Interval::point(c.clone()))
    }

    /// Marks the report as not run because an input is out of range.
    pub fn violate(&mut self, why: impl Into<String>) {
        self.precondition = Some(why.into());
        self.verdict = false;
    }

    pub fn failures(&self) -> impl Iterator<Item = &Inequality> {
        self.inequalities.iter().filter(|i| !i.pass)
    }

    pub fn find(&self, prefix: &str) -> Option<&Inequality> {
        self.inequalities.iter().find(|i| i.desc.starts_with(prefix))
    }

    pub fn render(&self) -> String {
        let mut out = format!("== {} : {}\n", self.name, if self.verdict { "PASS" } else { "FAIL" });
        if !self.inputs.is_empty() {
            let kv: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("   inputs: {}\n", kv.join(", ")));
        }
        if let Some(p) = &self.precondition {
            out.push_str(&format!("   precondition violated: {p}\n"));
        }
        for i in &self.inequalities {
            out.push_str(&format!(
                "   [{}] {}: {} {} {}\n",
                if i.pass { "ok" } else { "FAIL" },
                i.desc,
                show_side(&i.lhs),
                i.rel,
                show_side(&i.rhs),
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("   note: {n}\n"));
        }
        out
    }
}
