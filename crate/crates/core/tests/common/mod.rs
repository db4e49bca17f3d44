//! Checks shared by the property, fault-injection and acceptance targets.
#![allow(dead_code)]

use p1cert::data::{AppendixData, PartitionData};
use p1cert::formal::verify_all;
use p1cert::functionals::crosscheck_functional_tables;
use p1cert::numerics::rational::format_rational;
use p1cert::numerics::{int, parse_rational, rat, Rational};
use p1cert::polybound::{inf_bound, sup_bound, InnerPolys, PartitionPlan, Poly};

/// Exact extremes `(max |p|, min p)` on `n + 1` equispaced points of `[lo, hi]`.
pub fn grid_extremes(p: &Poly, lo: &Rational, hi: &Rational, n: i64) -> (Rational, Rational) {
    let step = (hi - lo) / int(n);
    let mut max_abs = int(0);
    let mut min = p.eval(lo);
    for k in 0..=n {
        let v = p.eval(&(lo + &step * int(k)));
        let a = num_traits::Signed::abs(&v);
        if a > max_abs {
            max_abs = a;
        }
        if v < min {
            min = v;
        }
    }
    (max_abs, min)
}

/// Every inner-interval polynomial against every shipped plan on an `n`-point grid.
/// Returns the violations; also the number of (polynomial, plan) pairs checked.
pub fn inner_bound_violations(n: i64) -> (Vec<String>, usize) {
    let polys = InnerPolys::standard();
    let (lo, hi) = (rat(-17, 10), int(0));
    let mut plans: Vec<PartitionPlan> = PartitionData::embedded().plans;
    plans.push(PartitionPlan::trivial(lo.clone(), hi.clone()));
    let combo = polys.combo(&rat(1, 290), &rat(-1, 152));
    let mut named: Vec<(&str, &Poly)> = polys.named();
    named.push(("a1 J1 - a2 J2", &combo));
    let mut bad = Vec::new();
    let mut pairs = 0;
    for (name, p) in named {
        let (max_abs, min) = grid_extremes(p, &lo, &hi, n);
        for plan in &plans {
            pairs += 1;
            let s = sup_bound(p, plan);
            if max_abs > s {
                bad.push(format!("{name} on {}: grid max {} > sup bound {}", plan.name(), format_rational(&max_abs), format_rational(&s)));
            }
            let i = inf_bound(p, plan);
            if i > min {
                bad.push(format!("{name} on {}: grid min below inf bound", plan.name()));
            }
        }
    }
    (bad, pairs)
}

pub const FAULT: (i64, i64) = (1, 1000);

pub fn bump(s: &str) -> String {
    format_rational(&(parse_rational(s).unwrap() + rat(FAULT.0, FAULT.1)))
}

/// Crosscheck item a closed-form entry feeds.
pub fn owner(closed_form: &str) -> &str {
    if closed_form.starts_with("m_") {
        "M_G1"
    } else if closed_form.starts_with("M_q_") {
        "M_q"
    } else if closed_form.starts_with("M_Lq_") {
        "M_Lq"
    } else {
        closed_form
    }
}

/// Table entries whose perturbation is missed or not attributed to their table.
pub fn table_fault_escapes(base: &AppendixData) -> Vec<String> {
    let mut silent = Vec::new();
    for (i, e) in base.tables.iter().enumerate() {
        let mut d = base.clone();
        d.tables[i].coeff = bump(&e.coeff);
        let reports = verify_all(&d);
        // Exact key in a direct comparison, or a failing identity that names the table.
        let keyed = reports
            .iter()
            .flat_map(|t| t.mismatches())
            .any(|m| m.table == e.table && m.k == e.s_power && m.j == e.j && m.m == e.m);
        let in_desc = reports
            .iter()
            .flat_map(|t| t.items.iter())
            .any(|i| !i.pass && i.desc.split(|c: char| !c.is_alphanumeric() && c != '_').any(|w| w == e.table));
        let failed = reports.iter().any(|t| !t.passed());
        if !(failed && (keyed || in_desc)) {
            silent.push(format!("{} (S^{} x^-{}/2 e^-{}x)", e.table, e.s_power, e.j, e.m));
        }
    }
    silent
}

/// Closed-form entries whose perturbation does not fail exactly their own crosscheck item.
pub fn closed_form_fault_escapes(base: &AppendixData) -> Vec<String> {
    let mut silent = Vec::new();
    for (i, e) in base.closed_forms.iter().enumerate() {
        let mut d = base.clone();
        d.closed_forms[i].coeff = bump(&e.coeff);
        let rep = crosscheck_functional_tables(&d).unwrap();
        let failing: Vec<&str> = rep.items.iter().filter(|i| !i.pass).map(|i| i.name.as_str()).collect();
        if failing != [owner(&e.name)] {
            silent.push(format!("{} rho^-{}/2 |S|^{}: failing {failing:?}", e.name, e.r_power, e.s_power));
        }
    }
    silent
}
