//! Single-coefficient perturbations must be caught and attributed.

use p1cert::certificates::{check_inner_interval, check_omega_4, run_scope, InnerParams, Scope, SuiteOptions};
use p1cert::data::{AppendixData, DataSet, PartitionData};
use p1cert::formal::verify_all;
use p1cert::functionals::crosscheck_functional_tables;
use p1cert::numerics::{int, rat};

mod common;

use common::{bump, closed_form_fault_escapes, table_fault_escapes};

#[test]
fn shipped_data_is_clean() {
    let d = AppendixData::embedded();
    assert!(verify_all(&d).iter().all(|t| t.passed()));
    assert!(crosscheck_functional_tables(&d).unwrap().passed());
}

#[test]
fn every_table_coefficient_is_guarded() {
    let silent = table_fault_escapes(&AppendixData::embedded());
    assert!(silent.is_empty(), "unattributed perturbations: {silent:?}");
}

#[test]
fn every_closed_form_coefficient_is_guarded() {
    let silent = closed_form_fault_escapes(&AppendixData::embedded());
    assert!(silent.is_empty(), "unattributed perturbations: {silent:?}");
}

#[test]
fn perturbed_far_field_constant_fails_omega_4() {
    let mut d = AppendixData::embedded();
    let i = d.closed_forms.iter().position(|e| e.name == "M_G6" && e.r_power == 0 && e.s_power == 2).unwrap();
    d.closed_forms[i].coeff = bump(&d.closed_forms[i].coeff);
    let rep = check_omega_4(&d, &int(3));
    assert!(!rep.verdict);
    assert!(rep.failures().any(|f| f.desc.contains("M6")));
}

#[test]
fn widened_alpha1_fails_inner() {
    let params = InnerParams { alpha1: rat(1, 50), ..InnerParams::default() };
    let rep = check_inner_interval(&PartitionData::embedded(), &params).unwrap();
    assert!(!rep.verdict);
    let failed: Vec<&str> = rep.failures().map(|f| f.desc.as_str()).collect();
    assert!(failed.contains(&"|a1 J1 + a2 J2| < 1/180 at (alpha1, alpha2)"), "{failed:?}");
    assert!(failed.contains(&"|g(0) + 87/469| < 1/167"), "{failed:?}");
    assert!(rep.inputs.get("alpha1").map(String::as_str) == Some("1/50"), "{:?}", rep.inputs);
}

#[test]
fn coarsened_partition_names_the_residual_bound() {
    let mut parts = PartitionData::embedded();
    let plan = parts.plans.iter_mut().find(|p| p.name() == "residual").unwrap();
    *plan = p1cert::polybound::PartitionPlan::new("residual", vec![rat(-17, 10), int(0)]).unwrap();
    let rep = check_inner_interval(&parts, &InnerParams::default()).unwrap();
    let failed: Vec<&str> = rep.failures().map(|f| f.desc.as_str()).collect();
    assert_eq!(failed.len(), 1);
    assert!(failed[0].starts_with("|R| < 1/8619"), "{failed:?}");
}

#[test]
fn small_rho_is_a_precondition_violation() {
    let data = DataSet::load(None, None).unwrap();
    let opts = SuiteOptions { rho: int(2), ..SuiteOptions::default() };
    let r = run_scope(&data, &opts, Scope::Omega4);
    assert!(!r.verdict);
    assert!(r.precondition_violated());
    assert!(r.reports.iter().all(|rep| rep.inequalities.iter().all(|i| i.pass)));
}
