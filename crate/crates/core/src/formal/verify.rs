//! Exact verification of the shipped tables against their definitions.

use serde::Serialize;

use super::quasi;
use super::series::FormalSeries;
use super::tables::table_series;
use crate::data::AppendixData;
use crate::numerics::rational::format_rational;
use crate::numerics::{int, Rational};
use crate::polybound::Poly;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Mismatch {
    pub table: String,
    pub k: u32,
    pub j: i32,
    pub m: i32,
    pub table_coeff: String,
    pub computed_coeff: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub desc: String,
    pub pass: bool,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCheckReport {
    pub name: String,
    pub items: Vec<CheckItem>,
}

impl TableCheckReport {
    fn new(name: &str) -> Self {
        TableCheckReport { name: name.to_string(), items: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Mismatch> {
        self.items.iter().flat_map(|i| i.mismatches.iter())
    }

    fn flag(&mut self, desc: impl Into<String>, pass: bool) {
        self.items.push(CheckItem { desc: desc.into(), pass, mismatches: Vec::new() });
    }

    /// Termwise comparison; every differing coefficient is listed.
    fn compare(&mut self, desc: impl Into<String>, table: &str, expected: &FormalSeries, computed: &FormalSeries) {
        let diff = computed.sub(expected);
        let mismatches: Vec<Mismatch> = diff
            .terms()
            .map(|(key, _)| Mismatch {
                table: table.to_string(),
                k: key.k,
                j: key.j,
                m: key.m,
                table_coeff: format_rational(&expected.coeff(key.k, key.j, key.m)),
                computed_coeff: format_rational(&computed.coeff(key.k, key.j, key.m)),
            })
            .collect();
        self.items.push(CheckItem { desc: desc.into(), pass: mismatches.is_empty(), mismatches });
    }

    pub fn render(&self) -> String {
        let mut out = format!("{}: {}\n", self.name, if self.passed() { "PASS" } else { "FAIL" });
        for item in &self.items {
            out.push_str(&format!("  [{}] {}\n", if item.pass { "ok" } else { "FAIL" }, item.desc));
            for mm in &item.mismatches {
                out.push_str(&format!(
                    "      {} j={} k={} m={}: table {} computed {}\n",
                    mm.table, mm.j, mm.k, mm.m, mm.table_coeff, mm.computed_coeff
                ));
            }
        }
        out
    }
}

fn structural(report: &mut TableCheckReport, desc: &str, table: &str, s: &FormalSeries, ok: impl Fn(i32) -> bool) {
    let bad: Vec<Mismatch> = s
        .terms()
        .filter(|(key, _)| !ok(key.m))
        .map(|(key, c)| Mismatch {
            table: table.to_string(),
            k: key.k,
            j: key.j,
            m: key.m,
            table_coeff: format_rational(c),
            computed_coeff: "forbidden term".into(),
        })
        .collect();
    report.items.push(CheckItem { desc: desc.to_string(), pass: bad.is_empty(), mismatches: bad });
}

pub fn verify_r_table(data: &AppendixData) -> TableCheckReport {
    let mut rep = TableCheckReport::new("residual table r");
    let table = table_series(data, "r");
    let computed = quasi::residual();
    rep.compare("R equals the sum of x^(-j/2) r_j", "r", &table, &computed);
    rep.flag("R has only half-powers 5..9", computed.j_values() == vec![5, 6, 7, 8, 9]);
    let constants: Vec<(i32, Rational)> =
        table.terms().filter(|(t, _)| t.m == 0 && t.k == 0).map(|(t, c)| (t.j, c.clone())).collect();
    rep.flag(
        "only r_7 carries a constant term, equal to -392/625",
        constants == vec![(7, quasi::residual_constant())],
    );
    rep
}

pub fn verify_q_table(data: &AppendixData) -> TableCheckReport {
    let mut rep = TableCheckReport::new("potential table q");
    let table = table_series(data, "q");
    rep.compare("y1'' - (1+h0) y1 equals the sum of x^(-j/2) q_j", "q", &table, &quasi::q_times_y1());
    structural(&mut rep, "every q_j has 1/zeta-degree at least 2", "q", &table, |m| m >= 2);
    rep
}

pub fn verify_e_table(data: &AppendixData) -> TableCheckReport {
    let mut rep = TableCheckReport::new("source table E");
    let table = table_series(data, "E");
    rep.compare("E equals the sum of x^(-j/2) E_j", "E", &table, &quasi::source_e());
    structural(&mut rep, "E_j have no constant term", "E", &table, |m| m != 0);
    rep
}

pub fn verify_g04_tables(data: &AppendixData) -> TableCheckReport {
    let mut rep = TableCheckReport::new("Green-operator tables t, u, tau, t~, nu, u~, p");
    let t = table_series(data, "t");
    let u = table_series(data, "u");
    let tau = table_series(data, "tau");
    let tt = table_series(data, "t_tilde");
    let nu = table_series(data, "nu");
    let ut = table_series(data, "u_tilde");
    let p = table_series(data, "p");
    let big_t = quasi::product_t();
    let big_u = quasi::product_u();
    rep.compare("T = (y10+y11)(R0+R1) equals the sum of x^(-j/2) t_j", "t", &t, &big_t);
    rep.compare("U = T (z20+z21) equals the sum of x^(-j/2) u_j", "u", &u, &big_u);
    rep.compare("T - d/dx(sum tau) equals the sum of t~", "t_tilde", &tt, &big_t.sub(&tau.differentiate()));
    rep.compare("U - d/dx(sum nu) equals the sum of u~", "u_tilde", &ut, &big_u.sub(&nu.differentiate()));
    rep.compare("sum nu - (z20+z21) sum tau equals the sum of p", "p", &p, &nu.sub(&quasi::z2_head().mul(&tau)));
    structural(&mut rep, "t_j have no constant or linear 1/zeta terms", "t", &t, |m| m >= 2);
    structural(&mut rep, "u_j have no constant term", "u", &u, |m| m != 0);
    structural(&mut rep, "p_j have no constant term", "p", &p, |m| m != 0);
    rep
}

/// Sum of `(j+1)(k-j+1)` for `j = 0..=k`.
pub fn comparison_sum(k: u64) -> Rational {
    (0..=k).map(|j| int(((j + 1) * (k - j + 1)) as i64)).sum()
}

pub fn verify_auxiliary_identities() -> TableCheckReport {
    let mut rep = TableCheckReport::new("auxiliary identities");
    rep.compare(
        "J = S e^(-x)/3 (1 + j/sqrt x)",
        "J",
        &quasi::big_j(),
        &quasi::big_j_from_small(),
    );
    // u stands for x^(-1/2) J; both sides multiplied by (1+u)^2.
    let u = Poly::variable(int(0));
    let one = Poly::constant(int(1), int(0));
    let sq = one.add(&u).powi(2);
    let quad = one.sub(&u.scale(&int(2))).add(&u.powi(2).scale(&int(3)));
    let lhs = one.sub(&quad.mul(&sq));
    let rhs = u
        .powi(3)
        .scale(&int(-4))
        .mul(&sq)
        .add(&u.powi(4).scale(&int(5)).mul(&one.add(&u)))
        .sub(&u.powi(5));
    rep.flag("1 - (1-2u+3u^2)(1+u)^2 = -4u^3(1+u)^2 + 5u^4(1+u) - u^5", lhs.sub(&rhs).degree().is_none());
    let all = (0..=64u64).all(|k| comparison_sum(k) == int(((k + 1) * (k + 2) * (k + 3) / 6) as i64));
    rep.flag("sum (j+1)(k-j+1) = (k+1)(k+2)(k+3)/6 for k = 0..64", all);
    rep
}

/// Every table check, in a fixed order.
pub fn verify_all(data: &AppendixData) -> Vec<TableCheckReport> {
    let (a, (b, (c, (d, e)))) = rayon::join(
        || verify_r_table(data),
        || {
            rayon::join(
                || verify_q_table(data),
                || rayon::join(|| verify_e_table(data), || rayon::join(|| verify_g04_tables(data), verify_auxiliary_identities)),
            )
        },
    );
    vec![a, b, c, d, e]
}
