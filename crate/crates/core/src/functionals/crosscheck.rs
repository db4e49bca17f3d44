//! Rebuilds the closed-form constants from the table polynomials through
//! the weighted l1 functionals and compares them coefficientwise.

use serde::Serialize;

use super::catalog::{closed_form, m_g1, m_lq, m_q, CatalogError};
use super::exppoly::{f_functional, ExpPoly, FKind, FunctionalError};
use super::powersum::PowerSum;
use crate::data::AppendixData;
use crate::formal::{table_series, FormalSeries};
use crate::numerics::rational::format_rational;
use crate::numerics::{int, rat};

#[derive(Clone, Debug, Serialize)]
pub struct TermMismatch {
    pub r_power: u32,
    pub s_power: u32,
    pub sqrt2: bool,
    pub closed_form: String,
    pub from_tables: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossItem {
    pub name: String,
    pub pass: bool,
    pub mismatches: Vec<TermMismatch>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub items: Vec<CrossItem>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn render(&self) -> String {
        let mut out = format!("functional crosscheck: {}\n", if self.passed() { "PASS" } else { "FAIL" });
        for i in &self.items {
            out.push_str(&format!("  [{}] {}\n", if i.pass { "ok" } else { "FAIL" }, i.name));
            for m in &i.mismatches {
                out.push_str(&format!(
                    "      rho^(-{}/2) |S|^{}{}: closed form {} tables {}\n",
                    m.r_power,
                    m.s_power,
                    if m.sqrt2 { " sqrt2" } else { "" },
                    m.closed_form,
                    m.from_tables
                ));
            }
        }
        out
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CrosscheckError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Functional(#[from] FunctionalError),
}

struct Tables {
    r: FormalSeries,
    r_shifted: FormalSeries,
    q: FormalSeries,
    e: FormalSeries,
    t: FormalSeries,
    t_tilde: FormalSeries,
    u_tilde: FormalSeries,
    p: FormalSeries,
}

impl Tables {
    fn load(data: &AppendixData) -> Self {
        let r = table_series(data, "r");
        let r_shifted = r.filter(|t| !(t.k == 0 && t.m == 0));
        Tables {
            r,
            r_shifted,
            q: table_series(data, "q"),
            e: table_series(data, "E"),
            t: table_series(data, "t"),
            t_tilde: table_series(data, "t_tilde"),
            u_tilde: table_series(data, "u_tilde"),
            p: table_series(data, "p"),
        }
    }
}

fn f(kind: FKind, s: &FormalSeries, table_j: i32, weight: i64) -> Result<PowerSum, FunctionalError> {
    f_functional(kind, &ExpPoly::from_series(s, table_j), &int(weight))
}

/// `sum over weight j in range of rho^(-(j-base)/2) F_kind,j[s_(j - offset)]`.
fn weighted_sum(
    kind: FKind,
    s: &FormalSeries,
    range: std::ops::RangeInclusive<i32>,
    offset: i32,
    base: i32,
) -> Result<PowerSum, FunctionalError> {
    let mut acc = PowerSum::zero();
    for j in range {
        acc = acc.add(&f(kind, s, j - offset, j as i64)?.shift_r((j - base) as u32));
    }
    Ok(acc)
}

pub fn source_bound(data: &AppendixData) -> Result<PowerSum, FunctionalError> {
    weighted_sum(FKind::F2, &Tables::load(data).e, 5..=8, 0, 2)
}

/// Every reconstructed constant paired with its closed form.
pub fn reconstructions(data: &AppendixData) -> Result<Vec<(&'static str, PowerSum, PowerSum)>, CrosscheckError> {
    let tb = Tables::load(data);
    let mut out = Vec::new();

    out.push(("E_M", closed_form(data, "E_M")?, weighted_sum(FKind::F2, &tb.e, 5..=8, 0, 2)?));
    out.push(("M_q", m_q(data)?, weighted_sum(FKind::F1, &tb.q, 10..=14, 5, 7)?));
    out.push(("M_Lq", m_lq(data)?, weighted_sum(FKind::F3, &tb.q, 10..=14, 5, 7)?));

    let mut g1 = PowerSum::monomial(rat(784, 3125), 0, 0, true);
    g1 = g1.add(&f(FKind::F1, &tb.r.add(&tb.r_shifted), 7, 7)?);
    for j in 8..=9 {
        g1 = g1.add(&f(FKind::F1, &tb.r, j, j as i64)?.scale(&int(2)).shift_r((j - 7) as u32));
    }
    out.push(("M_G1", m_g1(data)?, g1));

    let g2 = weighted_sum(FKind::F1, &tb.r, 7..=8, 2, 7)?;
    out.push(("M_G2", closed_form(data, "M_G2")?, g2.clone()));
    out.push(("M_G3", closed_form(data, "M_G3")?, g2.add(&weighted_sum(FKind::F1, &tb.r, 5..=6, 0, 5)?)));

    let mut g40 = PowerSum::zero();
    for j in 5..=8 {
        g40 = g40.add(&ExpPoly::from_series(&tb.p, j).abs_sum().shift_r((j - 5) as u32));
    }
    out.push(("M_G40", closed_form(data, "M_G40")?, g40));

    let z2_head = PowerSum::constant(rat(1, 2)).add(&PowerSum::s().mul(&PowerSum::r()).scale(&rat(2, 3)));
    let g41 = z2_head
        .mul(&weighted_sum(FKind::F1, &tb.t_tilde, 7..=9, 0, 7)?)
        .add(&weighted_sum(FKind::F1, &tb.u_tilde, 7..=10, 0, 7)?);
    out.push(("M_G41", closed_form(data, "M_G41")?, g41));

    out.push(("M_G5", closed_form(data, "M_G5")?, weighted_sum(FKind::F3, &tb.r, 7..=9, 0, 7)?));
    out.push(("M_G6", closed_form(data, "M_G6")?, weighted_sum(FKind::F3, &tb.r, 7..=8, 2, 7)?));
    out.push(("M_G7", closed_form(data, "M_G7")?, weighted_sum(FKind::F4, &tb.t, 5..=7, 0, 5)?));
    Ok(out)
}

pub fn crosscheck_functional_tables(data: &AppendixData) -> Result<CrosscheckReport, CrosscheckError> {
    let items = reconstructions(data)?
        .into_iter()
        .map(|(name, closed, rebuilt)| {
            let diff = rebuilt.sub(&closed);
            let mismatches: Vec<TermMismatch> = diff
                .terms()
                .map(|((a, b, q), _)| TermMismatch {
                    r_power: *a,
                    s_power: *b,
                    sqrt2: *q,
                    closed_form: format_rational(&closed.coeff(*a, *b, *q)),
                    from_tables: format_rational(&rebuilt.coeff(*a, *b, *q)),
                })
                .collect();
            CrossItem { name: name.to_string(), pass: mismatches.is_empty(), mismatches }
        })
        .collect();
    Ok(CrosscheckReport { items })
}
