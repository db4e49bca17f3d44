//! Named constants of the outer-region estimates.

use serde::Serialize;

use super::powersum::{ConstantExpr, EvalContext, PowerSum, PowerTerm};
use crate::data::AppendixData;
use crate::numerics::rational::{decimal_places, format_rational, from_decimal, to_decimal_directed};
use crate::numerics::{int, rat, Interval, NumericsError, Rational};

pub const CATALOG: [&str; 28] = [
    "j_m", "J_M", "Y1M", "Y1RM", "E_M", "z2RM", "z2M", "M_q", "M_Lq", "V_M", "T_M", "M_G1", "M_G2", "M_G3",
    "M_G40", "M_G41", "M_G5", "M_G6", "M_G7", "M1", "M2", "M3", "M4", "M5", "M6", "M7", "M_sum",
    "M_G4",
];

/// Values tabulated for `rho = 3`, as printed (truncated decimals).
pub const REFERENCE_VALUES: [(&str, &str); 18] = [
    ("J_M", "0.282580"),
    ("j_m", "0.64374"),
    ("Y1M", "1.16314"),
    ("Y1RM", "0.132618"),
    ("E_M", "0.0490292"),
    ("z2RM", "0.54226"),
    ("z2M", "0.91863"),
    ("M_q", "0.066702"),
    ("M_Lq", "0.075708"),
    ("V_M", "0.2239"),
    ("T_M", "0.0385"),
    ("M1", "1.13838"),
    ("M2", "0.04303"),
    ("M3", "0.28346"),
    ("M4", "0.45227"),
    ("M5", "0.05430"),
    ("M6", "0.00231"),
    ("M7", "0.02018"),
];

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown constant {0:?}")]
    Unknown(String),
    #[error("closed form {0:?} missing from data")]
    MissingClosedForm(String),
    #[error("evaluating {name}: {source}")]
    Eval { name: String, source: NumericsError },
}

/// A closed form read from the data file.
pub fn closed_form(data: &AppendixData, name: &str) -> Result<PowerSum, CatalogError> {
    let mut p = PowerSum::zero();
    let mut seen = false;
    for e in data.closed_form(name) {
        seen = true;
        p.add_term(e.r_power, e.s_power, e.sqrt2, AppendixData::closed_coeff(e));
    }
    if seen {
        Ok(p)
    } else {
        Err(CatalogError::MissingClosedForm(name.to_string()))
    }
}

fn r() -> PowerSum {
    PowerSum::r()
}

fn s() -> PowerSum {
    PowerSum::s()
}

fn c(n: i64, d: i64) -> PowerSum {
    PowerSum::constant(rat(n, d))
}

fn s_pow(n: u32) -> PowerSum {
    s().pow(n)
}

fn poly(p: PowerSum) -> ConstantExpr {
    ConstantExpr::Poly(p)
}

fn sum(v: Vec<ConstantExpr>) -> ConstantExpr {
    ConstantExpr::Sum(v)
}

fn prod(v: Vec<ConstantExpr>) -> ConstantExpr {
    ConstantExpr::Product(v)
}

pub fn small_j_max() -> PowerSum {
    s().scale(&rat(3, 16))
        .add(&r().scale(&rat(19, 24)))
        .add(&s_pow(2).mul(&r()).scale(&rat(1, 36)))
        .add(&s().mul(&r().pow(2)).scale(&rat(5, 16)))
        .add(&s_pow(3).mul(&r().pow(2)).scale(&rat(25, 6912)))
}

pub fn big_j_max() -> PowerSum {
    s().scale(&rat(1, 3)).mul(&PowerSum::one().add(&small_j_max().mul(&r())))
}

pub fn y1_max() -> PowerSum {
    PowerSum::one().add(&big_j_max().mul(&r()))
}

pub fn y1r_max() -> PowerSum {
    s().mul(&small_j_max()).scale(&rat(1, 3))
}

/// Sum over `i` of `rho^(-i/2)` times the closed form `prefix_i`.
fn indexed(data: &AppendixData, prefix: &str, range: std::ops::RangeInclusive<u32>) -> Result<PowerSum, CatalogError> {
    let mut p = PowerSum::zero();
    for i in range {
        p = p.add(&closed_form(data, &format!("{prefix}_{i}"))?.shift_r(i));
    }
    Ok(p)
}

pub fn m_q(data: &AppendixData) -> Result<PowerSum, CatalogError> {
    indexed(data, "M_q", 3..=7)
}

pub fn m_lq(data: &AppendixData) -> Result<PowerSum, CatalogError> {
    indexed(data, "M_Lq", 3..=7)
}

pub fn m_g1(data: &AppendixData) -> Result<PowerSum, CatalogError> {
    let mut p = PowerSum::zero();
    for i in 0..=2u32 {
        p = p.add(&closed_form(data, &format!("m_{i}_1"))?.shift_r(i));
    }
    Ok(p)
}

fn z2r_max(data: &AppendixData) -> Result<ConstantExpr, CatalogError> {
    let jm = small_j_max();
    let big = big_j_max();
    let head = s_pow(2)
        .scale(&rat(23, 72))
        .add(&s_pow(3).mul(&r()).scale(&rat(23, 216)))
        .add(&s_pow(2).scale(&rat(361, 3456)).add(&s_pow(4).scale(&rat(577, 41472))).mul(&r().pow(2)))
        .add(&closed_form(data, "E_M")?)
        .add(&s().mul(&r()).mul(&PowerSum::sqrt2().add(&PowerSum::one())).scale(&rat(7, 36)))
        .add(&s_pow(3).mul(&r()).scale(&rat(8, 27)))
        .add(
            &s_pow(3)
                .mul(&jm)
                .scale(&rat(4, 9))
                .mul(&PowerSum::one().add(&jm.mul(&r())).add(&jm.pow(2).mul(&r().pow(2)).scale(&rat(1, 3)))),
        );
    let ratio = Box::new(poly(big.mul(&r())));
    Ok(sum(vec![
        poly(head),
        prod(vec![poly(big.pow(4).scale(&int(5))), ConstantExpr::Geometric { ratio: ratio.clone(), power: 1 }]),
        prod(vec![poly(big.pow(5).mul(&r()).scale(&rat(2, 3))), ConstantExpr::Geometric { ratio, power: 2 }]),
    ]))
}

fn z2_max(data: &AppendixData) -> Result<ConstantExpr, CatalogError> {
    Ok(sum(vec![poly(c(1, 2).add(&s().mul(&r()).scale(&rat(2, 3)))), prod(vec![z2r_max(data)?, poly(r().pow(2))])]))
}

fn five_s2_24() -> PowerSum {
    s_pow(2).scale(&rat(5, 24))
}

/// Symbolic form of a named constant.
pub fn build_constant(data: &AppendixData, name: &str) -> Result<ConstantExpr, CatalogError> {
    let y1 = || poly(y1_max());
    let y1sq = || poly(y1_max().pow(2));
    Ok(match name {
        "j_m" => poly(small_j_max()),
        "J_M" => poly(big_j_max()),
        "Y1M" => y1(),
        "Y1RM" => poly(y1r_max()),
        "E_M" => poly(closed_form(data, "E_M")?),
        "z2RM" => z2r_max(data)?,
        "z2M" => z2_max(data)?,
        "M_q" => poly(m_q(data)?),
        "M_Lq" => poly(m_lq(data)?),
        "V_M" => sum(vec![
            prod(vec![
                y1(),
                sum(vec![
                    prod(vec![poly(c(2, 1)), z2_max(data)?, poly(m_q(data)?)]),
                    poly(five_s2_24().mul(&m_lq(data)?)),
                ]),
            ]),
            prod(vec![
                y1sq(),
                sum(vec![
                    prod(vec![poly(PowerSum::sqrt2().add(&PowerSum::one()).scale(&rat(1, 14)).mul(&r().pow(2))), z2_max(data)?]),
                    poly(s_pow(2).mul(&r().pow(2)).scale(&rat(5, 288))),
                ]),
            ]),
        ]),
        "T_M" => prod(vec![
            y1sq(),
            poly(r().pow(4)),
            sum(vec![
                prod(vec![poly(PowerSum::sqrt2().add(&PowerSum::one()).scale(&rat(1, 9))), z2_max(data)?]),
                poly(s_pow(2).scale(&rat(5, 192))),
            ]),
        ]),
        "M_G1" => poly(m_g1(data)?),
        "M_G2" | "M_G3" | "M_G40" | "M_G41" | "M_G5" | "M_G6" | "M_G7" => poly(closed_form(data, name)?),
        "M_G4" => poly(closed_form(data, "M_G40")?.add(&closed_form(data, "M_G41")?)),
        "M1" => prod(vec![y1sq(), z2_max(data)?, poly(m_g1(data)?)]),
        "M2" => prod(vec![poly(c(2, 1)), y1(), z2_max(data)?, poly(y1r_max()), poly(closed_form(data, "M_G2")?)]),
        "M3" => prod(vec![
            y1(),
            z2r_max(data)?,
            poly(PowerSum::one().add(&s().mul(&r()).scale(&rat(1, 3)))),
            poly(closed_form(data, "M_G3")?),
        ]),
        "M4" => prod(vec![y1(), build_constant(data, "M_G4")?]),
        "M5" => prod(vec![poly(five_s2_24()), y1sq(), poly(closed_form(data, "M_G5")?)]),
        "M6" => prod(vec![poly(five_s2_24()), y1(), poly(y1r_max()), poly(closed_form(data, "M_G6")?)]),
        "M7" => prod(vec![poly(five_s2_24()), y1(), poly(closed_form(data, "M_G7")?)]),
        "M_sum" => sum(
            ["M1", "M2", "M3", "M4", "M5", "M6", "M7"]
                .iter()
                .map(|n| build_constant(data, n))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        other => return Err(CatalogError::Unknown(other.to_string())),
    })
}

/// Whether an enclosure agrees with a printed decimal truncated to its
/// shown digits: the enclosure must lie in `[v, v + 10^-d]`.
pub fn matches_printed(value: &Interval, printed: &str) -> bool {
    let (Ok(v), d) = (from_decimal(printed), decimal_places(printed)) else {
        return false;
    };
    let ulp = Rational::new(1.into(), num_bigint::BigInt::from(10).pow(d as u32));
    *value.lo() >= v && *value.hi() <= v + ulp
}

pub fn eval_constant(expr: &ConstantExpr, ctx: &EvalContext) -> Result<Interval, NumericsError> {
    expr.eval(ctx)
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivedConstant {
    pub name: String,
    pub rho: String,
    pub lo: String,
    pub hi: String,
    pub monotone: bool,
    pub expression: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<PowerTerm>>,
    #[serde(skip)]
    pub value: Interval,
}

pub fn derive(data: &AppendixData, name: &str, ctx: &EvalContext) -> Result<DerivedConstant, CatalogError> {
    let expr = build_constant(data, name)?;
    let value = expr.eval(ctx).map_err(|source| CatalogError::Eval { name: name.to_string(), source })?;
    Ok(DerivedConstant {
        name: name.to_string(),
        rho: format_rational(&ctx.rho),
        lo: to_decimal_directed(value.lo(), 12, false),
        hi: to_decimal_directed(value.hi(), 12, true),
        monotone: expr.monotone(),
        expression: expr.render(),
        terms: expr.as_power_sum().map(|p| p.export()),
        value,
    })
}

/// All catalog constants at one `rho`, in catalog order.
pub fn derive_all(data: &AppendixData, rho: &Rational) -> Result<Vec<DerivedConstant>, CatalogError> {
    use rayon::prelude::*;
    let ctx = EvalContext::new(rho).map_err(|source| CatalogError::Eval { name: "rho".into(), source })?;
    CATALOG.par_iter().map(|n| derive(data, n, &ctx)).collect()
}
