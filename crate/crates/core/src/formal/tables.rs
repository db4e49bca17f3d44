//! Table data lifted into the formal ring.

use super::series::{FormalSeries, TermKey};
use crate::data::AppendixData;

pub const TABLE_NAMES: [&str; 10] = ["r", "q", "E", "t", "u", "tau", "t_tilde", "nu", "u_tilde", "p"];

/// Sum over all entries of a named table: each entry contributes
/// `coeff S^k x^(-j/2) e^(-m x)`.
pub fn table_series(data: &AppendixData, name: &str) -> FormalSeries {
    FormalSeries::from_terms(
        data.table(name).map(|e| (TermKey::new(e.s_power, e.j, e.m), AppendixData::coeff(e))),
    )
}

/// The single polynomial of a table at one half-power.
pub fn table_part(data: &AppendixData, name: &str, j: i32) -> FormalSeries {
    table_series(data, name).part_j(j)
}
