//! Symbolic ring Q[S][x^(-1/2), e^(-x)] and exact table verification.

pub mod quasi;
pub mod series;
pub mod tables;
pub mod verify;

pub use series::{FormalSeries, SeriesOp, TermKey};
pub use tables::{table_part, table_series, TABLE_NAMES};
pub use verify::{
    verify_all, verify_auxiliary_identities, verify_e_table, verify_g04_tables, verify_q_table, verify_r_table,
    CheckItem, Mismatch, TableCheckReport,
};
