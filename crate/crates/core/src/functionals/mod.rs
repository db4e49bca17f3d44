//! Weighted l1 functionals, the catalog of derived constants and their
//! cross-checks against the tables.

pub mod catalog;
pub mod crosscheck;
pub mod exppoly;
pub mod powersum;

pub use catalog::{build_constant, matches_printed, derive, derive_all, eval_constant, CatalogError, DerivedConstant, CATALOG, REFERENCE_VALUES};
pub use crosscheck::{crosscheck_functional_tables, CrosscheckReport};
pub use exppoly::{f_functional, f_functional_value, ExpPoly, FKind, FunctionalError};
pub use powersum::{monotone_check, ConstantExpr, EvalContext, PowerSum};
