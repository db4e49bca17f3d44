//! Lemma-level inequality certificates and the region statement.

pub mod inner;
pub mod omega4;
pub mod outer;
pub mod quadrature;
pub mod radius;
pub mod report;
pub mod suite;

pub use inner::{check_inner_interval, InnerParams};
pub use omega4::check_omega_4;
pub use outer::{check_omega_12, check_omega_12_with, check_omega_i, check_z0_bounds, sector_constants};
pub use quadrature::{quad_enclosure, QuadratureEnclosure};
pub use radius::check_taylor_radius;
pub use report::{CertificateReport, Inequality, Relation};
pub use suite::{run_all, run_scope, Scope, SuiteOptions, SuiteResult, REGION};
