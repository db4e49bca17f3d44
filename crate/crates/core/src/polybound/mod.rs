//! Rational polynomials, l1 norms and partition-based sup bounds.

pub mod bound;
pub mod inner;
pub mod partition;
pub mod poly;

pub use bound::{
    certify_below, inf_bound, piece_bounds, ratio_with_den_lower, rational_sup_bound, sup_bound, Certification,
    PieceBound, RatioOutcome,
};
pub use inner::InnerPolys;
pub use partition::{PartitionError, PartitionPlan, PartitionRecord};
pub use poly::{l1_norm, Poly, PolyOp};
