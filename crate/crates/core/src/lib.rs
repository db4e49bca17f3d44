//! Validated numerics for the pole-free region of the Painlevé I tritronquée.
//!
//! Every inequality is checked with exact rational interval arithmetic; the
//! [`evaluator`] module provides a floating-point companion used for
//! cross-validation only.

pub mod numerics;
pub mod polybound;
pub mod data;
pub mod formal;
pub mod functionals;
pub mod certificates;
pub mod evaluator;
