//! Floating-point companion: frame maps, far-field values, Taylor integration
//! and pole location. Nothing here is rigorous; it cross-checks the certificates.

pub mod asymptotic;
pub mod complex;
pub mod frames;
pub mod integrate;
pub mod pole;
pub mod point;
pub mod taylor;
pub mod zero;

use thiserror::Error;

pub use asymptotic::{asymptotic_y, Asymptotic, Region, RegionKind};
pub use complex::{ComplexValue, Work, DEFAULT_BITS, MIN_BITS};
pub use frames::{frame_map, g_to_y, y_to_g, Frame, FramePoint};
pub use integrate::{integrate, integrate_round_trip, matching_data, IntegrateOptions, Integration, State, Trajectory};
pub use point::{evaluate_y, Method, PointValue};
pub use pole::{origin_state, pole_estimate, pole_scan, PoleEstimate, PoleOptions, PoleScan};
pub use taylor::{taylor_coeffs, SeriesState};
pub use zero::{y_at_zero, ZeroEnclosure};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("working precision {0} bits is below the {MIN_BITS}-bit floor")]
    Precision(usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("region precondition violated: {0}")]
    Region(String),
    #[error("series order {0} is below 2")]
    Order(usize),
    #[error("pole proximity at t = {at:?}; estimated pole at {estimate:?}")]
    Pole { at: (f64, f64), estimate: (f64, f64) },
    #[error("no pole within horizon {horizon}")]
    NotFound { horizon: f64 },
    #[error("step limit {0} reached")]
    StepLimit(usize),
    #[error("arithmetic failure: {0}")]
    Arithmetic(String),
    #[error("precondition: {0}")]
    Precondition(String),
}

/// Maclaurin coefficients of `g` at `t = 0` from the integrated origin data.
pub fn maclaurin(order: usize, opts: &IntegrateOptions, w: &Work) -> Result<SeriesState, EvalError> {
    let o = origin_state(opts, w)?;
    taylor_coeffs(&o.g, &o.gp, &o.t, order, w)
}
