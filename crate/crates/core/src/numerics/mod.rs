//! Exact rationals, outward-rounded intervals and constant enclosures.

pub mod constants;
pub mod interval;
pub mod rational;
pub mod roots;

pub use constants::{pi_enclosure, Constants};
pub use interval::{ArithOp, Interval};
pub use rational::{int, parse_rational, rat, Rational};
pub use roots::{pow_frac, root_enclosure, sqrt_enclosure};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumericsError {
    #[error("division by an interval containing zero")]
    DivisionByZero,
    #[error("interval endpoints out of order")]
    Inverted,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}
