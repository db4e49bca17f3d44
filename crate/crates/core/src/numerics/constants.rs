//! Enclosures of the fixed irrational constants used by the certificates.

use std::sync::OnceLock;

use num_bigint::BigInt;

use super::interval::Interval;
use super::rational::{rat, Rational};
use super::roots::{root_enclosure, sqrt_enclosure};

// 3.14159265358979323846264338327950288419716939937510...
const PI_LO: &str = "3.1415926535897932384626433832795028841";
const PI_HI: &str = "3.1415926535897932384626433832795028842";

/// Stored rational bracket of pi, width `1e-37`.
pub fn pi_enclosure() -> Interval {
    let lo = super::rational::from_decimal(PI_LO).expect("pi literal");
    let hi = super::rational::from_decimal(PI_HI).expect("pi literal");
    Interval::new(lo, hi).expect("ordered pi bracket")
}

/// Tolerance used for all stored constant enclosures.
pub fn default_tol() -> Rational {
    Rational::new(1.into(), BigInt::from(10).pow(30))
}

#[derive(Clone, Debug)]
pub struct Constants {
    pub pi: Interval,
    /// Modulus of the Stokes constant, `sqrt(6 / (5 pi))`.
    pub abs_s: Interval,
    /// `|x0| = (24 * 17/10)^(5/4) / 30`.
    pub abs_x0: Interval,
    /// Modulus of the matching point in the z plane.
    pub z0mod: Rational,
    pub sqrt2: Interval,
    /// `2^(1/4)`.
    pub fourth_root2: Interval,
}

impl Constants {
    pub fn compute() -> Self {
        let tol = default_tol();
        let pi = pi_enclosure();
        let six_over_5pi = Interval::from_int(6).div(&pi.scale(&rat(5, 1))).expect("pi > 0");
        let abs_s = sqrt_enclosure(&six_over_5pi, &tol).expect("positive");
        let base = Interval::point(rat(204, 5));
        let r4 = root_enclosure(&base, 4, &tol).expect("positive");
        let abs_x0 = r4.powi(5).scale(&rat(1, 30));
        let sqrt2 = sqrt_enclosure(&Interval::from_int(2), &tol).expect("positive");
        let fourth_root2 = root_enclosure(&Interval::from_int(2), 4, &tol).expect("positive");
        Constants { pi, abs_s, abs_x0, z0mod: rat(17, 10), sqrt2, fourth_root2 }
    }

    /// Shared instance, computed once.
    pub fn get() -> &'static Constants {
        static CELL: OnceLock<Constants> = OnceLock::new();
        CELL.get_or_init(Constants::compute)
    }
}
